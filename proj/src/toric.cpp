#include "mixsing/toric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mixsing {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Hirzebruch-Jung chain strictly between A and B (det(A,B) > 0).
std::vector<IVec> hj_chain(const IVec& A, const IVec& B) {
    std::vector<IVec> out;
    IVec cur = A;
    while (true) {
        long long d = det2(cur, B);
        if (d == 1) break;
        if (d <= 0) throw std::logic_error("rays are not in increasing angle order");
        // C0 with det(cur, C0) = 1 via extended Euclid on cur = (x, y): x*c1 - y*c0 = 1
        long long x = cur[0], y = cur[1];
        long long old_r = x, r = -y, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            long long q = floor_div(old_r, r);
            std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
            std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
            std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
        }
        // old_s * x + old_t * (-y) = old_r = +-1
        long long c1 = old_s, c0 = old_t;
        if (old_r < 0) {
            c1 = -c1;
            c0 = -c0;
        }
        IVec C0{c0, c1};
        // C = C0 + k*cur, smallest k with det(C, B) >= 0
        long long base = det2(C0, B);
        long long k = -floor_div(base, d);
        if (base + k * d < 0) ++k;
        IVec C{C0[0] + k * cur[0], C0[1] + k * cur[1]};
        out.push_back(C);
        cur = C;
    }
    return out;
}

}  // namespace

RegularFan2D regular_subdivide(const std::vector<IVec>& rays) {
    std::vector<IVec> rs;
    for (const auto& r : rays) {
        if (r.size() != 2 || r[0] <= 0 || r[1] <= 0) throw std::invalid_argument("rays must be strictly positive");
        IVec p = primitive(r);
        if (std::find(rs.begin(), rs.end(), p) == rs.end()) rs.push_back(p);
    }
    std::sort(rs.begin(), rs.end(), [](const IVec& a, const IVec& b) { return det2(a, b) > 0; });
    std::vector<IVec> seq{{1, 0}};
    seq.insert(seq.end(), rs.begin(), rs.end());
    seq.push_back({0, 1});
    RegularFan2D fan;
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
        fan.vertices.push_back(seq[i]);
        for (auto& c : hj_chain(seq[i], seq[i + 1])) fan.vertices.push_back(c);
    }
    fan.vertices.push_back(seq.back());
    return fan;
}

RegularFan2D regular_subdivide(const DualDiagram2D& d) { return regular_subdivide(d.rays); }

UnimodularMatrix chart_matrix(const RegularFan2D& fan, int j) {
    if (j < 0 || j + 1 >= static_cast<int>(fan.vertices.size())) throw std::out_of_range("chart index out of range");
    const IVec &a = fan.vertices[j], &b = fan.vertices[j + 1];
    return UnimodularMatrix(IMat{{a[0], b[0]}, {a[1], b[1]}});
}

ChartTransition transition_gamma(const RegularFan2D& fan, int j) {
    if (j < 1 || j + 1 >= static_cast<int>(fan.vertices.size())) throw std::out_of_range("transition index out of range");
    IMat M = matmul(chart_matrix(fan, j).inverse().a, chart_matrix(fan, j - 1).a);
    if (M[0][1] != 1 || M[1][0] != -1 || M[1][1] != 0) throw std::logic_error("chart transition has unexpected shape");
    return {j, M[0][0]};
}

long long multiplicity(const MixedPolynomial& f, const IVec& P) {
    for (long long p : P)
        if (p <= 0) throw std::invalid_argument("weight must be strictly positive");
    return min_rdeg(P, f);
}

PolarChartExpression strict_transform_polar(const MixedPolynomial& f, const RegularFan2D& fan, int j) {
    if (f.n != 2) throw std::invalid_argument("polar charts require n=2");
    if (j < 1 || j + 1 >= static_cast<int>(fan.vertices.size())) throw std::out_of_range("chart index out of range");
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    const IVec &P = fan.vertices[j], &Q = fan.vertices[j + 1];
    PolarChartExpression e;
    e.divisor_multiplicity = min_rdeg(P, f);
    for (const auto& t : f.terms)
        e.terms.push_back({dot(P, t.support()) - e.divisor_multiplicity, dot(P, t.polar()), dot(Q, t.nu), dot(Q, t.mu),
                           t.coeff});
    return e;
}

std::vector<PolarTerm> exceptional_intersection(const MixedPolynomial& f, const RegularFan2D& fan, int j) {
    std::vector<PolarTerm> out;
    for (const auto& t : strict_transform_polar(f, fan, j).terms)
        if (t.r_exp == 0) out.push_back(t);
    return out;
}

cplx evaluate_strict_transform(const PolarChartExpression& e, double r, double theta, cplx u2) {
    cplx s(0, 0);
    for (const auto& t : e.terms) {
        cplx v = t.coeff.to_complex() * std::pow(r, static_cast<double>(t.r_exp)) *
                 std::polar(1.0, static_cast<double>(t.theta_coef) * theta);
        v *= ipow(u2, t.u2_nu) * ipow(std::conj(u2), t.u2_mu);
        s += v;
    }
    return s;
}

cplx evaluate_polar_chart(const PolarChartExpression& e, double r, double theta, cplx u2) {
    return std::pow(r, static_cast<double>(e.divisor_multiplicity)) * evaluate_strict_transform(e, r, theta, u2);
}

}  // namespace mixsing
