#include "mixsing/classify.hpp"

#include "mixsing/newton.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mixsing {

namespace {

// Unique primitive w with rows . w constant (kernel of the difference matrix of dimension 1).
std::optional<std::pair<IVec, long long>> constant_weight(const std::vector<IVec>& rows, int n) {
    if (rows.empty()) return std::nullopt;
    IMat diffs;
    for (size_t i = 1; i < rows.size(); ++i) {
        IVec d(n);
        for (int j = 0; j < n; ++j) d[j] = rows[i][j] - rows[0][j];
        diffs.push_back(d);
    }
    auto ker = kernel(diffs, n);
    if (ker.size() != 1) return std::nullopt;
    IVec w = ker[0];
    long long d = dot(w, rows[0]);
    if (d < 0) {
        for (auto& x : w) x = -x;
        d = -d;
    }
    return std::make_pair(w, d);
}

}  // namespace

std::optional<RadialType> radial_type(const MixedPolynomial& f) {
    std::vector<IVec> rows;
    for (const auto& t : f.terms) rows.push_back(t.support());
    auto w = constant_weight(rows, f.n);
    if (!w || w->second <= 0) return std::nullopt;
    for (long long x : w->first)
        if (x < 0) return std::nullopt;
    return RadialType{w->first, w->second};
}

std::optional<PolarType> polar_type(const MixedPolynomial& f) {
    std::vector<IVec> rows;
    for (const auto& t : f.terms) rows.push_back(t.polar());
    auto w = constant_weight(rows, f.n);
    if (!w || w->second == 0) return std::nullopt;
    return PolarType{w->first, w->second};
}

std::optional<ConjugateWH> conjugate_wh(const MixedPolynomial& f) {
    if (f.is_zero()) return std::nullopt;
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 0; mask < (1u << f.n); ++mask) {
        std::vector<int> J;
        for (int j = 0; j < f.n; ++j)
            if (mask & (1u << j)) J.push_back(j);
        subsets.push_back(J);
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (const auto& J : subsets) {
        MixedPolynomial g = conjugate_vars(f, J);
        if (!g.is_holomorphic()) continue;
        auto r = radial_type(g);
        if (r) return ConjugateWH{J, r->Q, r->d_r};
    }
    return std::nullopt;
}

std::optional<PseudoConjugateWH> pseudo_conjugate_wh(const MixedPolynomial& f) {
    if (f.is_zero() || f.laurent) return std::nullopt;
    Monomial M{1, f.terms[0].nu, f.terms[0].mu};
    for (const auto& t : f.terms)
        for (int j = 0; j < f.n; ++j) {
            M.nu[j] = std::min(M.nu[j], t.nu[j]);
            M.mu[j] = std::min(M.mu[j], t.mu[j]);
        }
    Monomial inv{1, M.nu, M.mu};
    for (int j = 0; j < f.n; ++j) {
        inv.nu[j] = -inv.nu[j];
        inv.mu[j] = -inv.mu[j];
    }
    MixedPolynomial h = multiply_monomial(f, inv);
    auto c = conjugate_wh(h);
    if (!c) return std::nullopt;
    IVec Pp = c->P;
    for (int j : c->J) Pp[j] = -Pp[j];
    long long check = pdeg(Pp, f.terms[0]);
    if (check == 0) return std::nullopt;
    return PseudoConjugateWH{M, c->J, h, c->P, Pp, check};
}

UPoly upoly_trim(UPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

UPoly upoly_derivative(const UPoly& p) {
    UPoly d;
    for (size_t s = 1; s < p.size(); ++s) d.push_back(p[s] * GaussianRational(static_cast<long long>(s)));
    return upoly_trim(d);
}

std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a0, const UPoly& b0) {
    UPoly a = upoly_trim(a0), b = upoly_trim(b0);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    if (a.size() < b.size()) return {UPoly{}, a};
    UPoly q(a.size() - b.size() + 1);
    const long long db = static_cast<long long>(b.size()) - 1;
    for (long long i = static_cast<long long>(a.size()) - 1; i >= db; --i) {
        GaussianRational c = a[i] / b.back();
        q[i - db] = c;
        for (long long j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return {upoly_trim(q), upoly_trim(a)};
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    a = upoly_trim(a);
    b = upoly_trim(b);
    while (!b.empty()) {
        UPoly r = upoly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    GaussianRational lc = a.back();
    for (auto& c : a) c /= lc;
    return a;
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p0) {
    UPoly p = upoly_trim(p0);
    std::vector<std::pair<UPoly, int>> out;
    if (p.size() <= 1) return out;
    UPoly dp = upoly_derivative(p);
    UPoly a = upoly_gcd(p, dp);
    UPoly b = upoly_divmod(p, a).first;
    UPoly c = upoly_divmod(dp, a).first;
    UPoly bp = upoly_derivative(b);
    UPoly d(std::max(c.size(), bp.size()));
    for (size_t s = 0; s < d.size(); ++s)
        d[s] = (s < c.size() ? c[s] : GaussianRational()) - (s < bp.size() ? bp[s] : GaussianRational());
    d = upoly_trim(d);
    int i = 1;
    while (b.size() > 1) {
        UPoly ai = upoly_gcd(b, d);
        b = upoly_divmod(b, ai).first;
        c = upoly_divmod(d, ai).first;
        if (ai.size() > 1) out.emplace_back(ai, i);
        bp = upoly_derivative(b);
        d.assign(std::max(c.size(), bp.size()), GaussianRational());
        for (size_t s = 0; s < d.size(); ++s)
            d[s] = (s < c.size() ? c[s] : GaussianRational()) - (s < bp.size() ? bp[s] : GaussianRational());
        d = upoly_trim(d);
        ++i;
    }
    return out;
}

std::vector<cplx> numeric_roots(const UPoly& p0) {
    UPoly p = upoly_trim(p0);
    std::vector<cplx> out;
    int deg = static_cast<int>(p.size()) - 1;
    if (deg < 1) return out;
    std::vector<cplx> c(p.size());
    for (size_t s = 0; s < p.size(); ++s) c[s] = p[s].to_complex();
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[i] / c[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    for (int i = 0; i < deg; ++i) {
        cplx w = es.eigenvalues()[i];
        for (int it = 0; it < 20; ++it) {
            cplx v = c[deg], dv = 0;
            for (int s = deg - 1; s >= 0; --s) {
                dv = dv * w + v;
                v = v * w + c[s];
            }
            if (dv == cplx(0, 0)) break;
            cplx step = v / dv;
            w -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(w))) break;
        }
        out.push_back(w);
    }
    std::sort(out.begin(), out.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

bool GoodPolarFactorization::squarefree() const {
    for (const auto& r : roots)
        if (r.mult != 1) return false;
    return true;
}

std::optional<GoodPolarFactorization> good_polar_factorization(const MixedPolynomial& f) {
    if (f.n != 2) throw std::invalid_argument("good polar factorization requires n=2");
    if (f.terms.size() < 2) return std::nullopt;
    auto ex = [](const Monomial& m) { return IVec{m.nu[0], m.nu[1], m.mu[0], m.mu[1]}; };
    IVec e0 = ex(f.terms[0]);
    IMat diffs;
    for (size_t i = 1; i < f.terms.size(); ++i) {
        IVec e = ex(f.terms[i]), d(4);
        for (int j = 0; j < 4; ++j) d[j] = e[j] - e0[j];
        diffs.push_back(d);
    }
    if (rank(diffs) != 1) return std::nullopt;
    IVec g = primitive(diffs[0]);
    // prefer the orientation with honest (nonnegative) factor exponents, else b > b'
    auto honest = [](const IVec& v) { return v[0] >= 0 && v[2] >= 0 && v[1] <= 0 && v[3] <= 0; };
    IVec ng = g;
    for (auto& x : ng) x = -x;
    if (honest(ng) || (!honest(g) && g[0] - g[2] < 0)) g = ng;
    GoodPolarFactorization F;
    F.b = g[0];
    F.a = -g[1];
    F.b_pr = g[2];
    F.a_pr = -g[3];
    if (F.a == F.a_pr || F.b == F.b_pr) return std::nullopt;
    int piv = 0;
    while (g[piv] == 0) ++piv;
    std::vector<long long> s(f.terms.size());
    for (size_t i = 0; i < f.terms.size(); ++i) s[i] = (ex(f.terms[i])[piv] - e0[piv]) / g[piv];
    long long smin = *std::min_element(s.begin(), s.end());
    long long smax = *std::max_element(s.begin(), s.end());
    F.k = smax - smin;
    F.p.assign(F.k + 1, GaussianRational());
    IVec base;
    for (size_t i = 0; i < f.terms.size(); ++i) {
        F.p[s[i] - smin] = f.terms[i].coeff;
        if (s[i] == smin) base = ex(f.terms[i]);
    }
    F.pre_nu = {base[0], base[1] - F.k * F.a};
    F.pre_mu = {base[2], base[3] - F.k * F.a_pr};
    F.lead_coeff = F.p[0];
    for (const auto& [factor, mult] : squarefree_decomposition(F.p))
        for (cplx w : numeric_roots(factor)) F.roots.push_back({1.0 / w, mult});
    std::sort(F.roots.begin(), F.roots.end(), [](const RootMult& x, const RootMult& y) {
        double ax = std::arg(x.lambda), ay = std::arg(y.lambda);
        return ax != ay ? ax < ay : std::abs(x.lambda) < std::abs(y.lambda);
    });
    return F;
}

cplx evaluate(const GoodPolarFactorization& g, const CVec& z) {
    cplx z1 = z[0], z2 = z[1];
    cplx X = ipow(z2, g.a) * ipow(std::conj(z2), g.a_pr);
    cplx Y = ipow(z1, g.b) * ipow(std::conj(z1), g.b_pr);
    cplx v = g.lead_coeff.to_complex() * ipow(z1, g.pre_nu[0]) * ipow(z2, g.pre_nu[1]) *
             ipow(std::conj(z1), g.pre_mu[0]) * ipow(std::conj(z2), g.pre_mu[1]);
    for (const auto& r : g.roots) v *= ipow(X - r.lambda * Y, r.mult);
    return v;
}

bool is_polar_admissible(const Monomial& m) {
    if (m.nu.size() != 2) throw std::invalid_argument("polar admissibility is defined for n=2");
    return m.nu[0] != m.mu[0] && m.nu[1] != m.mu[1];
}

std::optional<SimplicialData> simplicial_check(const MixedPolynomial& f) {
    if (static_cast<int>(f.terms.size()) != f.n) return std::nullopt;
    SimplicialData S;
    std::vector<Monomial> g;
    for (const auto& t : f.terms) {
        S.M.push_back(t.support());
        S.N.push_back(t.polar());
        g.push_back({t.coeff, t.polar(), IVec(f.n, 0)});
    }
    if (determinant(S.M) == 0) return std::nullopt;
    long long dn = determinant(S.N);
    if (dn == 0) return std::nullopt;
    S.det_N_abs = std::llabs(dn);
    S.laurent_g = MixedPolynomial(f.n, g);
    return S;
}

bool end_monomial_check(const MixedPolynomial& f) {
    NewtonBoundary2D B = boundary2d(f);
    auto ok = [&](const SupportPoint& v, int other) {
        if (v.term_indices.size() != 1)
            throw std::invalid_argument("end vertex (" + std::to_string(v.point[0]) + "," + std::to_string(v.point[1]) +
                                        ") is not simple");
        const Monomial& m = f.terms[v.term_indices[0]];
        if (m.nu[other] == 0 && m.mu[other] == 0) return true;
        return is_polar_admissible(m);
    };
    return ok(B.vertices.front(), 1) && ok(B.vertices.back(), 0);
}

namespace {

using QVec = std::pair<Rational, Rational>;

Rational qdet(const QVec& a, const QVec& b) { return a.first * b.second - a.second * b.first; }

bool in_cone(const QVec& w, const std::vector<QVec>& vs) {
    if (w.first == 0 && w.second == 0) return true;
    for (const auto& v : vs)
        if (qdet(v, w) == 0 && v.first * w.first + v.second * w.second > 0) return true;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            Rational d = qdet(vs[i], vs[j]);
            if (d == 0) continue;
            Rational x = qdet(w, vs[j]) / d, y = qdet(vs[i], w) / d;
            if (x >= 0 && y >= 0) return true;
        }
    return false;
}

}  // namespace

std::optional<AbsoluteConeData> absolute_cone(const MixedPolynomial& f) {
    if (f.is_zero()) return std::nullopt;
    AbsoluteConeData A;
    std::vector<bool> used(f.n, false);
    for (const auto& t : f.terms) {
        if (t.nu != t.mu) return std::nullopt;
        int var = -1;
        for (int j = 0; j < f.n; ++j) {
            if (t.nu[j] == 0) continue;
            if (var >= 0) return std::nullopt;
            var = j;
        }
        if (var < 0 || used[var]) return std::nullopt;
        used[var] = true;
        A.coeffs.push_back(t.coeff);
        A.vars.push_back(var);
        A.exps.push_back(t.nu[var]);
    }
    std::vector<QVec> vs;
    for (const auto& c : A.coeffs) vs.emplace_back(c.re, c.im);
    A.zero_in_open_cone = true;
    for (const auto& v : vs)
        if (!in_cone({-v.first, -v.second}, vs)) A.zero_in_open_cone = false;
    return A;
}

}  // namespace mixsing
