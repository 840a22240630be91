#include "mixsing/mixed_poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace mixsing {

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << '/' << denominator(q);
    return os.str();
}

std::string to_string(const GaussianRational& c) {
    if (c.im == 0) return to_string(c.re);
    std::string im = (c.im == 1 ? "" : c.im == -1 ? "-" : to_string(c.im)) + "i";
    if (c.re == 0) return im;
    std::string s = to_string(c.re);
    if (c.im > 0) s += "+";
    return "(" + s + im + ")";
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational n2 = o.norm2();
    if (n2 == 0) throw std::domain_error("division by zero");
    *this *= o.conj();
    re /= n2;
    im /= n2;
    return *this;
}

IVec Monomial::support() const {
    IVec s(nu.size());
    for (size_t i = 0; i < nu.size(); ++i) s[i] = nu[i] + mu[i];
    return s;
}

IVec Monomial::polar() const {
    IVec s(nu.size());
    for (size_t i = 0; i < nu.size(); ++i) s[i] = nu[i] - mu[i];
    return s;
}

bool Monomial::is_laurent() const {
    for (size_t i = 0; i < nu.size(); ++i)
        if (nu[i] < 0 || mu[i] < 0) return true;
    return false;
}

namespace {

using Key = std::pair<IVec, IVec>;

MixedPolynomial from_map(int n, std::map<Key, GaussianRational>& acc) {
    MixedPolynomial f(n);
    for (auto& [k, c] : acc) {
        if (c.is_zero()) continue;
        Monomial m{c, k.first, k.second};
        if (m.is_laurent()) f.laurent = true;
        f.terms.push_back(std::move(m));
    }
    return f;
}

}  // namespace

MixedPolynomial::MixedPolynomial(int nvars, std::vector<Monomial> ts) : n(nvars) {
    std::map<Key, GaussianRational> acc;
    for (auto& m : ts) {
        if (static_cast<int>(m.nu.size()) != n || static_cast<int>(m.mu.size()) != n)
            throw std::invalid_argument("monomial length does not match variable count");
        acc[{m.nu, m.mu}] += m.coeff;
    }
    *this = from_map(n, acc);
}

bool MixedPolynomial::is_holomorphic() const {
    for (const auto& t : terms)
        for (long long e : t.mu)
            if (e != 0) return false;
    return true;
}

MixedPolynomial MixedPolynomial::constant(int nvars, const GaussianRational& c) {
    return MixedPolynomial(nvars, {Monomial{c, IVec(nvars, 0), IVec(nvars, 0)}});
}

MixedPolynomial MixedPolynomial::variable(int nvars, int j, bool bar) {
    Monomial m{1, IVec(nvars, 0), IVec(nvars, 0)};
    (bar ? m.mu : m.nu)[j] = 1;
    return MixedPolynomial(nvars, {m});
}

bool operator==(const MixedPolynomial& a, const MixedPolynomial& b) {
    if (a.n != b.n || a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i) {
        const auto &x = a.terms[i], &y = b.terms[i];
        if (x.nu != y.nu || x.mu != y.mu || x.coeff != y.coeff) return false;
    }
    return true;
}

static void check_same_n(const MixedPolynomial& a, const MixedPolynomial& b) {
    if (a.n != b.n) throw std::invalid_argument("variable count mismatch");
}

MixedPolynomial operator+(const MixedPolynomial& a, const MixedPolynomial& b) {
    check_same_n(a, b);
    std::vector<Monomial> ts = a.terms;
    ts.insert(ts.end(), b.terms.begin(), b.terms.end());
    return MixedPolynomial(a.n, std::move(ts));
}

MixedPolynomial operator-(const MixedPolynomial& a) { return scale(a, GaussianRational(-1)); }

MixedPolynomial operator-(const MixedPolynomial& a, const MixedPolynomial& b) { return a + (-b); }

MixedPolynomial scale(const MixedPolynomial& a, const GaussianRational& c) {
    std::vector<Monomial> ts = a.terms;
    for (auto& t : ts) t.coeff *= c;
    return MixedPolynomial(a.n, std::move(ts));
}

MixedPolynomial multiply_monomial(const MixedPolynomial& a, const Monomial& m) {
    std::vector<Monomial> ts = a.terms;
    for (auto& t : ts) {
        t.coeff *= m.coeff;
        for (int j = 0; j < a.n; ++j) {
            t.nu[j] += m.nu[j];
            t.mu[j] += m.mu[j];
        }
    }
    return MixedPolynomial(a.n, std::move(ts));
}

MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b) {
    check_same_n(a, b);
    std::map<Key, GaussianRational> acc;
    for (const auto& x : a.terms)
        for (const auto& y : b.terms) {
            Key k{x.nu, x.mu};
            for (int j = 0; j < a.n; ++j) {
                k.first[j] += y.nu[j];
                k.second[j] += y.mu[j];
            }
            acc[k] += x.coeff * y.coeff;
        }
    return from_map(a.n, acc);
}

MixedPolynomial power(const MixedPolynomial& a, unsigned e) {
    MixedPolynomial r = MixedPolynomial::constant(a.n, 1);
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
}

long long rdeg(const IVec& P, const Monomial& m) { return dot(P, m.support()); }
long long pdeg(const IVec& P, const Monomial& m) { return dot(P, m.polar()); }

MixedPolynomial conjugate_vars(const MixedPolynomial& f, const std::vector<int>& J) {
    std::vector<Monomial> ts = f.terms;
    for (int j : J) {
        if (j < 0 || j >= f.n) throw std::out_of_range("conjugate_vars: index out of range");
        for (auto& t : ts) std::swap(t.nu[j], t.mu[j]);
    }
    return MixedPolynomial(f.n, std::move(ts));
}

MixedPolynomial conjugate(const MixedPolynomial& f) {
    std::vector<Monomial> ts = f.terms;
    for (auto& t : ts) {
        std::swap(t.nu, t.mu);
        t.coeff = t.coeff.conj();
    }
    return MixedPolynomial(f.n, std::move(ts));
}

static MixedPolynomial derive(const MixedPolynomial& f, int j, bool bar) {
    if (j < 0 || j >= f.n) throw std::out_of_range("derivative index out of range");
    std::vector<Monomial> ts;
    for (const auto& t : f.terms) {
        long long e = bar ? t.mu[j] : t.nu[j];
        if (e == 0) continue;
        Monomial m = t;
        m.coeff *= GaussianRational(e);
        (bar ? m.mu : m.nu)[j] -= 1;
        ts.push_back(std::move(m));
    }
    return MixedPolynomial(f.n, std::move(ts));
}

MixedPolynomial d_dz(const MixedPolynomial& f, int j) { return derive(f, j, false); }
MixedPolynomial d_dzbar(const MixedPolynomial& f, int j) { return derive(f, j, true); }

Wirtinger wirtinger(const MixedPolynomial& f) {
    Wirtinger w;
    for (int j = 0; j < f.n; ++j) {
        w.df.push_back(d_dz(f, j));
        w.dbarf.push_back(d_dzbar(f, j));
    }
    return w;
}

cplx ipow(cplx z, long long e) {
    if (e < 0) {
        if (z == cplx(0, 0)) throw std::domain_error("zero coordinate with negative exponent");
        return 1.0 / ipow(z, -e);
    }
    cplx r(1, 0);
    cplx b = z;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

cplx evaluate(const Monomial& m, const CVec& z) {
    cplx v = m.coeff.to_complex();
    for (size_t j = 0; j < z.size(); ++j) {
        if (m.nu[j]) v *= ipow(z[j], m.nu[j]);
        if (m.mu[j]) v *= ipow(std::conj(z[j]), m.mu[j]);
    }
    return v;
}

cplx evaluate(const MixedPolynomial& f, const CVec& z) {
    if (static_cast<int>(z.size()) != f.n) throw std::invalid_argument("evaluate: point length mismatch");
    cplx s(0, 0);
    for (const auto& t : f.terms) s += evaluate(t, z);
    return s;
}

double term_mass(const MixedPolynomial& f, const CVec& z) {
    double s = 0;
    for (const auto& t : f.terms) s += std::abs(evaluate(t, z));
    return s;
}

UnimodularMatrix::UnimodularMatrix(IMat m) : a(std::move(m)) {
    for (const auto& r : a)
        if (r.size() != a.size()) throw std::invalid_argument("matrix is not square");
    long long d = determinant(a);
    if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
}

IVec UnimodularMatrix::column(int k) const {
    IVec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i][k];
    return c;
}

UnimodularMatrix UnimodularMatrix::inverse() const { return UnimodularMatrix(unimodular_inverse(a)); }

UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y) {
    return UnimodularMatrix(matmul(x.a, y.a));
}

static IVec row_times(const IVec& v, const IMat& s) {
    IVec out(s.empty() ? 0 : s[0].size(), 0);
    for (size_t j = 0; j < v.size(); ++j)
        for (size_t k = 0; k < out.size(); ++k) out[k] += v[j] * s[j][k];
    return out;
}

MixedPolynomial pullback(const MixedPolynomial& f, const UnimodularMatrix& sigma) {
    if (sigma.n() != f.n) throw std::invalid_argument("pullback: dimension mismatch");
    std::vector<Monomial> ts;
    for (const auto& t : f.terms) ts.push_back({t.coeff, row_times(t.nu, sigma.a), row_times(t.mu, sigma.a)});
    return MixedPolynomial(f.n, std::move(ts));
}

IVec pullback_weight(const IVec& P, const UnimodularMatrix& sigma) {
    IMat inv = unimodular_inverse(sigma.a);
    IVec out(P.size(), 0);
    for (size_t i = 0; i < P.size(); ++i)
        for (size_t j = 0; j < P.size(); ++j) out[i] += inv[i][j] * P[j];
    return out;
}

MixedPolynomial restrict_to(const MixedPolynomial& f, const std::vector<int>& I) {
    std::vector<bool> keep(f.n, false);
    for (int i : I) {
        if (i < 0 || i >= f.n) throw std::out_of_range("restrict: index out of range");
        keep[i] = true;
    }
    std::vector<Monomial> ts;
    for (const auto& t : f.terms) {
        bool ok = true;
        for (int j = 0; j < f.n && ok; ++j)
            if (!keep[j] && (t.nu[j] != 0 || t.mu[j] != 0)) ok = false;
        if (ok) ts.push_back(t);
    }
    return MixedPolynomial(f.n, std::move(ts));
}

static std::string var_power(const std::string& name, long long e) {
    if (e == 1) return name;
    if (e < 0) return name + "^(" + std::to_string(e) + ")";
    return name + "^" + std::to_string(e);
}

std::string format_monomial(const IVec& nu, const IVec& mu) {
    std::string s;
    for (size_t j = 0; j < nu.size(); ++j) {
        for (int bar = 0; bar < 2; ++bar) {
            long long e = bar ? mu[j] : nu[j];
            if (e == 0) continue;
            if (!s.empty()) s += "*";
            s += var_power((bar ? "zb" : "z") + std::to_string(j + 1), e);
        }
    }
    return s;
}

std::string format(const MixedPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms) {
        GaussianRational c = t.coeff;
        bool negative = c.re < 0 || (c.re == 0 && c.im < 0);
        if (negative) c = -c;
        std::string mono = format_monomial(t.nu, t.mu);
        std::string coeff;
        if (c.im == 0) {
            if (mono.empty() || c.re != 1) coeff = to_string(c.re);
        } else {
            coeff = to_string(c);
        }
        std::string body = coeff;
        if (!mono.empty()) body += (coeff.empty() ? "" : "*") + mono;
        if (first)
            out += negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

}  // namespace mixsing
