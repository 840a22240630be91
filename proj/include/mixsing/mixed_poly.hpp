#pragma once

#include "mixsing/gaussian_rational.hpp"
#include "mixsing/lattice.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mixsing {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

struct Monomial {
    GaussianRational coeff;
    IVec nu;  // exponents of z
    IVec mu;  // exponents of conj(z)

    IVec support() const;  // nu + mu
    IVec polar() const;    // nu - mu
    bool is_laurent() const;
};

// Sparse mixed polynomial with canonical term order (lexicographic on (nu, mu)).
struct MixedPolynomial {
    int n = 0;
    std::vector<Monomial> terms;
    bool laurent = false;

    MixedPolynomial() = default;
    explicit MixedPolynomial(int nvars) : n(nvars) {}
    MixedPolynomial(int nvars, std::vector<Monomial> ts);

    bool is_zero() const { return terms.empty(); }
    bool is_holomorphic() const;
    size_t size() const { return terms.size(); }

    static MixedPolynomial constant(int nvars, const GaussianRational& c);
    static MixedPolynomial variable(int nvars, int j, bool bar);

    friend bool operator==(const MixedPolynomial& a, const MixedPolynomial& b);
    friend bool operator!=(const MixedPolynomial& a, const MixedPolynomial& b) { return !(a == b); }
};

MixedPolynomial operator+(const MixedPolynomial& a, const MixedPolynomial& b);
MixedPolynomial operator-(const MixedPolynomial& a, const MixedPolynomial& b);
MixedPolynomial operator-(const MixedPolynomial& a);
MixedPolynomial operator*(const MixedPolynomial& a, const MixedPolynomial& b);
MixedPolynomial scale(const MixedPolynomial& a, const GaussianRational& c);
MixedPolynomial multiply_monomial(const MixedPolynomial& a, const Monomial& m);
MixedPolynomial power(const MixedPolynomial& a, unsigned e);

long long rdeg(const IVec& P, const Monomial& m);
long long pdeg(const IVec& P, const Monomial& m);

// Swap nu_j and mu_j for j in J (0-based indices).
MixedPolynomial conjugate_vars(const MixedPolynomial& f, const std::vector<int>& J);
// Complex conjugate of the values: conj(f)(z) as a mixed polynomial.
MixedPolynomial conjugate(const MixedPolynomial& f);

struct Wirtinger {
    std::vector<MixedPolynomial> df;     // d/dz_j
    std::vector<MixedPolynomial> dbarf;  // d/dzbar_j
};
Wirtinger wirtinger(const MixedPolynomial& f);
MixedPolynomial d_dz(const MixedPolynomial& f, int j);
MixedPolynomial d_dzbar(const MixedPolynomial& f, int j);

cplx ipow(cplx z, long long e);
cplx evaluate(const MixedPolynomial& f, const CVec& z);
cplx evaluate(const Monomial& m, const CVec& z);
// Sum of |c z^nu zbar^mu| over terms; scale reference for relative residuals.
double term_mass(const MixedPolynomial& f, const CVec& z);

struct UnimodularMatrix {
    IMat a;  // a[i][k]: exponent of w_k in z_i
    UnimodularMatrix() = default;
    explicit UnimodularMatrix(IMat m);
    int n() const { return static_cast<int>(a.size()); }
    IVec column(int k) const;
    long long det() const { return determinant(a); }
    UnimodularMatrix inverse() const;
    friend UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y);
};

// z_i = prod_k w_k^{sigma_ik}; exponent rows map nu -> nu*sigma.
MixedPolynomial pullback(const MixedPolynomial& f, const UnimodularMatrix& sigma);
// Keep terms whose support lies in the coordinate subspace I (0-based).
MixedPolynomial restrict_to(const MixedPolynomial& f, const std::vector<int>& I);
// Weight vector transformed so that rdeg/pdeg are preserved by pullback.
IVec pullback_weight(const IVec& P, const UnimodularMatrix& sigma);

std::string format(const MixedPolynomial& f);
std::string format_monomial(const IVec& nu, const IVec& mu);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};

// nvars <= 0 infers n from the largest variable index.
MixedPolynomial parse(const std::string& text, int nvars = 0);

}  // namespace mixsing
