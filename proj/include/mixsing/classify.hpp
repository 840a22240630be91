#pragma once

#include "mixsing/mixed_poly.hpp"

#include <optional>
#include <vector>

namespace mixsing {

struct RadialType {
    IVec Q;
    long long d_r = 0;
};

struct PolarType {
    IVec P;
    long long d_p = 0;
};

std::optional<RadialType> radial_type(const MixedPolynomial& f);
std::optional<PolarType> polar_type(const MixedPolynomial& f);

struct ConjugateWH {
    std::vector<int> J;  // 0-based
    IVec P;
    long long d = 0;
};
std::optional<ConjugateWH> conjugate_wh(const MixedPolynomial& f);

struct PseudoConjugateWH {
    Monomial M;
    std::vector<int> J;
    MixedPolynomial h;
    IVec P;        // weights of h o iota_J
    IVec P_prime;  // iota_J P
    long long pdeg_check = 0;
};
std::optional<PseudoConjugateWH> pseudo_conjugate_wh(const MixedPolynomial& f);

// Univariate polynomials over Q(i), coefficient of w^s at index s.
using UPoly = std::vector<GaussianRational>;
UPoly upoly_trim(UPoly p);
UPoly upoly_derivative(const UPoly& p);
UPoly upoly_gcd(UPoly a, UPoly b);  // monic
std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b);
// Yun's algorithm: factors a_i with multiplicity i, p = c * prod a_i^i.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);
// Roots of a polynomial (assumed squarefree for best accuracy).
std::vector<cplx> numeric_roots(const UPoly& p);

struct RootMult {
    cplx lambda;
    int mult = 1;
};

// f_face = c * z^pre_nu * zbar^pre_mu * prod_j (z2^a zb2^a' - lambda_j z1^b zb1^b')^{mult_j}
struct GoodPolarFactorization {
    GaussianRational lead_coeff;
    IVec pre_nu, pre_mu;
    long long k = 0;
    long long a = 0, a_pr = 0, b = 0, b_pr = 0;
    UPoly p;  // sum_s c_s w^s, w = z1^b zb1^b' / (z2^a zb2^a')
    std::vector<RootMult> roots;
    bool squarefree() const;
};
std::optional<GoodPolarFactorization> good_polar_factorization(const MixedPolynomial& f_face);
cplx evaluate(const GoodPolarFactorization& g, const CVec& z);

bool is_polar_admissible(const Monomial& m);

struct SimplicialData {
    IMat M, N;
    long long det_N_abs = 0;
    MixedPolynomial laurent_g;
};
std::optional<SimplicialData> simplicial_check(const MixedPolynomial& f);

bool end_monomial_check(const MixedPolynomial& f);

struct AbsoluteConeData {
    std::vector<GaussianRational> coeffs;
    std::vector<int> vars;
    std::vector<long long> exps;
    bool zero_in_open_cone = false;
};
std::optional<AbsoluteConeData> absolute_cone(const MixedPolynomial& f);

}  // namespace mixsing
