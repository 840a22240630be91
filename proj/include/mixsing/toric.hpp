#pragma once

#include "mixsing/mixed_poly.hpp"
#include "mixsing/newton.hpp"

#include <vector>

namespace mixsing {

struct RegularFan2D {
    std::vector<IVec> vertices;  // E1, P1, ..., P_l, E2
    int interior_count() const { return static_cast<int>(vertices.size()) - 2; }
};

struct ChartTransition {
    int j = 0;
    long long gamma = 0;
};

struct PolarTerm {
    long long r_exp;
    long long theta_coef;
    long long u2_nu;
    long long u2_mu;
    GaussianRational coeff;
};

struct PolarChartExpression {
    std::vector<PolarTerm> terms;
    long long divisor_multiplicity = 0;
};

RegularFan2D regular_subdivide(const std::vector<IVec>& rays);
RegularFan2D regular_subdivide(const DualDiagram2D& d);

UnimodularMatrix chart_matrix(const RegularFan2D& fan, int j);
ChartTransition transition_gamma(const RegularFan2D& fan, int j);
long long multiplicity(const MixedPolynomial& f, const IVec& P);

PolarChartExpression strict_transform_polar(const MixedPolynomial& f, const RegularFan2D& fan, int j);
std::vector<PolarTerm> exceptional_intersection(const MixedPolynomial& f, const RegularFan2D& fan, int j);

// f(psi_sigma(u1, u2)) assembled from the polar chart data, u1 = r e^{i theta}.
cplx evaluate_polar_chart(const PolarChartExpression& e, double r, double theta, cplx u2);
// Same expression without the r^d prefactor (the strict transform itself).
cplx evaluate_strict_transform(const PolarChartExpression& e, double r, double theta, cplx u2);

}  // namespace mixsing
