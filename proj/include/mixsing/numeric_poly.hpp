#pragma once

#include "mixsing/mixed_poly.hpp"

#include <vector>

namespace mixsing {

// Double-precision copy of a mixed polynomial for fast repeated evaluation.
class NumericPoly {
public:
    NumericPoly() = default;
    explicit NumericPoly(const MixedPolynomial& f);

    int n() const { return n_; }
    bool empty() const { return coeff_.empty(); }
    cplx operator()(const CVec& z) const;
    // Value and sum of term moduli.
    cplx eval_mass(const CVec& z, double& mass) const;

private:
    int n_ = 0;
    std::vector<cplx> coeff_;
    std::vector<long long> nu_, mu_;  // flattened, n_ per term
};

}  // namespace mixsing
