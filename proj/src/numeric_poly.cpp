#include "mixsing/numeric_poly.hpp"

#include <cmath>

namespace mixsing {

NumericPoly::NumericPoly(const MixedPolynomial& f) : n_(f.n) {
    for (const auto& t : f.terms) {
        coeff_.push_back(t.coeff.to_complex());
        nu_.insert(nu_.end(), t.nu.begin(), t.nu.end());
        mu_.insert(mu_.end(), t.mu.begin(), t.mu.end());
    }
}

cplx NumericPoly::operator()(const CVec& z) const {
    double m;
    return eval_mass(z, m);
}

cplx NumericPoly::eval_mass(const CVec& z, double& mass) const {
    cplx s(0, 0);
    mass = 0;
    for (size_t t = 0; t < coeff_.size(); ++t) {
        cplx v = coeff_[t];
        for (int j = 0; j < n_; ++j) {
            long long a = nu_[t * n_ + j], b = mu_[t * n_ + j];
            if (a) v *= ipow(z[j], a);
            if (b) v *= ipow(std::conj(z[j]), b);
        }
        s += v;
        mass += std::abs(v);
    }
    return s;
}

}  // namespace mixsing
