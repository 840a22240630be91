#pragma once

#include "mixsing/mixed_poly.hpp"

#include <cmath>
#include <random>

namespace testutil {

using namespace mixsing;

inline Monomial random_monomial(std::mt19937_64& rng, int n, int maxe = 4) {
    std::uniform_int_distribution<int> e(0, maxe), c(-5, 5);
    Monomial m;
    m.nu.resize(n);
    m.mu.resize(n);
    for (int j = 0; j < n; ++j) {
        m.nu[j] = e(rng);
        m.mu[j] = e(rng);
    }
    long long re = c(rng), im = c(rng);
    if (re == 0 && im == 0) re = 1;
    m.coeff = GaussianRational(Rational(re), Rational(im));
    return m;
}

inline MixedPolynomial random_poly(std::mt19937_64& rng, int n, int terms, int maxe = 4) {
    std::vector<Monomial> ts;
    for (int k = 0; k < terms; ++k) ts.push_back(random_monomial(rng, n, maxe));
    return MixedPolynomial(n, ts);
}

inline IVec random_weight(std::mt19937_64& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IVec p(n);
    for (auto& x : p) x = d(rng);
    return p;
}

inline CVec random_torus_point(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> r(0.5, 1.5), a(0, 2 * M_PI);
    CVec z(n);
    for (auto& x : z) x = std::polar(r(rng), a(rng));
    return z;
}

// Random unimodular matrix as a product of elementary moves, entries kept in [-3,3].
inline IMat random_unimodular(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> pick(0, n - 1), s(-1, 1);
    for (;;) {
        IMat a = identity(n);
        for (int k = 0; k < 6; ++k) {
            int i = pick(rng), j = pick(rng);
            if (i == j) continue;
            int c = s(rng);
            for (int r = 0; r < n; ++r) a[r][j] += c * a[r][i];
        }
        bool small = true;
        for (auto& row : a)
            for (auto x : row) small = small && std::abs(x) <= 3;
        if (small) return a;
    }
}

inline double rel_err(cplx a, cplx b) {
    double s = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) / s;
}

}  // namespace testutil
