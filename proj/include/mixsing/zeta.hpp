#pragma once

#include "mixsing/gaussian_rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mixsing {

// prod (1 - t^d)^e, factors sorted by d, merged, zero exponents dropped.
struct ZetaFunction {
    std::vector<std::pair<long long, long long>> factors;

    ZetaFunction() = default;
    explicit ZetaFunction(std::vector<std::pair<long long, long long>> fs);

    ZetaFunction operator*(const ZetaFunction& o) const;
    ZetaFunction inverse() const;
    bool is_trivial() const { return factors.empty(); }
    std::string to_string() const;
    friend bool operator==(const ZetaFunction&, const ZetaFunction&) = default;
};

// Integer polynomial, coefficient of t^k at index k.
using IntPoly = std::vector<BigInt>;

// zeta * (1 - t), expanded exactly; throws if the quotient is not a polynomial.
IntPoly zeta_char_poly(const ZetaFunction& z);
long long degree(const IntPoly& p);
std::string format_int_poly(const IntPoly& p);

}  // namespace mixsing
