#include "mixsing/zeta.hpp"

#include <map>
#include <stdexcept>

namespace mixsing {

ZetaFunction::ZetaFunction(std::vector<std::pair<long long, long long>> fs) {
    std::map<long long, long long> acc;
    for (auto [d, e] : fs) {
        if (d <= 0) throw std::invalid_argument("zeta factor degree must be positive");
        acc[d] += e;
    }
    for (auto [d, e] : acc)
        if (e != 0) factors.emplace_back(d, e);
}

ZetaFunction ZetaFunction::operator*(const ZetaFunction& o) const {
    auto fs = factors;
    fs.insert(fs.end(), o.factors.begin(), o.factors.end());
    return ZetaFunction(fs);
}

ZetaFunction ZetaFunction::inverse() const {
    auto fs = factors;
    for (auto& f : fs) f.second = -f.second;
    return ZetaFunction(fs);
}

std::string ZetaFunction::to_string() const {
    if (factors.empty()) return "1";
    std::string s;
    for (auto [d, e] : factors) {
        s += d == 1 ? "(1-t)" : "(1-t^" + std::to_string(d) + ")";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

static IntPoly mul_one_minus(const IntPoly& p, long long d) {
    IntPoly q(p.size() + static_cast<size_t>(d), 0);
    for (size_t k = 0; k < p.size(); ++k) {
        q[k] += p[k];
        q[k + static_cast<size_t>(d)] -= p[k];
    }
    return q;
}

static IntPoly trim(IntPoly p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

// Exact division by (1 - t^d).
static IntPoly div_one_minus(const IntPoly& p, long long d) {
    size_t D = static_cast<size_t>(d);
    if (p.size() <= D) throw std::domain_error("zeta does not expand to a polynomial");
    IntPoly q(p.size() - D, 0);
    for (size_t k = 0; k < q.size(); ++k) q[k] = p[k] + (k >= D ? q[k - D] : BigInt(0));
    if (trim(mul_one_minus(q, d)) != trim(p)) throw std::domain_error("zeta does not expand to a polynomial");
    return q;
}

IntPoly zeta_char_poly(const ZetaFunction& z) {
    IntPoly p{1};
    p = mul_one_minus(p, 1);
    for (auto [d, e] : z.factors)
        for (long long i = 0; i < e; ++i) p = mul_one_minus(p, d);
    for (auto [d, e] : z.factors)
        for (long long i = 0; i < -e; ++i) p = trim(div_one_minus(trim(p), d));
    return trim(p);
}

long long degree(const IntPoly& p) {
    for (size_t k = p.size(); k-- > 0;)
        if (p[k] != 0) return static_cast<long long>(k);
    return -1;
}

std::string format_int_poly(const IntPoly& p) {
    std::string s;
    for (size_t k = p.size(); k-- > 0;) {
        if (p[k] == 0) continue;
        BigInt c = p[k];
        bool neg = c < 0;
        if (neg) c = -c;
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        std::string mon = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        if (c != 1 || k == 0) s += c.str() + (mon.empty() ? "" : "*");
        s += mon;
    }
    return s.empty() ? "0" : s;
}

}  // namespace mixsing
