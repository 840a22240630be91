#include "mixsing/mixed_poly.hpp"

#include <cctype>

namespace mixsing {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) {
        for (size_t i = 0; i < text.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(text[i]))) chars_.push_back({text[i], i});
        end_pos_ = text.size();
    }

    // First pass discovers the largest variable index, second pass builds.
    int max_index() {
        int m = 0;
        for (size_t i = 0; i < chars_.size(); ++i) {
            if (chars_[i].c != 'z') continue;
            size_t j = i + 1;
            if (j < chars_.size() && chars_[j].c == 'b') ++j;
            std::string digits;
            while (j < chars_.size() && std::isdigit(static_cast<unsigned char>(chars_[j].c))) digits += chars_[j++].c;
            if (!digits.empty() && digits.size() < 9) m = std::max(m, std::stoi(digits));
        }
        return m;
    }

    MixedPolynomial run(int n) {
        n_ = n;
        pos_ = 0;
        if (chars_.empty()) fail("empty expression");
        MixedPolynomial p = poly();
        if (pos_ != chars_.size()) fail(std::string("unexpected '") + peek() + "'");
        return p;
    }

private:
    struct Ch {
        char c;
        size_t pos;
    };
    std::vector<Ch> chars_;
    size_t end_pos_ = 0;
    size_t pos_ = 0;
    int n_ = 0;

    char peek() const { return pos_ < chars_.size() ? chars_[pos_].c : '\0'; }
    size_t where() const { return pos_ < chars_.size() ? chars_[pos_].pos : end_pos_; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, where()); }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    MixedPolynomial poly() {
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = peek() == '-';
            ++pos_;
        }
        MixedPolynomial acc = term();
        if (neg) acc = -acc;
        while (peek() == '+' || peek() == '-') {
            bool minus = peek() == '-';
            ++pos_;
            MixedPolynomial t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    bool starts_factor() const {
        char c = peek();
        return is_digit(c) || c == 'i' || c == 'z' || c == '(';
    }

    MixedPolynomial term() {
        if (!starts_factor()) fail(peek() == '\0' ? "unexpected end of input" : std::string("unexpected '") + peek() + "'");
        MixedPolynomial acc = factor();
        while (true) {
            if (peek() == '*') {
                ++pos_;
                if (!starts_factor()) fail("expected factor after '*'");
            } else if (!starts_factor()) {
                break;
            }
            acc = acc * factor();
        }
        return acc;
    }

    MixedPolynomial factor() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            MixedPolynomial inner = poly();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            if (peek() == '^') fail("exponent is only allowed on a variable");
            return inner;
        }
        if (c == 'z') return variable();
        return coefficient();
    }

    unsigned long long uint_digits(const char* what) {
        if (!is_digit(peek())) fail(std::string("expected ") + what);
        std::string s;
        while (is_digit(peek())) s += chars_[pos_++].c;
        if (s.size() > 18) fail("integer literal too large");
        return std::stoull(s);
    }

    MixedPolynomial variable() {
        ++pos_;  // 'z'
        bool bar = false;
        if (peek() == 'b') {
            bar = true;
            ++pos_;
        }
        size_t at = where();
        unsigned long long idx = uint_digits("variable index");
        if (idx == 0) throw ParseError("variable indices start at 1", at);
        if (static_cast<long long>(idx) > n_) throw ParseError("variable index exceeds n", at);
        long long e = 1;
        if (peek() == '^') {
            ++pos_;
            if (peek() == '-') fail("negative exponent");
            e = static_cast<long long>(uint_digits("exponent"));
        }
        Monomial m{1, IVec(n_, 0), IVec(n_, 0)};
        (bar ? m.mu : m.nu)[idx - 1] = e;
        return MixedPolynomial(n_, {m});
    }

    Rational rat() {
        unsigned long long a = uint_digits("number");
        if (peek() == '/') {
            ++pos_;
            size_t at = where();
            unsigned long long b = uint_digits("denominator");
            if (b == 0) throw ParseError("zero denominator", at);
            return Rational(BigInt(a), BigInt(b));
        }
        if (peek() == '.') {
            ++pos_;
            if (!is_digit(peek())) fail("expected digits after '.'");
            std::string frac;
            while (is_digit(peek())) frac += chars_[pos_++].c;
            BigInt scale = 1;
            for (size_t k = 0; k < frac.size(); ++k) scale *= 10;
            return Rational(BigInt(a) * scale + BigInt(frac), scale);
        }
        return Rational(BigInt(a));
    }

    MixedPolynomial coefficient() {
        GaussianRational c;
        if (peek() == 'i') {
            ++pos_;
            c = GaussianRational(0, 1);
        } else {
            Rational r = rat();
            if (peek() == 'i') {
                ++pos_;
                c = GaussianRational(0, r);
            } else {
                c = GaussianRational(r, 0);
            }
        }
        return MixedPolynomial::constant(n_, c);
    }
};

}  // namespace

MixedPolynomial parse(const std::string& text, int nvars) {
    Parser p(text);
    int n = nvars > 0 ? nvars : std::max(1, p.max_index());
    return p.run(n);
}

}  // namespace mixsing
