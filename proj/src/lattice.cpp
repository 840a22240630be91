#include "mixsing/lattice.hpp"

#include "mixsing/gaussian_rational.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace mixsing {

long long gcd_abs(long long a, long long b) { return std::gcd(std::llabs(a), std::llabs(b)); }

long long gcd_vec(const IVec& v) {
    long long g = 0;
    for (long long x : v) g = gcd_abs(g, x);
    return g;
}

IVec primitive(const IVec& v) {
    long long g = gcd_vec(v);
    if (g <= 1) return v;
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

long long dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

long long det2(const IVec& a, const IVec& b) { return a[0] * b[1] - a[1] * b[0]; }

IMat identity(int n) {
    IMat m(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat matmul(const IMat& a, const IMat& b) {
    size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    IMat out(r, IVec(c, 0));
    for (size_t i = 0; i < r; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("matmul: shape mismatch");
        for (size_t j = 0; j < c; ++j)
            for (size_t t = 0; t < k; ++t) out[i][j] += a[i][t] * b[t][j];
    }
    return out;
}

namespace {

using QMat = std::vector<std::vector<Rational>>;

QMat to_q(const IMat& a) {
    QMat q(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (long long x : a[i]) q[i].emplace_back(x);
    return q;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMat& m, int ncols) {
    std::vector<int> pivots;
    size_t row = 0;
    for (int col = 0; col < ncols && row < m.size(); ++col) {
        size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Rational inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

long long determinant(const IMat& a) {
    size_t n = a.size();
    QMat m = to_q(a);
    Rational det = 1;
    for (size_t c = 0; c < n; ++c) {
        if (m[c].size() != n) throw std::invalid_argument("determinant: not square");
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return static_cast<long long>(numerator(det));
}

IMat unimodular_inverse(const IMat& a) {
    size_t n = a.size();
    long long d = determinant(a);
    if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
    QMat m = to_q(a);
    for (size_t i = 0; i < n; ++i) {
        m[i].resize(2 * n, Rational(0));
        m[i][n + i] = 1;
    }
    rref(m, static_cast<int>(n));
    IMat out(n, IVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = static_cast<long long>(numerator(m[i][n + j]));
    return out;
}

int rank(const IMat& rows) {
    if (rows.empty()) return 0;
    QMat m = to_q(rows);
    return static_cast<int>(rref(m, static_cast<int>(rows[0].size())).size());
}

std::vector<IVec> kernel(const IMat& rows, int ncols) {
    QMat m = to_q(rows);
    std::vector<int> piv = rows.empty() ? std::vector<int>{} : rref(m, ncols);
    std::vector<bool> is_piv(ncols, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<IVec> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_piv[free]) continue;
        std::vector<Rational> x(ncols, Rational(0));
        x[free] = 1;
        for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -m[r][free];
        BigInt l = 1;
        for (auto& q : x) l = boost::multiprecision::lcm(l, denominator(q));
        IVec v(ncols);
        for (int i = 0; i < ncols; ++i) v[i] = static_cast<long long>(numerator(Rational(x[i] * l)));
        basis.push_back(primitive(v));
    }
    return basis;
}

}  // namespace mixsing
