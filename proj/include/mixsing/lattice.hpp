#pragma once

#include <cstdint>
#include <vector>

namespace mixsing {

using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;  // row-major

long long gcd_abs(long long a, long long b);
long long gcd_vec(const IVec& v);
// Divide by the gcd of the entries; zero vector is returned unchanged.
IVec primitive(const IVec& v);

long long dot(const IVec& a, const IVec& b);
long long det2(const IVec& a, const IVec& b);

IMat identity(int n);
IMat matmul(const IMat& a, const IMat& b);
long long determinant(const IMat& a);
// Exact inverse of an integer matrix with determinant +-1.
IMat unimodular_inverse(const IMat& a);
int rank(const IMat& rows);
// Integer basis of the rational kernel {x : rows * x = 0}, each vector primitive.
std::vector<IVec> kernel(const IMat& rows, int ncols);

}  // namespace mixsing
