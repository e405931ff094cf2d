#pragma once

#include <span>
#include <vector>

#include "quatode/qmatrix.hpp"

namespace quatode {

/// Factorial enumeration cap for the permutation determinant.
inline constexpr int kDetSizeCap = 8;

/// Disjoint-cycle decomposition in normal form: every cycle starts with its
/// largest element and cycle leaders strictly decrease, so the first leader is
/// n. sign = (-1)^(n - r) with r the number of cycles.
struct CycleNormalForm {
    std::vector<std::vector<int>> cycles; // 1-based indices
    int sign = 1;
};

/// Decomposes a permutation of 1..n given as its image list (perm[i-1] is the
/// image of i). Throws ParseError unless the input is a bijection.
CycleNormalForm cycle_normal_form(std::span<const int> perm);

/// Permutation determinant: sum over S_n of sign * <cycle_1>...<cycle_r> with
/// the factors of each term multiplied strictly left-to-right in normal-form
/// order. Equals the classical determinant whenever all entries commute.
/// Throws SizeCapError above n = 8.
Quaternion det_p(const QMatrix& a);

/// Double determinant det_p(A^+ A) of an n x m matrix, n >= m. Always real
/// and >= 0 up to numerical slack; the imaginary residue is checked and
/// dropped. Above m = 8 the value is taken from det(phi(A^+ A)) instead
/// (equality is validated by the test suite).
double ddet(const QMatrix& a);

/// Wronskian of a square solution matrix: ddet(M) / 2.
double wronskian(const QMatrix& m);

/// Right-independence over H of m column vectors of length n (m <= n): true
/// iff ddet of the stacked matrix exceeds tol.
bool right_independent(const std::vector<QVector>& vectors, double tol = 1e-9);

} // namespace quatode
