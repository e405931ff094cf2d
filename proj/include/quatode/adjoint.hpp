#pragma once

#include <Eigen/Dense>
#include <complex>

#include "quatode/qmatrix.hpp"

namespace quatode {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Complex adjoint of A = A1 + A2 j: the 2n x 2m block matrix
/// [[A1, A2], [-conj(A2), conj(A1)]]. Unital ring homomorphism.
ComplexMatrix phi_mat(const QMatrix& a);

/// Inverse of phi_mat on block-structured matrices (reads the top blocks).
QMatrix unphi_mat(const ComplexMatrix& c);

/// phi of v = v1 + v2 j: the 2n-tuple (v1; -conj(v2)).
ComplexVector phi_vec(const QVector& v);

/// The adjoint vector (v2; conj(v1)) of phi(v).
ComplexVector phi_vec_star(const QVector& v);

/// Exact inverse of phi_vec; requires even length.
QVector unphi_vec(const ComplexVector& c);

/// The adjoint map on C^{2n}: star(phi(v)) = phi_vec_star(v). Antilinear,
/// squares to -identity, commutes with every phi_mat image.
ComplexVector star_vec(const ComplexVector& c);

/// M^{-1} computed through the complex adjoint: unphi(phi(M)^{-1}).
/// Throws SingularMatrixError when phi(M) is numerically rank-deficient.
QMatrix q_inverse(const QMatrix& m);

/// Solves A x = b through phi(A) c = phi(b). Throws on singular A.
QVector q_solve(const QMatrix& a, const QVector& b);

namespace detail {

/// LU with partial pivoting; throws SingularMatrixError when a pivot falls
/// below 1e-10 times the max row norm.
ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& rhs);

/// Orthonormal null-space basis, singular values below tol * max(1, sigma_max)
/// treated as zero.
ComplexMatrix null_space(const ComplexMatrix& a, double tol = 1e-9);

int numeric_rank(const ComplexMatrix& a, double tol = 1e-9);

/// Minimum-norm least-squares solution and its residual norm.
std::pair<ComplexVector, double> least_squares(const ComplexMatrix& a, const ComplexVector& b);

} // namespace detail

} // namespace quatode
