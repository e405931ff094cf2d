#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "quatode/qmatrix.hpp"
#include "quatode/spectra.hpp"

namespace quatode {

/// One quasi-polynomial solution column: (sum_p vector_p t^p / p!) * e^{lambda t},
/// the scalar exponential multiplying on the RIGHT of the vector.
struct QuasiPolynomialColumn {
    Quaternion lambda;
    std::vector<std::pair<int, QVector>> coeffs; // (power p, vector)

    QVector eval(double t) const;
};

/// A fundamental matrix in symbolic form: n quasi-polynomial columns, one per
/// chain vector. eval(0) stacks the highest-index chain vectors, so
/// ddet(eval(0)) is nonzero.
struct SolutionBasis {
    int dim = 0;
    std::vector<QuasiPolynomialColumn> columns;

    QMatrix eval(double t) const;
};

/// Fundamental matrix of x' = A x for constant A via the chain structure:
/// the column for chain vector v_l is
/// (v_l + t v_{l-1} + t^2/2! v_{l-2} + ... + t^{l-1}/(l-1)! v_1) e^{lambda t}.
SolutionBasis fundamental_matrix(const QMatrix& a);
SolutionBasis fundamental_matrix(const QMatrix& a, const Spectrum& spectrum);

/// exp(A t) assembled as M(t) M(0)^{-1} from the eigen-route basis.
QMatrix exp_at(const QMatrix& a, double t);

/// Independent route: scaled-and-squared truncated power series of exp(A t).
QMatrix exp_series(const QMatrix& a, double t, double tol = 1e-13);

/// exp((D+N) t) = exp(D t) * sum_{s<n} (N t)^s / s! for commuting D, N with N
/// nilpotent. Rejects non-commuting splits and non-nilpotent N with
/// NonCommutingSplitError.
QMatrix commuting_split_exp(const QMatrix& d, const QMatrix& nil, double t);

/// x(t) = exp(A (t - t0)) x0.
QVector solve_ivp(const QMatrix& a, double t0, const QVector& x0, double t);

/// Polynomial in t with quaternion coefficients (coeff[p] multiplies t^p).
struct QPolynomial {
    std::vector<Quaternion> coeff;

    Quaternion eval(double t) const;
    QPolynomial antiderivative() const; // vanishing at t = 0
    /// Order-preserving product: coefficients multiply left-to-right.
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
    double max_coeff_norm() const;
};

/// Diagonal time-varying system x_i' = a_i(t) x_i with polynomial
/// coefficients. Requires every a_i to commute with its integral from t0
/// (checked coefficientwise); then x_i(t) = exp(int_{t0}^t a_i) x0_i.
QVector solve_diagonal(const std::vector<QPolynomial>& coeffs, double t0, const QVector& x0,
                       double t);

/// x(t) = sum columns_i(t) * r_i with the constants acting on the right.
std::function<QVector(double)> superpose(const SolutionBasis& basis,
                                         const std::vector<Quaternion>& constants);

struct LiouvilleReport {
    /// Measured proportionality factor in log(W(t)/W(t0)) = factor *
    /// Re(tr A) * (t - t0). Zero when Re(tr A) vanishes (W constant).
    double factor = 0.0;
    /// Maximum relative deviation of the pointwise ratios from the factor
    /// (absolute deviation of W(t)/W(t0) from 1 in the traceless case).
    double max_rel_err = 0.0;
};

/// Measures the Wronskian growth factor empirically on a grid over [t0, t1];
/// no specific factor value is assumed anywhere.
LiouvilleReport liouville_check(const QMatrix& a, double t0, double t1);

} // namespace quatode
