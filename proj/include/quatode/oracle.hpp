#pragma once

#include <functional>

#include "quatode/qmatrix.hpp"

namespace quatode {

struct IntegrationResult {
    QVector state;
    long steps = 0;
    double max_step_error = 0.0;
};

/// Fixed-step classical RK4 for x' = A(t) x over quaternion states.
IntegrationResult rk4_integrate(const std::function<QMatrix(double)>& a, double t0,
                                const QVector& x0, double t1, double h);

/// Constant-coefficient convenience overload.
IntegrationResult rk4_integrate(const QMatrix& a, double t0, const QVector& x0, double t1,
                                double h);

/// max over ts of |(M(t+h) - M(t-h)) / 2h - A M(t)| with h = 1e-5 central
/// differences; the derivative-residual gate for candidate solution matrices.
double fd_residual(const std::function<QMatrix(double)>& m, const QMatrix& a,
                   const std::vector<double>& ts);

/// Classical Laplace expansion; valid only when all entries pairwise commute
/// (checked, rejected otherwise). The independent oracle for det_p on
/// commuting-entry matrices.
Quaternion cofactor_det(const QMatrix& a);

} // namespace quatode
