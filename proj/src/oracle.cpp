#include "quatode/oracle.hpp"

#include <cmath>

#include "quatode/errors.hpp"

namespace quatode {

IntegrationResult rk4_integrate(const std::function<QMatrix(double)>& a, double t0,
                                const QVector& x0, double t1, double h) {
    if (h <= 0.0) {
        throw DimensionError("rk4 step size must be positive");
    }
    const long steps = std::max(1L, std::lround((t1 - t0) / h));
    const double step = (t1 - t0) / static_cast<double>(steps);
    QVector x = x0;
    double t = t0;
    double max_err = 0.0;
    for (long s = 0; s < steps; ++s) {
        const QVector k1 = mat_vec(a(t), x);
        const QVector k2 = mat_vec(a(t + 0.5 * step), x + k1 * (0.5 * step));
        const QVector k3 = mat_vec(a(t + 0.5 * step), x + k2 * (0.5 * step));
        const QVector k4 = mat_vec(a(t + step), x + k3 * step);
        x += (k1 + 2.0 * k2 + 2.0 * k3 + k4) * (step / 6.0);
        // cheap local indicator: the spread between the end-point slopes
        max_err = std::max(max_err, norm(k1 - k2 - k3 + k4) * std::abs(step) / 6.0);
        t = t0 + (s + 1) * step;
    }
    return {std::move(x), steps, max_err};
}

IntegrationResult rk4_integrate(const QMatrix& a, double t0, const QVector& x0, double t1,
                                double h) {
    return rk4_integrate([&a](double) { return a; }, t0, x0, t1, h);
}

double fd_residual(const std::function<QMatrix(double)>& m, const QMatrix& a,
                   const std::vector<double>& ts) {
    if (ts.empty()) {
        throw DimensionError("fd_residual needs at least one sample point");
    }
    constexpr double h = 1e-5;
    double worst = 0.0;
    for (double t : ts) {
        const QMatrix derivative = (m(t + h) - m(t - h)) * (1.0 / (2.0 * h));
        worst = std::max(worst, norm(derivative - mat_mul(a, m(t))));
    }
    return worst;
}

namespace {

Quaternion cofactor_det_rec(const QMatrix& a) {
    const int n = a.rows();
    if (n == 1) {
        return a(0, 0);
    }
    Quaternion acc{};
    double sign = 1.0;
    for (int j = 0; j < n; ++j) {
        QMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) {
                    continue;
                }
                minor(r - 1, cc++) = a(r, c);
            }
        }
        acc += sign * (a(0, j) * cofactor_det_rec(minor));
        sign = -sign;
    }
    return acc;
}

} // namespace

Quaternion cofactor_det(const QMatrix& a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("cofactor_det of non-square matrix");
    }
    const int n = a.rows();
    for (int r1 = 0; r1 < n; ++r1) {
        for (int c1 = 0; c1 < n; ++c1) {
            for (int r2 = 0; r2 < n; ++r2) {
                for (int c2 = 0; c2 < n; ++c2) {
                    const Quaternion& p = a(r1, c1);
                    const Quaternion& q = a(r2, c2);
                    if (norm(p * q - q * p) > 1e-10) {
                        throw Error("cofactor_det requires pairwise commuting entries");
                    }
                }
            }
        }
    }
    if (n == 0) {
        return Quaternion{1.0};
    }
    return cofactor_det_rec(a);
}

} // namespace quatode
