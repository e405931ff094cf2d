#include "quatode/qde.hpp"

#include <cmath>

#include "quatode/adjoint.hpp"
#include "quatode/errors.hpp"
#include "quatode/pdet.hpp"

namespace quatode {

QVector QuasiPolynomialColumn::eval(double t) const {
    if (coeffs.empty()) {
        return QVector{};
    }
    QVector acc(coeffs.front().second.size());
    for (const auto& [power, vec] : coeffs) {
        double weight = 1.0;
        for (int p = 1; p <= power; ++p) {
            weight *= t / static_cast<double>(p);
        }
        acc += vec * weight;
    }
    return acc * exp(lambda * t);
}

QMatrix SolutionBasis::eval(double t) const {
    std::vector<QVector> cols;
    cols.reserve(columns.size());
    for (const auto& column : columns) {
        cols.push_back(column.eval(t));
    }
    return QMatrix::from_columns(cols);
}

SolutionBasis fundamental_matrix(const QMatrix& a, const Spectrum& spectrum) {
    SolutionBasis basis;
    basis.dim = a.rows();
    for (const auto& entry : spectrum.entries) {
        for (const auto& chain : entry.chains) {
            const int m = static_cast<int>(chain.size());
            for (int l = 1; l <= m; ++l) {
                QuasiPolynomialColumn column;
                column.lambda = entry.lambda;
                for (int p = 0; p < l; ++p) {
                    column.coeffs.emplace_back(p, chain[static_cast<std::size_t>(l - 1 - p)]);
                }
                basis.columns.push_back(std::move(column));
            }
        }
    }
    if (static_cast<int>(basis.columns.size()) != basis.dim) {
        throw NumericalError("fundamental matrix column count mismatch");
    }
    return basis;
}

SolutionBasis fundamental_matrix(const QMatrix& a) {
    return fundamental_matrix(a, full_spectrum(a));
}

QMatrix exp_at(const QMatrix& a, double t) {
    const SolutionBasis basis = fundamental_matrix(a);
    const QMatrix m0_inv = q_inverse(basis.eval(0.0));
    return mat_mul(basis.eval(t), m0_inv);
}

QMatrix exp_series(const QMatrix& a, double t, double tol) {
    if (a.rows() != a.cols()) {
        throw DimensionError("exp_series of non-square matrix");
    }
    const int n = a.rows();
    QMatrix b = a * t;
    const double scale = norm(b);
    int squarings = 0;
    if (scale > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(scale / 0.5)));
        b = b * std::pow(2.0, -squarings);
    }
    QMatrix sum = QMatrix::identity(n);
    QMatrix term = QMatrix::identity(n);
    for (int s = 1; s <= 200; ++s) {
        term = mat_mul(term, b) * (1.0 / static_cast<double>(s));
        sum += term;
        if (norm(term) <= tol * norm(sum)) {
            break;
        }
    }
    for (int s = 0; s < squarings; ++s) {
        sum = mat_mul(sum, sum);
    }
    return sum;
}

QMatrix commuting_split_exp(const QMatrix& d, const QMatrix& nil, double t) {
    if (d.rows() != d.cols() || nil.rows() != nil.cols() || d.rows() != nil.rows()) {
        throw DimensionError("commuting_split_exp shape mismatch");
    }
    const int n = d.rows();
    const QMatrix commutator = mat_mul(d, nil) - mat_mul(nil, d);
    if (norm(commutator) > 1e-10) {
        throw NonCommutingSplitError(
            "split rejected: D*N != N*D (commutator norm " + std::to_string(norm(commutator)) +
            "); exp((D+N)t) = exp(Dt)exp(Nt) needs commuting parts");
    }
    QMatrix power = QMatrix::identity(n);
    QMatrix series = QMatrix::identity(n);
    double factorial = 1.0;
    for (int s = 1; s < n; ++s) {
        power = mat_mul(power, nil);
        factorial *= static_cast<double>(s);
        series += power * (std::pow(t, s) / factorial);
    }
    if (norm(mat_mul(power, nil)) > 1e-10) {
        throw NonCommutingSplitError("split rejected: N is not nilpotent (|N^n| = " +
                                     std::to_string(norm(mat_mul(power, nil))) + ")");
    }
    return mat_mul(exp_series(d, t), series);
}

QVector solve_ivp(const QMatrix& a, double t0, const QVector& x0, double t) {
    if (a.rows() != x0.size()) {
        throw DimensionError("solve_ivp dimension mismatch");
    }
    const SolutionBasis basis = fundamental_matrix(a);
    const QVector constants = q_solve(basis.eval(0.0), x0);
    QVector out(x0.size());
    for (std::size_t i = 0; i < basis.columns.size(); ++i) {
        out += basis.columns[i].eval(t - t0) * constants[static_cast<int>(i)];
    }
    return out;
}

Quaternion QPolynomial::eval(double t) const {
    Quaternion acc{};
    double power = 1.0;
    for (const Quaternion& c : coeff) {
        acc += c * power;
        power *= t;
    }
    return acc;
}

QPolynomial QPolynomial::antiderivative() const {
    QPolynomial out;
    out.coeff.resize(coeff.size() + 1);
    for (std::size_t p = 0; p < coeff.size(); ++p) {
        out.coeff[p + 1] = coeff[p] / static_cast<double>(p + 1);
    }
    return out;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial out;
    if (a.coeff.empty() || b.coeff.empty()) {
        return out;
    }
    out.coeff.resize(a.coeff.size() + b.coeff.size() - 1);
    for (std::size_t p = 0; p < a.coeff.size(); ++p) {
        for (std::size_t q = 0; q < b.coeff.size(); ++q) {
            out.coeff[p + q] += a.coeff[p] * b.coeff[q];
        }
    }
    return out;
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial out = a;
    if (b.coeff.size() > out.coeff.size()) {
        out.coeff.resize(b.coeff.size());
    }
    for (std::size_t p = 0; p < b.coeff.size(); ++p) {
        out.coeff[p] -= b.coeff[p];
    }
    return out;
}

double QPolynomial::max_coeff_norm() const {
    double m = 0.0;
    for (const Quaternion& c : coeff) {
        m = std::max(m, norm(c));
    }
    return m;
}

QVector solve_diagonal(const std::vector<QPolynomial>& coeffs, double t0, const QVector& x0,
                       double t) {
    const int n = static_cast<int>(coeffs.size());
    if (x0.size() != n) {
        throw DimensionError("solve_diagonal dimension mismatch");
    }
    QVector out(n);
    for (int i = 0; i < n; ++i) {
        const QPolynomial& a = coeffs[static_cast<std::size_t>(i)];
        QPolynomial integral = a.antiderivative();
        // shift so the integral starts at t0
        const Quaternion at_t0 = integral.eval(t0);
        if (integral.coeff.empty()) {
            integral.coeff.resize(1);
        }
        integral.coeff[0] -= at_t0;
        const QPolynomial commutator = a * integral - integral * a;
        const double tol =
            1e-10 * std::max(1.0, a.max_coeff_norm() * integral.max_coeff_norm());
        if (commutator.max_coeff_norm() > tol) {
            throw CommutativityError(
                "coefficient " + std::to_string(i) +
                " does not commute with its integral (max commutator coefficient " +
                std::to_string(commutator.max_coeff_norm()) + ")");
        }
        out[i] = exp(integral.eval(t)) * x0[i];
    }
    return out;
}

std::function<QVector(double)> superpose(const SolutionBasis& basis,
                                         const std::vector<Quaternion>& constants) {
    if (constants.size() != basis.columns.size()) {
        throw DimensionError("superpose: constant count " + std::to_string(constants.size()) +
                             " != column count " + std::to_string(basis.columns.size()));
    }
    return [basis, constants](double t) {
        QVector out(basis.dim);
        for (std::size_t i = 0; i < basis.columns.size(); ++i) {
            out += basis.columns[i].eval(t) * constants[i];
        }
        return out;
    };
}

LiouvilleReport liouville_check(const QMatrix& a, double t0, double t1) {
    const SolutionBasis basis = fundamental_matrix(a);
    const double w0 = wronskian(basis.eval(t0));
    if (w0 <= 1e-12) {
        throw NumericalError("degenerate basis: W(t0) = " + std::to_string(w0));
    }
    const double re_trace = real_part(trace(a));
    constexpr int kSamples = 8;
    LiouvilleReport report;
    if (std::abs(re_trace) < 1e-12) {
        for (int k = 1; k <= kSamples; ++k) {
            const double t = t0 + (t1 - t0) * k / kSamples;
            const double ratio = wronskian(basis.eval(t)) / w0;
            report.max_rel_err = std::max(report.max_rel_err, std::abs(ratio - 1.0));
        }
        return report;
    }
    std::vector<double> ratios;
    for (int k = 1; k <= kSamples; ++k) {
        const double t = t0 + (t1 - t0) * k / kSamples;
        const double w = wronskian(basis.eval(t));
        if (w <= 0.0) {
            throw NumericalError("Wronskian lost positivity at t = " + std::to_string(t));
        }
        ratios.push_back(std::log(w / w0) / (re_trace * (t - t0)));
    }
    double mean = 0.0;
    for (double r : ratios) {
        mean += r;
    }
    mean /= static_cast<double>(ratios.size());
    report.factor = mean;
    for (double r : ratios) {
        report.max_rel_err = std::max(report.max_rel_err, std::abs(r - mean) / std::abs(mean));
    }
    return report;
}

} // namespace quatode
