#include "quatode/adjoint.hpp"

#include "quatode/errors.hpp"

namespace quatode {

ComplexMatrix phi_mat(const QMatrix& a) {
    const int n = a.rows();
    const int m = a.cols();
    ComplexMatrix out(2 * n, 2 * m);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < m; ++c) {
            const Complex a1 = a(r, c).complex_first();
            const Complex a2 = a(r, c).complex_second();
            out(r, c) = a1;
            out(r, m + c) = a2;
            out(n + r, c) = -std::conj(a2);
            out(n + r, m + c) = std::conj(a1);
        }
    }
    return out;
}

QMatrix unphi_mat(const ComplexMatrix& c) {
    if (c.rows() % 2 != 0 || c.cols() % 2 != 0) {
        throw DimensionError("unphi_mat requires even dimensions");
    }
    const int n = static_cast<int>(c.rows()) / 2;
    const int m = static_cast<int>(c.cols()) / 2;
    QMatrix out(n, m);
    for (int r = 0; r < n; ++r) {
        for (int cc = 0; cc < m; ++cc) {
            out(r, cc) = Quaternion::from_complex_pair(c(r, cc), c(r, m + cc));
        }
    }
    return out;
}

ComplexVector phi_vec(const QVector& v) {
    const int n = v.size();
    ComplexVector out(2 * n);
    for (int i = 0; i < n; ++i) {
        out(i) = v[i].complex_first();
        out(n + i) = -std::conj(v[i].complex_second());
    }
    return out;
}

ComplexVector phi_vec_star(const QVector& v) {
    const int n = v.size();
    ComplexVector out(2 * n);
    for (int i = 0; i < n; ++i) {
        out(i) = v[i].complex_second();
        out(n + i) = std::conj(v[i].complex_first());
    }
    return out;
}

QVector unphi_vec(const ComplexVector& c) {
    if (c.size() % 2 != 0) {
        throw DimensionError("unphi_vec requires even length");
    }
    const int n = static_cast<int>(c.size()) / 2;
    QVector out(n);
    for (int i = 0; i < n; ++i) {
        out[i] = Quaternion::from_complex_pair(c(i), -std::conj(c(n + i)));
    }
    return out;
}

ComplexVector star_vec(const ComplexVector& c) {
    if (c.size() % 2 != 0) {
        throw DimensionError("star_vec requires even length");
    }
    const int n = static_cast<int>(c.size()) / 2;
    ComplexVector out(2 * n);
    for (int i = 0; i < n; ++i) {
        out(i) = -std::conj(c(n + i));
        out(n + i) = std::conj(c(i));
    }
    return out;
}

namespace detail {

ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& rhs) {
    double max_row_norm = 0.0;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        max_row_norm = std::max(max_row_norm, a.row(r).norm());
    }
    Eigen::PartialPivLU<ComplexMatrix> lu(a);
    const auto diag = lu.matrixLU().diagonal();
    const double pivot_tol = 1e-10 * std::max(1.0, max_row_norm);
    for (Eigen::Index i = 0; i < diag.size(); ++i) {
        if (std::abs(diag(i)) <= pivot_tol) {
            throw SingularMatrixError("numerically rank-deficient system (pivot " +
                                      std::to_string(std::abs(diag(i))) + ")");
        }
    }
    return lu.solve(rhs);
}

ComplexMatrix null_space(const ComplexMatrix& a, double tol) {
    Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double threshold = tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > threshold) {
            ++rank;
        }
    }
    const Eigen::Index dim = a.cols() - rank;
    return svd.matrixV().rightCols(dim);
}

int numeric_rank(const ComplexMatrix& a, double tol) {
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    const auto& sv = svd.singularValues();
    const double threshold = tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > threshold) {
            ++rank;
        }
    }
    return rank;
}

std::pair<ComplexVector, double> least_squares(const ComplexMatrix& a, const ComplexVector& b) {
    Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-9);
    ComplexVector x = svd.solve(b);
    const double residual = (a * x - b).norm();
    return {std::move(x), residual};
}

} // namespace detail

QMatrix q_inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("inverse of non-square matrix");
    }
    const ComplexMatrix pm = phi_mat(m);
    const ComplexMatrix inv =
        detail::lu_solve(pm, ComplexMatrix::Identity(pm.rows(), pm.cols()));
    return unphi_mat(inv);
}

QVector q_solve(const QMatrix& a, const QVector& b) {
    if (a.rows() != a.cols()) {
        throw DimensionError("q_solve requires a square matrix");
    }
    if (a.rows() != b.size()) {
        throw DimensionError("q_solve shape mismatch");
    }
    const ComplexVector c = detail::lu_solve(phi_mat(a), phi_vec(b));
    return unphi_vec(c);
}

} // namespace quatode
