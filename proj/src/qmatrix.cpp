#include "quatode/qmatrix.hpp"

#include <cmath>

#include "quatode/errors.hpp"

namespace quatode {

namespace {

void require_same_size(int a, int b, const char* what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": sizes " + std::to_string(a) + " vs " +
                             std::to_string(b));
    }
}

} // namespace

QVector& QVector::operator+=(const QVector& r) {
    require_same_size(size(), r.size(), "vector addition");
    for (int i = 0; i < size(); ++i) {
        entries_[static_cast<std::size_t>(i)] += r[i];
    }
    return *this;
}

QVector& QVector::operator-=(const QVector& r) {
    require_same_size(size(), r.size(), "vector subtraction");
    for (int i = 0; i < size(); ++i) {
        entries_[static_cast<std::size_t>(i)] -= r[i];
    }
    return *this;
}

QVector operator-(const QVector& a) {
    QVector out(a.size());
    for (int i = 0; i < a.size(); ++i) {
        out[i] = -a[i];
    }
    return out;
}

QVector operator*(const QVector& v, const Quaternion& r) {
    QVector out(v.size());
    for (int i = 0; i < v.size(); ++i) {
        out[i] = v[i] * r;
    }
    return out;
}

QVector operator*(const QVector& v, double s) {
    QVector out(v.size());
    for (int i = 0; i < v.size(); ++i) {
        out[i] = v[i] * s;
    }
    return out;
}

QVector operator*(double s, const QVector& v) { return v * s; }

double norm(const QVector& v) {
    double acc = 0.0;
    for (int i = 0; i < v.size(); ++i) {
        acc += norm_sq(v[i]);
    }
    return std::sqrt(acc);
}

Quaternion inner(const QVector& a, const QVector& b) {
    require_same_size(a.size(), b.size(), "inner product");
    Quaternion acc{};
    for (int i = 0; i < a.size(); ++i) {
        acc += conj(a[i]) * b[i];
    }
    return acc;
}

bool approx_equal(const QVector& a, const QVector& b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    return norm(a - b) <= tol;
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ > 0 ? static_cast<int>(init.begin()->size()) : 0;
    entries_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : init) {
        if (static_cast<int>(row.size()) != cols_) {
            throw DimensionError("ragged matrix initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = Quaternion{1.0};
    }
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& columns) {
    if (columns.empty()) {
        return QMatrix{};
    }
    const int n = columns.front().size();
    QMatrix m(n, static_cast<int>(columns.size()));
    for (int c = 0; c < m.cols(); ++c) {
        require_same_size(columns[static_cast<std::size_t>(c)].size(), n, "column stacking");
        for (int r = 0; r < n; ++r) {
            m(r, c) = columns[static_cast<std::size_t>(c)][r];
        }
    }
    return m;
}

QVector QMatrix::column(int c) const {
    QVector v(rows_);
    for (int r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

QVector QMatrix::row(int r) const {
    QVector v(cols_);
    for (int c = 0; c < cols_; ++c) {
        v[c] = (*this)(r, c);
    }
    return v;
}

QMatrix& QMatrix::operator+=(const QMatrix& r) {
    if (rows_ != r.rows_ || cols_ != r.cols_) {
        throw DimensionError("matrix addition shape mismatch");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += r.entries_[i];
    }
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& r) {
    if (rows_ != r.rows_ || cols_ != r.cols_) {
        throw DimensionError("matrix subtraction shape mismatch");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= r.entries_[i];
    }
    return *this;
}

QMatrix operator-(const QMatrix& a) {
    QMatrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            out(r, c) = -a(r, c);
        }
    }
    return out;
}

QMatrix operator*(const QMatrix& a, double s) {
    QMatrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            out(r, c) = a(r, c) * s;
        }
    }
    return out;
}

QMatrix operator*(double s, const QMatrix& a) { return a * s; }

QMatrix operator*(const Quaternion& q, const QMatrix& a) {
    QMatrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            out(r, c) = q * a(r, c);
        }
    }
    return out;
}

QMatrix operator*(const QMatrix& a, const Quaternion& q) {
    QMatrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            out(r, c) = a(r, c) * q;
        }
    }
    return out;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matrix product shape mismatch: " + std::to_string(a.cols()) +
                             " vs " + std::to_string(b.rows()));
    }
    QMatrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < b.cols(); ++c) {
            Quaternion acc{};
            for (int k = 0; k < a.cols(); ++k) {
                acc += a(r, k) * b(k, c);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

QVector mat_vec(const QMatrix& a, const QVector& x) {
    require_same_size(a.cols(), x.size(), "matrix-vector product");
    QVector out(a.rows());
    for (int r = 0; r < a.rows(); ++r) {
        Quaternion acc{};
        for (int k = 0; k < a.cols(); ++k) {
            acc += a(r, k) * x[k];
        }
        out[r] = acc;
    }
    return out;
}

QMatrix dagger(const QMatrix& a) {
    QMatrix out(a.cols(), a.rows());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            out(c, r) = conj(a(r, c));
        }
    }
    return out;
}

Quaternion trace(const QMatrix& a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("trace of non-square matrix");
    }
    Quaternion acc{};
    for (int i = 0; i < a.rows(); ++i) {
        acc += a(i, i);
    }
    return acc;
}

double norm(const QMatrix& a) {
    double acc = 0.0;
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            acc += norm_sq(a(r, c));
        }
    }
    return std::sqrt(acc);
}

bool approx_equal(const QMatrix& a, const QMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    return norm(a - b) <= tol;
}

} // namespace quatode
