#pragma once

#include <initializer_list>
#include <vector>

#include "quatode/quaternion.hpp"

namespace quatode {

/// Dense quaternion column vector.
class QVector {
public:
    QVector() = default;
    explicit QVector(int length) : entries_(static_cast<std::size_t>(length)) {}
    QVector(std::initializer_list<Quaternion> init) : entries_(init) {}
    explicit QVector(std::vector<Quaternion> entries) : entries_(std::move(entries)) {}

    int size() const { return static_cast<int>(entries_.size()); }
    const Quaternion& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    Quaternion& operator[](int i) { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<Quaternion>& entries() const { return entries_; }

    QVector& operator+=(const QVector& r);
    QVector& operator-=(const QVector& r);
    friend QVector operator+(QVector a, const QVector& b) { return a += b; }
    friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
    friend QVector operator-(const QVector& a);

    /// Right scalar action v * r (the module structure used throughout).
    friend QVector operator*(const QVector& v, const Quaternion& r);
    friend QVector operator*(const QVector& v, double s);
    friend QVector operator*(double s, const QVector& v);

private:
    std::vector<Quaternion> entries_;
};

/// sqrt(sum of squared quaternion moduli); the norm convention for all
/// tolerance statements.
double norm(const QVector& v);

/// Inner product (a, b) = sum conj(a_i) b_i.
Quaternion inner(const QVector& a, const QVector& b);

bool approx_equal(const QVector& a, const QVector& b, double tol = kZeroTol);

/// Dense row-major quaternion matrix; immutable in spirit (operations return
/// fresh values).
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}
    QMatrix(std::initializer_list<std::initializer_list<Quaternion>> init);

    static QMatrix identity(int n);
    static QMatrix zero(int rows, int cols) { return QMatrix(rows, cols); }
    /// Stacks column vectors into an n x m matrix.
    static QMatrix from_columns(const std::vector<QVector>& columns);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Quaternion& operator()(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }
    Quaternion& operator()(int r, int c) {
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }

    QVector column(int c) const;
    QVector row(int r) const;

    QMatrix& operator+=(const QMatrix& r);
    QMatrix& operator-=(const QMatrix& r);
    friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
    friend QMatrix operator-(const QMatrix& a);
    friend QMatrix operator*(const QMatrix& a, double s);
    friend QMatrix operator*(double s, const QMatrix& a);

    /// Left scalar action q * A (entries q * a_rc).
    friend QMatrix operator*(const Quaternion& q, const QMatrix& a);
    /// Right scalar action A * q (entries a_rc * q).
    friend QMatrix operator*(const QMatrix& a, const Quaternion& q);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Quaternion> entries_;
};

/// Entrywise Hamilton products accumulated left-to-right. Throws on shape
/// mismatch.
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
QVector mat_vec(const QMatrix& a, const QVector& x);

inline QMatrix operator*(const QMatrix& a, const QMatrix& b) { return mat_mul(a, b); }
inline QVector operator*(const QMatrix& a, const QVector& x) { return mat_vec(a, x); }

/// Conjugate transpose A^+.
QMatrix dagger(const QMatrix& a);

Quaternion trace(const QMatrix& a);

/// Frobenius-style norm: sqrt(sum of squared quaternion moduli).
double norm(const QMatrix& a);

bool approx_equal(const QMatrix& a, const QMatrix& b, double tol = kZeroTol);

} // namespace quatode
