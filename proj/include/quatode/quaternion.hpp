#pragma once

#include <cmath>
#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace quatode {

/// Default absolute tolerance for zero tests on desk-scale quantities.
inline constexpr double kZeroTol = 1e-10;

/// One element of H: w + x*i + y*j + z*k with the Hamilton product
/// (i^2 = j^2 = k^2 = ijk = -1). Plain value type; all operations are pure.
struct Quaternion {
    double w{0.0};
    double x{0.0};
    double y{0.0};
    double z{0.0};

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

    /// The complex pair (a, b) with q = a + b*j, where a = w + x*i and b = y + z*i.
    constexpr std::complex<double> complex_first() const { return {w, x}; }
    constexpr std::complex<double> complex_second() const { return {y, z}; }
    static constexpr Quaternion from_complex_pair(std::complex<double> a, std::complex<double> b) {
        return {a.real(), a.imag(), b.real(), b.imag()};
    }

    constexpr Quaternion& operator+=(const Quaternion& r) {
        w += r.w; x += r.x; y += r.y; z += r.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& r) {
        w -= r.w; x -= r.x; y -= r.y; z -= r.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }

    friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
    friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
    friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
    friend constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

    /// Hamilton product. Noncommutative; associative; |ab| = |a||b|.
    friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
};

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

constexpr double real_part(const Quaternion& q) { return q.w; }

constexpr Quaternion imag_part(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }

inline double imag_norm(const Quaternion& q) {
    return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
}

/// conj(q)/|q|^2. Throws on |q| <= tol.
Quaternion inverse(const Quaternion& q, double tol = kZeroTol);

/// exp(w + v) = e^w (cos|v| + v/|v| sin|v|), with a series evaluation of
/// sin|v|/|v| near |v| = 0.
Quaternion exp(const Quaternion& q);

/// The similarity-class representative Re(q) + |Im(q)| i: complex with
/// nonnegative imaginary part.
Quaternion standardize(const Quaternion& q);

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol = kZeroTol) {
    return norm(a - b) <= tol;
}

struct SimilarityResult {
    bool similar = false;
    /// Nonzero witness with theta = alpha^{-1} * lambda * alpha when similar.
    Quaternion alpha{};
};

/// Two quaternions are similar iff they share real part and imaginary modulus.
SimilarityResult similar(const Quaternion& lambda, const Quaternion& theta,
                         double tol = kZeroTol);

/// Parses the literal grammar: signed decimal terms with optional unit suffix
/// i|j|k, e.g. "1-0.5j+2k", "-j", "3".
Quaternion parse_quaternion(std::string_view text);

/// Renders in the literal grammar with the given significant digits.
std::string format_quaternion(const Quaternion& q, int significant_digits = 9);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

} // namespace quatode
