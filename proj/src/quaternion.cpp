#include "quatode/quaternion.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>

#include "quatode/errors.hpp"

namespace quatode {

Quaternion inverse(const Quaternion& q, double tol) {
    const double n2 = norm_sq(q);
    if (std::sqrt(n2) <= tol) {
        throw SingularMatrixError("quaternion inverse of (near-)zero value");
    }
    return conj(q) / n2;
}

Quaternion exp(const Quaternion& q) {
    const double r = imag_norm(q);
    const double scale = std::exp(q.w);
    // sin(r)/r evaluated by series below the cancellation threshold.
    double sinc;
    if (r < 1e-8) {
        const double r2 = r * r;
        sinc = 1.0 - r2 / 6.0 + r2 * r2 / 120.0;
    } else {
        sinc = std::sin(r) / r;
    }
    return {scale * std::cos(r), scale * sinc * q.x, scale * sinc * q.y, scale * sinc * q.z};
}

Quaternion standardize(const Quaternion& q) {
    return {q.w, imag_norm(q), 0.0, 0.0};
}

SimilarityResult similar(const Quaternion& lambda, const Quaternion& theta, double tol) {
    if (!approx_equal(standardize(lambda), standardize(theta), tol)) {
        return {false, Quaternion{}};
    }
    const double r = imag_norm(lambda);
    if (r <= tol) {
        return {true, Quaternion{1.0}};
    }
    const Quaternion u = imag_part(lambda) / r;
    const Quaternion v = imag_part(theta) / imag_norm(theta);
    Quaternion alpha = u + v;
    if (norm(alpha) > tol) {
        return {true, alpha};
    }
    // v = -u: conjugation by any unit pure quaternion orthogonal to u flips it.
    Quaternion p{0.0, -u.y, u.x, 0.0}; // u x k-ish; degenerate when u is along k
    if (norm(p) <= tol) {
        p = Quaternion{0.0, 1.0, 0.0, 0.0};
    }
    return {true, p / norm(p)};
}

namespace {

bool parse_number(std::string_view s, std::size_t& pos, double& out) {
    const std::size_t start = pos;
    std::size_t i = pos;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) {
        ++i;
    }
    if (i == start) {
        return false;
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) {
            ++j;
        }
        std::size_t d = j;
        while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) {
            ++d;
        }
        if (d > j) {
            i = d;
        }
    }
    out = std::stod(std::string(s.substr(start, i - start)));
    pos = i;
    return true;
}

} // namespace

Quaternion parse_quaternion(std::string_view text) {
    Quaternion result{};
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    skip_ws();
    if (pos == text.size()) {
        throw ParseError("empty quaternion literal");
    }
    bool first_term = true;
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) {
            break;
        }
        double sign = 1.0;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = (text[pos] == '-') ? -1.0 : 1.0;
            ++pos;
            skip_ws();
        } else if (!first_term) {
            throw ParseError("expected '+' or '-' between quaternion terms: '" +
                             std::string(text) + "'");
        }
        double magnitude = 1.0;
        const bool has_number = parse_number(text, pos, magnitude);
        char unit = '\0';
        if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
            unit = text[pos];
            ++pos;
        }
        if (!has_number && unit == '\0') {
            throw ParseError("malformed quaternion literal: '" + std::string(text) + "'");
        }
        const double value = sign * magnitude;
        switch (unit) {
            case '\0': result.w += value; break;
            case 'i': result.x += value; break;
            case 'j': result.y += value; break;
            case 'k': result.z += value; break;
        }
        first_term = false;
    }
    return result;
}

namespace {

void append_component(std::string& out, double value, char unit, int digits) {
    if (value == 0.0) {
        return;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    std::string num(buf);
    const bool negative = !num.empty() && num[0] == '-';
    if (out.empty()) {
        if (negative) {
            out += '-';
            num.erase(0, 1);
        }
    } else {
        out += negative ? '-' : '+';
        if (negative) {
            num.erase(0, 1);
        }
    }
    if (unit != '\0' && num == "1") {
        out += unit;
    } else {
        out += num;
        if (unit != '\0') {
            out += unit;
        }
    }
}

} // namespace

std::string format_quaternion(const Quaternion& q, int significant_digits) {
    // components too small to matter at the requested precision render as 0
    const double largest = std::max(std::max(std::abs(q.w), std::abs(q.x)),
                                    std::max(std::abs(q.y), std::abs(q.z)));
    const double cutoff = largest * std::pow(10.0, -(significant_digits + 2));
    auto clipped = [&](double v) { return std::abs(v) < cutoff ? 0.0 : v; };
    std::string out;
    append_component(out, clipped(q.w), '\0', significant_digits);
    append_component(out, clipped(q.x), 'i', significant_digits);
    append_component(out, clipped(q.y), 'j', significant_digits);
    append_component(out, clipped(q.z), 'k', significant_digits);
    if (out.empty()) {
        out = "0";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << format_quaternion(q);
}

} // namespace quatode
