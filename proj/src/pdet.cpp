#include "quatode/pdet.hpp"

#include <algorithm>
#include <numeric>

#include "quatode/adjoint.hpp"
#include "quatode/errors.hpp"

namespace quatode {

CycleNormalForm cycle_normal_form(std::span<const int> perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : perm) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            throw ParseError("input is not a permutation of 1..n");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }

    CycleNormalForm out;
    std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
    // Walking starts from n downward so each cycle opens at its largest
    // element and leaders come out strictly decreasing.
    for (int start = n; start >= 1; --start) {
        if (visited[static_cast<std::size_t>(start)]) {
            continue;
        }
        std::vector<int> cycle;
        int cur = start;
        do {
            visited[static_cast<std::size_t>(cur)] = true;
            cycle.push_back(cur);
            cur = perm[static_cast<std::size_t>(cur - 1)];
        } while (cur != start);
        out.cycles.push_back(std::move(cycle));
    }
    const int r = static_cast<int>(out.cycles.size());
    out.sign = ((n - r) % 2 == 0) ? 1 : -1;
    return out;
}

Quaternion det_p(const QMatrix& a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("det_p of non-square matrix");
    }
    const int n = a.rows();
    if (n == 0) {
        return Quaternion{1.0};
    }
    if (n > kDetSizeCap) {
        throw SizeCapError("det_p size cap exceeded: n = " + std::to_string(n) +
                           " > " + std::to_string(kDetSizeCap));
    }

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);

    Quaternion sum{};
    do {
        const CycleNormalForm nf = cycle_normal_form(perm);
        Quaternion term{1.0};
        for (const auto& cycle : nf.cycles) {
            // <i1 i2 ... is i1> = a_{i1 i2} a_{i2 i3} ... a_{is i1}
            const int s = static_cast<int>(cycle.size());
            for (int p = 0; p < s; ++p) {
                const int from = cycle[static_cast<std::size_t>(p)];
                const int to = cycle[static_cast<std::size_t>((p + 1) % s)];
                term = term * a(from - 1, to - 1);
            }
        }
        sum += static_cast<double>(nf.sign) * term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

double ddet(const QMatrix& a) {
    if (a.rows() < a.cols()) {
        throw DimensionError("ddet requires n >= m (got " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + ")");
    }
    const QMatrix gram = mat_mul(dagger(a), a);

    double value;
    double scale;
    if (gram.rows() <= kDetSizeCap) {
        const Quaternion d = det_p(gram);
        scale = std::max(1.0, norm(d));
        if (imag_norm(d) > 1e-9 * scale) {
            throw NumericalError("ddet imaginary residue above tolerance: " +
                                 std::to_string(imag_norm(d)));
        }
        value = d.w;
    } else {
        // phi route: det(phi(B)) = det_p(B)^2 for Hermitian positive
        // semidefinite B, so ddet = sqrt of the (real) adjoint determinant.
        const Complex det = phi_mat(gram).partialPivLu().determinant();
        scale = std::max(1.0, std::abs(det));
        if (std::abs(det.imag()) > 1e-9 * scale) {
            throw NumericalError("ddet adjoint determinant has imaginary residue");
        }
        value = std::sqrt(std::max(0.0, det.real()));
    }
    if (value < -1e-9 * scale) {
        throw NumericalError("ddet negative beyond tolerance: " + std::to_string(value));
    }
    return value;
}

double wronskian(const QMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("wronskian of non-square matrix");
    }
    return 0.5 * ddet(m);
}

bool right_independent(const std::vector<QVector>& vectors, double tol) {
    if (vectors.empty()) {
        return true;
    }
    const int n = vectors.front().size();
    const int m = static_cast<int>(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != n) {
            throw DimensionError("right_independent: mixed vector lengths");
        }
    }
    if (m > n) {
        throw DimensionError("right_independent: more vectors than dimensions");
    }
    return ddet(QMatrix::from_columns(vectors)) > tol;
}

} // namespace quatode
