#include "quatode/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "quatode/errors.hpp"
#include "quatode/pdet.hpp"

namespace quatode {

namespace {

constexpr double kRankTol = 1e-9;
constexpr double kChainResidualTol = 1e-8;

std::vector<Complex> raw_eigenvalues(const ComplexMatrix& m) {
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigenvalue iteration did not converge");
    }
    std::vector<Complex> out(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    }
    return out;
}

/// Greedy union clustering at an absolute distance threshold; returns cluster
/// means with member counts, sorted by (re, im).
std::vector<std::pair<Complex, int>> cluster_values(std::vector<Complex> values, double tol) {
    const std::size_t n = values.size();
    std::vector<int> parent(n);
    for (std::size_t i = 0; i < n; ++i) {
        parent[i] = static_cast<int>(i);
    }
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            a = parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        }
        return a;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(values[i] - values[j]) <= tol) {
                parent[static_cast<std::size_t>(find(static_cast<int>(i)))] =
                    find(static_cast<int>(j));
            }
        }
    }
    std::vector<std::pair<Complex, int>> clusters;
    std::vector<int> roots;
    for (std::size_t i = 0; i < n; ++i) {
        const int root = find(static_cast<int>(i));
        auto it = std::find(roots.begin(), roots.end(), root);
        std::size_t idx;
        if (it == roots.end()) {
            roots.push_back(root);
            clusters.emplace_back(Complex{0.0, 0.0}, 0);
            idx = roots.size() - 1;
        } else {
            idx = static_cast<std::size_t>(it - roots.begin());
        }
        clusters[idx].first += values[i];
        clusters[idx].second += 1;
    }
    for (auto& [value, count] : clusters) {
        value /= static_cast<double>(count);
    }
    std::sort(clusters.begin(), clusters.end(), [](const auto& a, const auto& b) {
        if (a.first.real() != b.first.real()) {
            return a.first.real() < b.first.real();
        }
        return a.first.imag() < b.first.imag();
    });
    return clusters;
}

Complex to_complex(const Quaternion& lambda) { return {lambda.w, lambda.x}; }

/// Incrementally maintained orthonormal basis with twice-iterated
/// Gram-Schmidt projection.
class SpanTracker {
public:
    explicit SpanTracker(Eigen::Index dim) : u_(dim, 0) {}

    double residual(const ComplexVector& c) const { return project(c).norm(); }

    bool try_add(const ComplexVector& c, double tol) {
        ComplexVector r = project(c);
        if (r.norm() <= tol) {
            return false;
        }
        r.normalize();
        u_.conservativeResize(Eigen::NoChange, u_.cols() + 1);
        u_.col(u_.cols() - 1) = r;
        return true;
    }

private:
    ComplexVector project(const ComplexVector& c) const {
        ComplexVector r = c;
        for (int pass = 0; pass < 2; ++pass) {
            if (u_.cols() > 0) {
                r -= u_ * (u_.adjoint() * r);
            }
        }
        return r;
    }

    ComplexMatrix u_;
};

/// First entry whose modulus is significant relative to the largest one.
int first_significant_index(const QVector& v) {
    double max_mod = 0.0;
    for (int i = 0; i < v.size(); ++i) {
        max_mod = std::max(max_mod, norm(v[i]));
    }
    for (int i = 0; i < v.size(); ++i) {
        if (norm(v[i]) > 1e-8 * max_mod) {
            return i;
        }
    }
    return -1;
}

/// Rescales a whole chain by one right factor. For a real eigenvalue any
/// quaternion scaling preserves the chain relations; otherwise only complex
/// scalings commute with lambda, so the leading entry is normalized inside
/// its complex slice.
void normalize_chain(Chain& chain, bool real_lambda) {
    if (chain.empty()) {
        return;
    }
    const QVector& head = chain.front();
    const int idx = first_significant_index(head);
    if (idx < 0) {
        return;
    }
    Quaternion alpha;
    if (real_lambda) {
        alpha = inverse(head[idx]);
    } else {
        const Complex a = head[idx].complex_first();
        const Complex b = head[idx].complex_second();
        if (std::abs(a) > 1e-8 * std::sqrt(std::norm(a) + std::norm(b))) {
            alpha = Quaternion::from_complex_pair(1.0 / a, 0.0);
        } else {
            // Leading entry is c*j; scale so it becomes exactly j.
            alpha = Quaternion::from_complex_pair(1.0 / std::conj(b), 0.0);
        }
    }
    double scale = 0.0;
    for (QVector& v : chain) {
        v = v * alpha;
        for (int i = 0; i < v.size(); ++i) {
            scale = std::max(scale, norm(v[i]));
        }
    }
    // drop sub-representation dust so outputs are reproducible; the residual
    // contract is verified after this
    const double cutoff = 1e-12 * scale;
    for (QVector& v : chain) {
        for (int i = 0; i < v.size(); ++i) {
            auto snap = [&](double c) { return std::abs(c) < cutoff ? 0.0 : c; };
            v[i] = Quaternion{snap(v[i].w), snap(v[i].x), snap(v[i].y), snap(v[i].z)};
        }
    }
}

void verify_chain(const QMatrix& a, const Quaternion& lambda, const Chain& chain) {
    const double scale = std::max(1.0, norm(a));
    for (std::size_t l = 0; l < chain.size(); ++l) {
        QVector residual = mat_vec(a, chain[l]) - chain[l] * lambda;
        if (l > 0) {
            residual -= chain[l - 1];
        }
        const double tol = kChainResidualTol * std::max(1.0, scale * norm(chain[l]));
        if (norm(residual) > tol) {
            throw NumericalError("chain residual " + std::to_string(norm(residual)) +
                                 " above contract for lambda = " + format_quaternion(lambda));
        }
    }
}

/// Jordan chains of B at eigenvalue 0 in phi-space, mu the algebraic
/// multiplicity. Chains come back head-first (v_1 ... v_m).
std::vector<std::vector<ComplexVector>> phi_chains(const ComplexMatrix& b, int mu) {
    const Eigen::Index dim = b.rows();
    std::vector<ComplexMatrix> null_bases; // null_bases[k-1] spans ker B^k
    ComplexMatrix power = ComplexMatrix::Identity(dim, dim);
    int prev_dim = 0;
    while (true) {
        power = power * b;
        ComplexMatrix basis = detail::null_space(power, kRankTol);
        const int d = static_cast<int>(basis.cols());
        if (d == prev_dim) {
            throw NumericalError("generalized eigenspace stalled at dimension " +
                                 std::to_string(d) + ", expected " + std::to_string(mu));
        }
        null_bases.push_back(std::move(basis));
        prev_dim = d;
        if (d >= mu) {
            break;
        }
        if (static_cast<int>(null_bases.size()) > mu) {
            throw NumericalError("rank sequence exceeded multiplicity bound");
        }
    }
    if (prev_dim != mu) {
        throw NumericalError("generalized eigenspace dimension " + std::to_string(prev_dim) +
                             " does not match multiplicity " + std::to_string(mu));
    }

    const int p = static_cast<int>(null_bases.size());
    auto kernel_dim = [&](int k) {
        if (k <= 0) {
            return 0;
        }
        return static_cast<int>(null_bases[static_cast<std::size_t>(k - 1)].cols());
    };
    // weyr[k] = number of Jordan blocks of size >= k
    std::vector<int> weyr(static_cast<std::size_t>(p) + 2, 0);
    for (int k = 1; k <= p; ++k) {
        weyr[static_cast<std::size_t>(k)] = kernel_dim(k) - kernel_dim(k - 1);
    }

    struct Top {
        ComplexVector vec;
        int grade;
    };
    std::vector<Top> tops;
    for (int k = p; k >= 1; --k) {
        const int need = weyr[static_cast<std::size_t>(k)] - weyr[static_cast<std::size_t>(k + 1)];
        if (need == 0) {
            continue;
        }
        SpanTracker span(dim);
        if (k >= 2) {
            const ComplexMatrix& lower = null_bases[static_cast<std::size_t>(k - 2)];
            for (Eigen::Index c = 0; c < lower.cols(); ++c) {
                span.try_add(lower.col(c), 1e-12);
            }
        }
        for (const Top& top : tops) {
            // Descend the taller chain to its grade-k element.
            ComplexVector image = top.vec;
            for (int step = 0; step < top.grade - k; ++step) {
                image = b * image;
            }
            span.try_add(image, 1e-12);
        }
        // Greedy: largest residual modulo the tracked span first.
        const ComplexMatrix& pool = null_bases[static_cast<std::size_t>(k - 1)];
        std::vector<bool> used(static_cast<std::size_t>(pool.cols()), false);
        for (int picked = 0; picked < need; ++picked) {
            int best = -1;
            double best_residual = 0.0;
            for (Eigen::Index c = 0; c < pool.cols(); ++c) {
                if (used[static_cast<std::size_t>(c)]) {
                    continue;
                }
                const double r = span.residual(pool.col(c));
                if (r > best_residual) {
                    best_residual = r;
                    best = static_cast<int>(c);
                }
            }
            if (best < 0 || best_residual <= 1e-8) {
                throw NumericalError("could not complete Jordan chain basis at grade " +
                                     std::to_string(k));
            }
            used[static_cast<std::size_t>(best)] = true;
            span.try_add(pool.col(best), 1e-12);
            tops.push_back({pool.col(best), k});
        }
    }

    std::vector<std::vector<ComplexVector>> chains;
    for (const Top& top : tops) {
        // chain[0] = B^{grade-1} top is the eigenvector head, chain.back() = top.
        std::vector<ComplexVector> chain(static_cast<std::size_t>(top.grade));
        ComplexVector cur = top.vec;
        for (int l = top.grade; l >= 1; --l) {
            chain[static_cast<std::size_t>(l - 1)] = cur;
            if (l > 1) {
                cur = b * cur;
            }
        }
        chains.push_back(std::move(chain));
    }
    return chains;
}

/// Keeps half of the chains of each length, one per adjoint pair, greedily
/// maximizing the ddet of the kept vectors.
std::vector<Chain> select_adjoint_half(std::vector<Chain> candidates) {
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Chain& a, const Chain& b) { return a.size() > b.size(); });
    std::vector<Chain> kept;
    std::vector<QVector> kept_vectors;
    std::vector<bool> used(candidates.size(), false);
    std::size_t i = 0;
    while (i < candidates.size()) {
        std::size_t j = i;
        while (j < candidates.size() && candidates[j].size() == candidates[i].size()) {
            ++j;
        }
        const std::size_t group_count = j - i;
        if (group_count % 2 != 0) {
            throw NumericalError("adjoint chains of length " +
                                 std::to_string(candidates[i].size()) +
                                 " did not pair up (count " + std::to_string(group_count) + ")");
        }
        for (std::size_t pick = 0; pick < group_count / 2; ++pick) {
            double best_ddet = -1.0;
            std::size_t best = candidates.size();
            for (std::size_t c = i; c < j; ++c) {
                if (used[c]) {
                    continue;
                }
                std::vector<QVector> trial = kept_vectors;
                trial.insert(trial.end(), candidates[c].begin(), candidates[c].end());
                const double d = ddet(QMatrix::from_columns(trial));
                if (d > best_ddet) {
                    best_ddet = d;
                    best = c;
                }
            }
            if (best == candidates.size() || best_ddet <= 1e-9) {
                throw NumericalError("adjoint-pair selection failed: no candidate keeps the "
                                     "kept chain vectors right-independent");
            }
            used[best] = true;
            kept_vectors.insert(kept_vectors.end(), candidates[best].begin(),
                                candidates[best].end());
            kept.push_back(std::move(candidates[best]));
        }
        i = j;
    }
    return kept;
}

} // namespace

std::vector<std::pair<Complex, int>> complex_eig(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("complex_eig of non-square matrix");
    }
    if (m.rows() > 2 * kDetSizeCap) {
        throw SizeCapError("complex_eig size cap exceeded");
    }
    return cluster_values(raw_eigenvalues(m), kEigClusterTol);
}

std::vector<std::pair<Quaternion, int>> right_eigenvalues(const QMatrix& a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("right_eigenvalues of non-square matrix");
    }
    const int n = a.rows();
    if (n > kDetSizeCap) {
        throw SizeCapError("right_eigenvalues size cap exceeded");
    }
    std::vector<Complex> values = raw_eigenvalues(phi_mat(a));
    // Standard form first: conjugate pairs land in one cluster, and a real
    // eigenvalue keeps its full (even) phi-multiplicity together.
    for (Complex& v : values) {
        v = Complex{v.real(), std::abs(v.imag())};
    }
    std::vector<std::pair<Quaternion, int>> out;
    int total = 0;
    for (const auto& [value, count] : cluster_values(std::move(values), kEigClusterTol)) {
        if (count % 2 != 0) {
            throw NumericalError(
                "odd adjoint multiplicity after clustering (tolerance failure) near " +
                std::to_string(value.real()) + "+" + std::to_string(value.imag()) + "i");
        }
        // A real eigenvalue only accumulates folded |Im| noise in the cluster
        // mean (the signed parts are symmetric); snap it to exactly real so
        // the downstream rank sequences see the true shift.
        double b = std::max(0.0, value.imag());
        if (b <= kEigClusterTol) {
            b = 0.0;
        }
        out.emplace_back(Quaternion{value.real(), b, 0.0, 0.0}, count / 2);
        total += count / 2;
    }
    if (total != n) {
        throw NumericalError("standard eigenvalue multiplicities sum to " +
                             std::to_string(total) + ", expected " + std::to_string(n));
    }
    return out;
}

std::vector<QVector> eigenvectors(const QMatrix& a, const Quaternion& lambda) {
    if (a.rows() != a.cols()) {
        throw DimensionError("eigenvectors of non-square matrix");
    }
    Quaternion std_lambda = standardize(lambda);
    const bool real_lambda = std_lambda.x <= kEigClusterTol;
    if (real_lambda) {
        std_lambda.x = 0.0;
    }
    const int n = a.rows();
    ComplexMatrix b = phi_mat(a);
    b -= to_complex(std_lambda) * ComplexMatrix::Identity(2 * n, 2 * n);

    const ComplexMatrix basis = detail::null_space(b, kRankTol);
    if (basis.cols() == 0) {
        return {};
    }
    std::vector<QVector> pulled;
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
        pulled.push_back(unphi_vec(basis.col(c)));
    }
    std::vector<QVector> result;
    if (!real_lambda) {
        result = std::move(pulled);
    } else {
        if (pulled.size() % 2 != 0) {
            throw NumericalError("real eigenvalue null space has odd dimension");
        }
        std::vector<bool> used(pulled.size(), false);
        for (std::size_t pick = 0; pick < pulled.size() / 2; ++pick) {
            double best_ddet = -1.0;
            std::size_t best = pulled.size();
            for (std::size_t c = 0; c < pulled.size(); ++c) {
                if (used[c]) {
                    continue;
                }
                std::vector<QVector> trial = result;
                trial.push_back(pulled[c]);
                const double d = ddet(QMatrix::from_columns(trial));
                if (d > best_ddet) {
                    best_ddet = d;
                    best = c;
                }
            }
            if (best == pulled.size() || best_ddet <= 1e-9) {
                throw NumericalError("adjoint-pair eigenvector selection failed");
            }
            used[best] = true;
            result.push_back(pulled[best]);
        }
    }
    for (QVector& v : result) {
        Chain single{v};
        normalize_chain(single, real_lambda);
        v = single.front();
    }
    return result;
}

std::optional<QVector> chain_extend(const QMatrix& a, const Quaternion& lambda,
                                    const QVector& v) {
    Quaternion std_lambda = standardize(lambda);
    if (std_lambda.x <= kEigClusterTol) {
        std_lambda.x = 0.0;
    }
    const int n = a.rows();
    ComplexMatrix b = phi_mat(a);
    b -= to_complex(std_lambda) * ComplexMatrix::Identity(2 * n, 2 * n);
    const ComplexVector rhs = phi_vec(v);
    auto [solution, residual] = detail::least_squares(b, rhs);
    if (residual > 1e-7 * std::max(1.0, rhs.norm())) {
        return std::nullopt;
    }
    return unphi_vec(solution);
}

int Spectrum::total_multiplicity() const {
    int total = 0;
    for (const auto& entry : entries) {
        total += entry.multiplicity;
    }
    return total;
}

std::vector<QVector> Spectrum::all_chain_vectors() const {
    std::vector<QVector> out;
    for (const auto& entry : entries) {
        for (const auto& chain : entry.chains) {
            out.insert(out.end(), chain.begin(), chain.end());
        }
    }
    return out;
}

Spectrum full_spectrum(const QMatrix& a) {
    const int n = a.rows();
    const ComplexMatrix pa = phi_mat(a);
    Spectrum spectrum;
    for (const auto& [lambda, mult] : right_eigenvalues(a)) {
        const bool real_lambda = lambda.x <= kEigClusterTol;
        const int mu = real_lambda ? 2 * mult : mult;
        ComplexMatrix b = pa - to_complex(lambda) * ComplexMatrix::Identity(2 * n, 2 * n);

        std::vector<Chain> chains;
        for (const auto& phi_chain : phi_chains(b, mu)) {
            Chain chain;
            chain.reserve(phi_chain.size());
            for (const ComplexVector& w : phi_chain) {
                chain.push_back(unphi_vec(w));
            }
            chains.push_back(std::move(chain));
        }
        if (real_lambda) {
            chains = select_adjoint_half(std::move(chains));
        }
        int vectors = 0;
        for (Chain& chain : chains) {
            normalize_chain(chain, real_lambda);
            verify_chain(a, lambda, chain);
            vectors += static_cast<int>(chain.size());
        }
        if (vectors != mult) {
            throw NumericalError("chain vectors for lambda = " + format_quaternion(lambda) +
                                 " count to " + std::to_string(vectors) + ", expected " +
                                 std::to_string(mult));
        }
        spectrum.entries.push_back({lambda, mult, std::move(chains)});
    }
    if (!right_independent(spectrum.all_chain_vectors(), 1e-9)) {
        throw NumericalError("stacked chain vectors are right-dependent; "
                             "module decomposition violated");
    }
    return spectrum;
}

} // namespace quatode
