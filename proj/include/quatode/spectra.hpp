#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quatode/adjoint.hpp"
#include "quatode/qmatrix.hpp"

namespace quatode {

/// Absolute clustering tolerance for adjoint-matrix eigenvalues; the
/// even-count pairing rule for real eigenvalues requires exact clusters.
/// Covers chains up to length 2 on dense inputs (QR scatter for a defective
/// eigenvalue grows like eps^(1/m) with the chain length m); longer chains
/// on non-triangular matrices fail loudly in right_eigenvalues.
/// TODO: rank-based multiplicity detection would lift the length-3 limit.
inline constexpr double kEigClusterTol = 1e-7;

/// Eigenvalues of a complex matrix (size <= 16) with algebraic multiplicities
/// after clustering at kEigClusterTol; multiplicities sum to the dimension.
std::vector<std::pair<Complex, int>> complex_eig(const ComplexMatrix& m);

/// Standard right eigenvalues (complex, nonnegative imaginary part) with
/// quaternionic multiplicities, derived from the spectrum of phi(A): a
/// conjugate pair a+-bi contributes a+bi with its phi-multiplicity, a real
/// eigenvalue contributes half its phi-multiplicity. Sorted by (re, im).
std::vector<std::pair<Quaternion, int>> right_eigenvalues(const QMatrix& a);

/// Maximal right-independent set of eigenvectors for a standard eigenvalue:
/// the null space of phi(A) - lambda I pulled back through unphi_vec. For
/// real lambda the null vectors come in adjoint pairs and one of each pair is
/// kept (greedy ddet selection). Empty when lambda is not an eigenvalue.
std::vector<QVector> eigenvectors(const QMatrix& a, const Quaternion& lambda);

/// Next generalized eigenvector: u with A u - u lambda = v, found from
/// (phi(A) - lambda I) phi(u) = phi(v). nullopt when phi(v) is outside the
/// range (least-squares residual above 1e-7).
std::optional<QVector> chain_extend(const QMatrix& a, const Quaternion& lambda,
                                    const QVector& v);

/// One generalized-eigenvector chain v_1 ... v_m: A v_1 = v_1 lambda and
/// A v_l - v_l lambda = v_{l-1} for l >= 2.
using Chain = std::vector<QVector>;

struct SpectrumEntry {
    Quaternion lambda;        // standard form
    int multiplicity = 0;     // n_j; equals the sum of chain lengths
    std::vector<Chain> chains;
};

/// Standard eigenvalues with their full chain structure. The concatenation of
/// all chain vectors is right-independent and counts to n.
struct Spectrum {
    std::vector<SpectrumEntry> entries;

    int total_multiplicity() const;
    std::vector<QVector> all_chain_vectors() const;
};

/// Chain structure from the Jordan form of phi(A) at each standard
/// eigenvalue (rank sequence of powers, back-substitution, adjoint-pair
/// selection for real eigenvalues).
Spectrum full_spectrum(const QMatrix& a);

} // namespace quatode
