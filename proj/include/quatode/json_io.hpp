#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quatode/qde.hpp"
#include "quatode/qmatrix.hpp"

namespace quatode {

using Json = nlohmann::json;

/// Accepts a number, the 4-array [w,x,y,z], or a literal string like "1-0.5j+2k".
Quaternion quaternion_from_json(const Json& j);

/// Full-precision 4-array form.
Json quaternion_to_json(const Quaternion& q);

/// {"rows": [[q, ...], ...]}
QMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const QMatrix& m);

/// Bare array [q, ...] or {"entries": [q, ...]}.
QVector vector_from_json(const Json& j);
Json vector_to_json(const QVector& v);

/// {"columns": [{"lambda": q, "coeffs": [{"power": p, "vector": [...]}]}]},
/// the shape emitted by `fundmat --format json`.
SolutionBasis basis_from_json(const Json& j);
Json basis_to_json(const SolutionBasis& basis);

/// Problem description consumed by the CLI: a constant system and/or the
/// diagonal polynomial coefficients, plus optional initial data, times, and a
/// claimed solution basis for `check` to gate.
struct ProblemFile {
    std::optional<QMatrix> matrix;
    std::optional<std::vector<QPolynomial>> diag; // a_i(t) coefficient lists
    std::optional<SolutionBasis> basis;
    std::optional<QVector> x0;
    std::optional<double> t0;
    std::optional<double> t;
    std::optional<double> tol;
};

ProblemFile problem_from_json(const Json& j);
ProblemFile load_problem(const std::string& path);

} // namespace quatode
