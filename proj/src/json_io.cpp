#include "quatode/json_io.hpp"

#include <fstream>

#include "quatode/errors.hpp"

namespace quatode {

Quaternion quaternion_from_json(const Json& j) {
    if (j.is_number()) {
        return Quaternion{j.get<double>()};
    }
    if (j.is_string()) {
        return parse_quaternion(j.get<std::string>());
    }
    if (j.is_array()) {
        if (j.size() != 4) {
            throw ParseError("quaternion array form needs exactly 4 components");
        }
        for (const auto& c : j) {
            if (!c.is_number()) {
                throw ParseError("quaternion array components must be numbers");
            }
        }
        return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
    }
    throw ParseError("quaternion must be a number, a [w,x,y,z] array, or a literal string");
}

Json quaternion_to_json(const Quaternion& q) {
    return Json::array({q.w, q.x, q.y, q.z});
}

QMatrix matrix_from_json(const Json& j) {
    const Json* rows = nullptr;
    if (j.is_object() && j.contains("rows")) {
        rows = &j.at("rows");
    } else if (j.is_array()) {
        rows = &j;
    } else {
        throw ParseError("matrix must be {\"rows\": [[...], ...]} or a nested array");
    }
    if (!rows->is_array() || rows->empty()) {
        throw ParseError("matrix rows must be a nonempty array");
    }
    const int nrows = static_cast<int>(rows->size());
    const int ncols = static_cast<int>(rows->at(0).size());
    QMatrix m(nrows, ncols);
    for (int r = 0; r < nrows; ++r) {
        const Json& row = rows->at(static_cast<std::size_t>(r));
        if (!row.is_array() || static_cast<int>(row.size()) != ncols) {
            throw ParseError("matrix rows have inconsistent lengths");
        }
        for (int c = 0; c < ncols; ++c) {
            m(r, c) = quaternion_from_json(row.at(static_cast<std::size_t>(c)));
        }
    }
    return m;
}

Json matrix_to_json(const QMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) {
            row.push_back(quaternion_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"rows", std::move(rows)}};
}

QVector vector_from_json(const Json& j) {
    const Json* entries = nullptr;
    if (j.is_object() && j.contains("entries")) {
        entries = &j.at("entries");
    } else if (j.is_array()) {
        entries = &j;
    } else {
        throw ParseError("vector must be an array or {\"entries\": [...]}");
    }
    QVector v(static_cast<int>(entries->size()));
    for (int i = 0; i < v.size(); ++i) {
        v[i] = quaternion_from_json(entries->at(static_cast<std::size_t>(i)));
    }
    return v;
}

Json vector_to_json(const QVector& v) {
    Json entries = Json::array();
    for (int i = 0; i < v.size(); ++i) {
        entries.push_back(quaternion_to_json(v[i]));
    }
    return entries;
}

SolutionBasis basis_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("columns") || !j.at("columns").is_array()) {
        throw ParseError("basis must be {\"columns\": [...]}");
    }
    SolutionBasis basis;
    for (const Json& col : j.at("columns")) {
        QuasiPolynomialColumn column;
        column.lambda = quaternion_from_json(col.at("lambda"));
        for (const Json& coeff : col.at("coeffs")) {
            column.coeffs.emplace_back(coeff.at("power").get<int>(),
                                       vector_from_json(coeff.at("vector")));
        }
        if (column.coeffs.empty()) {
            throw ParseError("basis column has no coefficients");
        }
        basis.dim = column.coeffs.front().second.size();
        basis.columns.push_back(std::move(column));
    }
    if (basis.columns.empty()) {
        throw ParseError("basis has no columns");
    }
    if (static_cast<int>(basis.columns.size()) != basis.dim) {
        throw ParseError("basis column count does not match the dimension");
    }
    return basis;
}

Json basis_to_json(const SolutionBasis& basis) {
    Json cols = Json::array();
    for (const auto& column : basis.columns) {
        Json coeffs = Json::array();
        for (const auto& [p, v] : column.coeffs) {
            coeffs.push_back({{"power", p}, {"vector", vector_to_json(v)}});
        }
        cols.push_back(
            {{"lambda", quaternion_to_json(column.lambda)}, {"coeffs", std::move(coeffs)}});
    }
    return Json{{"columns", std::move(cols)}};
}

ProblemFile problem_from_json(const Json& j) {
    if (!j.is_object()) {
        throw ParseError("problem file must be a JSON object");
    }
    ProblemFile p;
    if (j.contains("matrix")) {
        p.matrix = matrix_from_json(j.at("matrix"));
        if (p.matrix->rows() != p.matrix->cols()) {
            throw ParseError("problem matrix must be square");
        }
    }
    if (j.contains("diag")) {
        const Json& diag = j.at("diag");
        if (!diag.is_array() || diag.empty()) {
            throw ParseError("diag must be a nonempty array of coefficient lists");
        }
        std::vector<QPolynomial> polys;
        for (const Json& entry : diag) {
            if (!entry.is_array()) {
                throw ParseError("each diag entry must be an array of quaternion coefficients");
            }
            QPolynomial poly;
            for (const Json& c : entry) {
                poly.coeff.push_back(quaternion_from_json(c));
            }
            polys.push_back(std::move(poly));
        }
        p.diag = std::move(polys);
    }
    if (j.contains("basis")) {
        p.basis = basis_from_json(j.at("basis"));
        if (p.matrix && p.basis->dim != p.matrix->rows()) {
            throw ParseError("basis dimension does not match the matrix");
        }
    }
    if (j.contains("x0")) {
        p.x0 = vector_from_json(j.at("x0"));
        const int n = p.matrix ? p.matrix->rows()
                               : (p.diag ? static_cast<int>(p.diag->size()) : p.x0->size());
        if (p.x0->size() != n) {
            throw ParseError("x0 length does not match the system dimension");
        }
    }
    if (j.contains("t0")) {
        p.t0 = j.at("t0").get<double>();
    }
    if (j.contains("t")) {
        p.t = j.at("t").get<double>();
    }
    if (j.contains("tol")) {
        p.tol = j.at("tol").get<double>();
    }
    return p;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open input file: " + path);
    }
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return problem_from_json(j);
}

} // namespace quatode
