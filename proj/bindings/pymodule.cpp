// Python bindings for the quaternion ODE toolkit. Quaternion-valued
// arguments accept Quaternion objects, numbers, literal strings like
// "1-0.5j+2k", or [w, x, y, z] sequences.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quatode/adjoint.hpp"
#include "quatode/errors.hpp"
#include "quatode/json_io.hpp"
#include "quatode/oracle.hpp"
#include "quatode/pdet.hpp"
#include "quatode/qde.hpp"
#include "quatode/spectra.hpp"

namespace py = pybind11;
using namespace quatode;

namespace {

Quaternion as_quaternion(py::handle h) {
    if (py::isinstance<Quaternion>(h)) {
        return h.cast<Quaternion>();
    }
    if (py::isinstance<py::str>(h)) {
        return parse_quaternion(h.cast<std::string>());
    }
    if (py::isinstance<py::float_>(h) || py::isinstance<py::int_>(h)) {
        return Quaternion{h.cast<double>()};
    }
    if (py::isinstance<py::sequence>(h)) {
        auto seq = h.cast<py::sequence>();
        if (seq.size() == 4) {
            return {seq[0].cast<double>(), seq[1].cast<double>(), seq[2].cast<double>(),
                    seq[3].cast<double>()};
        }
    }
    throw ParseError("expected a Quaternion, number, literal string, or [w,x,y,z]");
}

QVector as_qvector(py::handle h) {
    if (py::isinstance<QVector>(h)) {
        return h.cast<QVector>();
    }
    auto seq = h.cast<py::sequence>();
    QVector v(static_cast<int>(seq.size()));
    for (int i = 0; i < v.size(); ++i) {
        v[i] = as_quaternion(seq[static_cast<std::size_t>(i)]);
    }
    return v;
}

QMatrix as_qmatrix(py::handle h) {
    if (py::isinstance<QMatrix>(h)) {
        return h.cast<QMatrix>();
    }
    auto rows = h.cast<py::sequence>();
    const int nrows = static_cast<int>(rows.size());
    if (nrows == 0) {
        return QMatrix{};
    }
    const int ncols = static_cast<int>(rows[0].cast<py::sequence>().size());
    QMatrix m(nrows, ncols);
    for (int r = 0; r < nrows; ++r) {
        auto row = rows[static_cast<std::size_t>(r)].cast<py::sequence>();
        if (static_cast<int>(row.size()) != ncols) {
            throw ParseError("ragged matrix rows");
        }
        for (int c = 0; c < ncols; ++c) {
            m(r, c) = as_quaternion(row[static_cast<std::size_t>(c)]);
        }
    }
    return m;
}

std::vector<QVector> as_qvector_list(py::handle h) {
    std::vector<QVector> out;
    for (py::handle item : h.cast<py::sequence>()) {
        out.push_back(as_qvector(item));
    }
    return out;
}

std::vector<QPolynomial> as_polynomials(py::handle h) {
    std::vector<QPolynomial> out;
    for (py::handle entry : h.cast<py::sequence>()) {
        QPolynomial p;
        for (py::handle c : entry.cast<py::sequence>()) {
            p.coeff.push_back(as_quaternion(c));
        }
        out.push_back(std::move(p));
    }
    return out;
}

py::list vector_to_list(const QVector& v) {
    py::list out;
    for (int i = 0; i < v.size(); ++i) {
        out.append(v[i]);
    }
    return out;
}

py::list matrix_to_list(const QMatrix& m) {
    py::list out;
    for (int r = 0; r < m.rows(); ++r) {
        py::list row;
        for (int c = 0; c < m.cols(); ++c) {
            row.append(m(r, c));
        }
        out.append(row);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_quatode, m) {
    m.doc() = "Quaternion linear algebra and linear ODE toolkit";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<SizeCapError>(m, "SizeCapError", PyExc_ValueError);
    py::register_exception<SingularMatrixError>(m, "SingularMatrixError", PyExc_ArithmeticError);
    py::register_exception<NonCommutingSplitError>(m, "NonCommutingSplitError",
                                                   PyExc_ArithmeticError);
    py::register_exception<CommutativityError>(m, "CommutativityError", PyExc_ArithmeticError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::class_<Quaternion>(m, "Quaternion")
        .def(py::init<>())
        .def(py::init<double, double, double, double>(), py::arg("w"), py::arg("x") = 0.0,
             py::arg("y") = 0.0, py::arg("z") = 0.0)
        .def(py::init(&as_quaternion))
        .def_readwrite("w", &Quaternion::w)
        .def_readwrite("x", &Quaternion::x)
        .def_readwrite("y", &Quaternion::y)
        .def_readwrite("z", &Quaternion::z)
        .def("__add__", [](const Quaternion& a, py::handle b) { return a + as_quaternion(b); })
        .def("__radd__", [](const Quaternion& a, py::handle b) { return as_quaternion(b) + a; })
        .def("__sub__", [](const Quaternion& a, py::handle b) { return a - as_quaternion(b); })
        .def("__rsub__", [](const Quaternion& a, py::handle b) { return as_quaternion(b) - a; })
        .def("__mul__", [](const Quaternion& a, py::handle b) { return a * as_quaternion(b); })
        .def("__rmul__", [](const Quaternion& a, py::handle b) { return as_quaternion(b) * a; })
        .def("__neg__", [](const Quaternion& a) { return -a; })
        .def("conj", [](const Quaternion& q) { return conj(q); })
        .def("norm", [](const Quaternion& q) { return norm(q); })
        .def("inverse", [](const Quaternion& q) { return inverse(q); })
        .def("real", [](const Quaternion& q) { return real_part(q); })
        .def("imag", [](const Quaternion& q) { return imag_part(q); })
        .def("to_list", [](const Quaternion& q) { return py::make_tuple(q.w, q.x, q.y, q.z); })
        .def("__repr__", [](const Quaternion& q) { return format_quaternion(q); })
        .def("approx_equal",
             [](const Quaternion& a, py::handle b, double tol) {
                 return approx_equal(a, as_quaternion(b), tol);
             },
             py::arg("other"), py::arg("tol") = kZeroTol);
    py::implicitly_convertible<py::str, Quaternion>();
    py::implicitly_convertible<py::float_, Quaternion>();
    py::implicitly_convertible<py::int_, Quaternion>();
    py::implicitly_convertible<py::sequence, Quaternion>();

    m.def("parse_quaternion", &parse_quaternion, py::arg("text"));
    m.def("format_quaternion", &format_quaternion, py::arg("q"),
          py::arg("significant_digits") = 9);
    m.def("qexp", [](py::handle q) { return exp(as_quaternion(q)); }, py::arg("q"));
    m.def("standardize", [](py::handle q) { return standardize(as_quaternion(q)); },
          py::arg("q"));
    m.def(
        "similar",
        [](py::handle a, py::handle b, double tol) {
            const SimilarityResult r = similar(as_quaternion(a), as_quaternion(b), tol);
            return py::make_tuple(r.similar, r.alpha);
        },
        py::arg("lhs"), py::arg("rhs"), py::arg("tol") = kZeroTol,
        "Returns (similar, witness alpha with rhs = alpha^-1 lhs alpha).");

    py::class_<QVector>(m, "QVector")
        .def(py::init(&as_qvector))
        .def("__len__", &QVector::size)
        .def("__getitem__",
             [](const QVector& v, int i) {
                 if (i < 0 || i >= v.size()) {
                     throw py::index_error();
                 }
                 return v[i];
             })
        .def("__add__", [](const QVector& a, py::handle b) { return a + as_qvector(b); })
        .def("__sub__", [](const QVector& a, py::handle b) { return a - as_qvector(b); })
        .def("__mul__", [](const QVector& v, py::handle r) { return v * as_quaternion(r); })
        .def("norm", [](const QVector& v) { return norm(v); })
        .def("to_list", &vector_to_list)
        .def("__repr__", [](const QVector& v) {
            std::string s = "QVector([";
            for (int i = 0; i < v.size(); ++i) {
                s += (i ? ", " : "") + std::string("\"") + format_quaternion(v[i]) + "\"";
            }
            return s + "])";
        });
    py::implicitly_convertible<py::sequence, QVector>();

    py::class_<QMatrix>(m, "QMatrix")
        .def(py::init(&as_qmatrix))
        .def_static("identity", &QMatrix::identity, py::arg("n"))
        .def_static("zero", &QMatrix::zero, py::arg("rows"), py::arg("cols"))
        .def_property_readonly("rows", &QMatrix::rows)
        .def_property_readonly("cols", &QMatrix::cols)
        .def("__getitem__",
             [](const QMatrix& m_, std::pair<int, int> rc) {
                 if (rc.first < 0 || rc.first >= m_.rows() || rc.second < 0 ||
                     rc.second >= m_.cols()) {
                     throw py::index_error();
                 }
                 return m_(rc.first, rc.second);
             })
        .def("__add__", [](const QMatrix& a, py::handle b) { return a + as_qmatrix(b); })
        .def("__sub__", [](const QMatrix& a, py::handle b) { return a - as_qmatrix(b); })
        .def("__matmul__", [](const QMatrix& a, py::handle b) {
            if (py::isinstance<QVector>(b)) {
                return py::cast(mat_vec(a, b.cast<QVector>()));
            }
            return py::cast(mat_mul(a, as_qmatrix(b)));
        })
        .def("__mul__", [](const QMatrix& a, double s) { return a * s; })
        .def("mat_vec", [](const QMatrix& a, py::handle x) { return mat_vec(a, as_qvector(x)); })
        .def("dagger", [](const QMatrix& a) { return dagger(a); })
        .def("trace", [](const QMatrix& a) { return trace(a); })
        .def("norm", [](const QMatrix& a) { return norm(a); })
        .def("column", &QMatrix::column, py::arg("c"))
        .def("to_list", &matrix_to_list)
        .def("__repr__", [](const QMatrix& m_) {
            std::string s = "QMatrix(" + std::to_string(m_.rows()) + "x" +
                            std::to_string(m_.cols()) + ")";
            return s;
        });
    py::implicitly_convertible<py::sequence, QMatrix>();

    // determinants and independence
    m.def("det_p", [](py::handle a) { return det_p(as_qmatrix(a)); }, py::arg("a"),
          "Permutation determinant over cycle normal forms.");
    m.def("ddet", [](py::handle a) { return ddet(as_qmatrix(a)); }, py::arg("a"),
          "Double determinant det_p(A^+ A); real and nonnegative.");
    m.def("wronskian", [](py::handle m_) { return wronskian(as_qmatrix(m_)); }, py::arg("m"));
    m.def(
        "right_independent",
        [](py::handle vs, double tol) { return right_independent(as_qvector_list(vs), tol); },
        py::arg("vectors"), py::arg("tol") = 1e-9);
    m.def("cofactor_det", [](py::handle a) { return cofactor_det(as_qmatrix(a)); }, py::arg("a"),
          "Classical Laplace expansion; entries must pairwise commute.");

    // complex adjoint layer
    m.def("phi_mat", [](py::handle a) { return phi_mat(as_qmatrix(a)); }, py::arg("a"));
    m.def("phi_vec", [](py::handle v) { return phi_vec(as_qvector(v)); }, py::arg("v"));
    m.def("phi_vec_star", [](py::handle v) { return phi_vec_star(as_qvector(v)); },
          py::arg("v"));
    m.def("unphi_vec", &unphi_vec, py::arg("c"));
    m.def("q_inverse", [](py::handle m_) { return q_inverse(as_qmatrix(m_)); }, py::arg("m"));
    m.def(
        "q_solve",
        [](py::handle a, py::handle b) { return q_solve(as_qmatrix(a), as_qvector(b)); },
        py::arg("a"), py::arg("b"));

    // spectra
    py::class_<SpectrumEntry>(m, "SpectrumEntry")
        .def_readonly("eigenvalue", &SpectrumEntry::lambda)
        .def_readonly("multiplicity", &SpectrumEntry::multiplicity)
        .def_readonly("chains", &SpectrumEntry::chains);
    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("entries", &Spectrum::entries)
        .def("all_chain_vectors", &Spectrum::all_chain_vectors);

    m.def(
        "right_eigenvalues",
        [](py::handle a) {
            py::list out;
            for (const auto& [lambda, mult] : right_eigenvalues(as_qmatrix(a))) {
                out.append(py::make_tuple(lambda, mult));
            }
            return out;
        },
        py::arg("a"), "Standard eigenvalues with quaternionic multiplicities.");
    m.def(
        "eigenvectors",
        [](py::handle a, py::handle lambda) {
            return eigenvectors(as_qmatrix(a), as_quaternion(lambda));
        },
        py::arg("a"), py::arg("eigenvalue"));
    m.def(
        "chain_extend",
        [](py::handle a, py::handle lambda, py::handle v) -> py::object {
            auto u = chain_extend(as_qmatrix(a), as_quaternion(lambda), as_qvector(v));
            return u ? py::cast(*u) : py::none();
        },
        py::arg("a"), py::arg("eigenvalue"), py::arg("v"));
    m.def("full_spectrum", [](py::handle a) { return full_spectrum(as_qmatrix(a)); },
          py::arg("a"));

    // differential equations
    py::class_<QuasiPolynomialColumn>(m, "QuasiPolynomialColumn")
        .def_readonly("eigenvalue", &QuasiPolynomialColumn::lambda)
        .def_readonly("coeffs", &QuasiPolynomialColumn::coeffs)
        .def("eval", &QuasiPolynomialColumn::eval, py::arg("t"));
    py::class_<SolutionBasis>(m, "SolutionBasis")
        .def_readonly("dim", &SolutionBasis::dim)
        .def_readonly("columns", &SolutionBasis::columns)
        .def("eval", &SolutionBasis::eval, py::arg("t"));
    py::class_<LiouvilleReport>(m, "LiouvilleReport")
        .def_readonly("factor", &LiouvilleReport::factor)
        .def_readonly("max_rel_err", &LiouvilleReport::max_rel_err)
        .def("__repr__", [](const LiouvilleReport& r) {
            return "LiouvilleReport(factor=" + std::to_string(r.factor) +
                   ", max_rel_err=" + std::to_string(r.max_rel_err) + ")";
        });
    py::class_<IntegrationResult>(m, "IntegrationResult")
        .def_readonly("state", &IntegrationResult::state)
        .def_readonly("steps", &IntegrationResult::steps)
        .def_readonly("max_step_error", &IntegrationResult::max_step_error);

    m.def("fundamental_matrix",
          [](py::handle a) { return fundamental_matrix(as_qmatrix(a)); }, py::arg("a"),
          "Symbolic fundamental matrix from the eigenvalue/chain structure.");
    m.def(
        "exp_at", [](py::handle a, double t) { return exp_at(as_qmatrix(a), t); }, py::arg("a"),
        py::arg("t"));
    m.def(
        "exp_series",
        [](py::handle a, double t, double tol) { return exp_series(as_qmatrix(a), t, tol); },
        py::arg("a"), py::arg("t"), py::arg("tol") = 1e-13);
    m.def(
        "commuting_split_exp",
        [](py::handle d, py::handle n, double t) {
            return commuting_split_exp(as_qmatrix(d), as_qmatrix(n), t);
        },
        py::arg("d"), py::arg("n"), py::arg("t"));
    m.def(
        "solve_ivp",
        [](py::handle a, double t0, py::handle x0, double t) {
            return solve_ivp(as_qmatrix(a), t0, as_qvector(x0), t);
        },
        py::arg("a"), py::arg("t0"), py::arg("x0"), py::arg("t"));
    m.def(
        "solve_diagonal",
        [](py::handle coeffs, double t0, py::handle x0, double t) {
            return solve_diagonal(as_polynomials(coeffs), t0, as_qvector(x0), t);
        },
        py::arg("coeffs"), py::arg("t0"), py::arg("x0"), py::arg("t"),
        "coeffs[i] lists the quaternion coefficients of a_i(t) by power of t.");
    m.def(
        "superpose",
        [](const SolutionBasis& basis, py::handle constants) {
            std::vector<Quaternion> rs;
            for (py::handle c : constants.cast<py::sequence>()) {
                rs.push_back(as_quaternion(c));
            }
            return superpose(basis, rs);
        },
        py::arg("basis"), py::arg("constants"),
        "x(t) = sum columns_i(t) * r_i with right-acting constants.");
    m.def(
        "liouville_check",
        [](py::handle a, double t0, double t1) { return liouville_check(as_qmatrix(a), t0, t1); },
        py::arg("a"), py::arg("t0") = 0.0, py::arg("t1") = 1.0);
    m.def(
        "rk4_integrate",
        [](py::handle a, double t0, py::handle x0, double t1, double h) {
            return rk4_integrate(as_qmatrix(a), t0, as_qvector(x0), t1, h);
        },
        py::arg("a"), py::arg("t0"), py::arg("x0"), py::arg("t1"), py::arg("h") = 1e-4);
    m.def(
        "fd_residual",
        [](py::handle mfun, py::handle a, const std::vector<double>& ts) {
            auto fn = mfun.cast<py::function>();
            return fd_residual([fn](double t) { return as_qmatrix(fn(t)); }, as_qmatrix(a), ts);
        },
        py::arg("m"), py::arg("a"), py::arg("ts"),
        "Central-difference ODE residual of a matrix-valued function of t.");
}
