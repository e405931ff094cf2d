// quatode command line: quaternion determinants, spectra, fundamental
// matrices, exp(At), IVP solving, and the self-check gate suite over JSON
// problem files.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>

#include "quatode/errors.hpp"
#include "quatode/json_io.hpp"
#include "quatode/oracle.hpp"
#include "quatode/pdet.hpp"
#include "quatode/qde.hpp"
#include "quatode/spectra.hpp"

namespace {

using namespace quatode;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitNumericalError = 3;

struct Options {
    std::string input;
    std::string x0_path;
    double t = 1.0;
    double t0 = 0.0;
    std::string method = "eigen";
    double tol = 0.0; // 0 = per-operation default
    std::string format = "text";
};

std::string render(const Quaternion& q, const Options& opt) {
    if (opt.format == "json") {
        return quaternion_to_json(q).dump();
    }
    return format_quaternion(q);
}

void print_vector(const QVector& v, const Options& opt) {
    if (opt.format == "json") {
        std::cout << vector_to_json(v).dump() << "\n";
        return;
    }
    std::cout << "(";
    for (int i = 0; i < v.size(); ++i) {
        std::cout << (i ? ", " : "") << format_quaternion(v[i]);
    }
    std::cout << ")\n";
}

void print_matrix(const QMatrix& m, const Options& opt) {
    if (opt.format == "json") {
        std::cout << matrix_to_json(m).dump() << "\n";
        return;
    }
    for (int r = 0; r < m.rows(); ++r) {
        std::cout << "[";
        for (int c = 0; c < m.cols(); ++c) {
            std::cout << (c ? ", " : "") << format_quaternion(m(r, c));
        }
        std::cout << "]\n";
    }
}

QMatrix require_matrix(const ProblemFile& p) {
    if (!p.matrix) {
        throw ParseError("problem file has no \"matrix\" field");
    }
    return *p.matrix;
}

QVector require_x0(const ProblemFile& p, const Options& opt, int n) {
    if (!opt.x0_path.empty()) {
        std::ifstream in(opt.x0_path);
        if (!in) {
            throw ParseError("cannot open x0 file: " + opt.x0_path);
        }
        Json j;
        try {
            in >> j;
        } catch (const Json::exception& e) {
            throw ParseError(std::string("invalid JSON in x0 file: ") + e.what());
        }
        if (j.is_object() && j.contains("x0")) {
            j = j.at("x0");
        }
        QVector x0 = vector_from_json(j);
        if (x0.size() != n) {
            throw ParseError("x0 length does not match the system dimension");
        }
        return x0;
    }
    if (p.x0) {
        return *p.x0;
    }
    throw ParseError("no initial value: provide \"x0\" in the problem file or --x0");
}

int run_det(const Options& opt) {
    const QMatrix a = require_matrix(load_problem(opt.input));
    std::cout << render(det_p(a), opt) << "\n";
    return kExitOk;
}

int run_ddet(const Options& opt) {
    const QMatrix a = require_matrix(load_problem(opt.input));
    if (opt.format == "json") {
        std::cout << Json(ddet(a)).dump() << "\n";
    } else {
        std::cout << ddet(a) << "\n";
    }
    return kExitOk;
}

int run_eig(const Options& opt) {
    const QMatrix a = require_matrix(load_problem(opt.input));
    const Spectrum spectrum = full_spectrum(a);
    if (opt.format == "json") {
        Json out = Json::array();
        for (const auto& entry : spectrum.entries) {
            Json chains = Json::array();
            for (const auto& chain : entry.chains) {
                Json vs = Json::array();
                for (const auto& v : chain) {
                    vs.push_back(vector_to_json(v));
                }
                chains.push_back(std::move(vs));
            }
            out.push_back({{"lambda", quaternion_to_json(entry.lambda)},
                           {"multiplicity", entry.multiplicity},
                           {"chains", std::move(chains)}});
        }
        std::cout << out.dump() << "\n";
        return kExitOk;
    }
    for (const auto& entry : spectrum.entries) {
        std::cout << "lambda = " << format_quaternion(entry.lambda)
                  << "  multiplicity = " << entry.multiplicity << "\n";
        int ci = 0;
        for (const auto& chain : entry.chains) {
            std::cout << "  chain " << ++ci << ":";
            for (const auto& v : chain) {
                std::cout << " (";
                for (int i = 0; i < v.size(); ++i) {
                    std::cout << (i ? ", " : "") << format_quaternion(v[i]);
                }
                std::cout << ")";
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int run_fundmat(const Options& opt, bool t_given) {
    const QMatrix a = require_matrix(load_problem(opt.input));
    const SolutionBasis basis = fundamental_matrix(a);
    if (opt.format == "json") {
        Json out = basis_to_json(basis);
        if (t_given) {
            out["at_t"] = matrix_to_json(basis.eval(opt.t));
        }
        std::cout << out.dump() << "\n";
        return kExitOk;
    }
    int ci = 0;
    for (const auto& column : basis.columns) {
        std::string lambda = format_quaternion(column.lambda);
        if (lambda.find_first_of("+-", 1) != std::string::npos) {
            lambda = "(" + lambda + ")";
        }
        std::cout << "column " << ++ci << ": exp(" << lambda << " t) with coefficients\n";
        for (const auto& [p, v] : column.coeffs) {
            std::cout << "  t^" << p << "/" << p << "! * (";
            for (int i = 0; i < v.size(); ++i) {
                std::cout << (i ? ", " : "") << format_quaternion(v[i]);
            }
            std::cout << ")\n";
        }
    }
    if (t_given) {
        std::cout << "M(" << opt.t << "):\n";
        print_matrix(basis.eval(opt.t), opt);
    }
    return kExitOk;
}

int run_expat(const Options& opt) {
    const ProblemFile p = load_problem(opt.input);
    const QMatrix a = require_matrix(p);
    QMatrix result;
    if (opt.method == "series") {
        // flag beats the file's tolerance, which beats the built-in default
        const double tol = opt.tol > 0.0 ? opt.tol : p.tol.value_or(1e-13);
        result = exp_series(a, opt.t, tol);
    } else if (opt.method == "eigen") {
        result = exp_at(a, opt.t);
    } else {
        throw ParseError("unknown --method: " + opt.method);
    }
    print_matrix(result, opt);
    return kExitOk;
}

int run_solve(const Options& opt) {
    const ProblemFile p = load_problem(opt.input);
    const QMatrix a = require_matrix(p);
    const double t0 = p.t0.value_or(opt.t0);
    const QVector x0 = require_x0(p, opt, a.rows());
    print_vector(solve_ivp(a, t0, x0, opt.t), opt);
    return kExitOk;
}

int run_diag_solve(const Options& opt) {
    const ProblemFile p = load_problem(opt.input);
    if (!p.diag) {
        throw ParseError("diag-solve needs a \"diag\" field with coefficient polynomials");
    }
    const double t0 = p.t0.value_or(opt.t0);
    const QVector x0 = require_x0(p, opt, static_cast<int>(p.diag->size()));
    print_vector(solve_diagonal(*p.diag, t0, x0, opt.t), opt);
    return kExitOk;
}

int run_check(const Options& opt) {
    const ProblemFile problem = load_problem(opt.input);
    const QMatrix a = require_matrix(problem);
    const int n = a.rows();
    // gate the claimed basis when the fixture carries one, else our own
    const SolutionBasis basis = problem.basis ? *problem.basis : fundamental_matrix(a);

    struct Gate {
        std::string name;
        double value;
        double threshold;
    };
    std::vector<Gate> gates;

    const QMatrix expat0 = exp_at(a, 0.0);
    gates.push_back({"exp(0) = I", norm(expat0 - QMatrix::identity(n)), 1e-10});

    const std::vector<double> ts{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    gates.push_back(
        {"ODE residual", fd_residual([&](double t) { return basis.eval(t); }, a, ts), 1e-6});

    gates.push_back({"series agreement", norm(exp_at(a, 1.0) - exp_series(a, 1.0)), 1e-8});

    double rk4_gap = 0.0;
    const QMatrix expat1 = exp_at(a, 1.0);
    for (int i = 0; i < n; ++i) {
        QVector e(n);
        e[i] = Quaternion{1.0};
        const IntegrationResult rk = rk4_integrate(a, 0.0, e, 1.0, 1e-4);
        rk4_gap = std::max(rk4_gap, norm(rk.state - mat_vec(expat1, e)));
    }
    gates.push_back({"RK4 agreement", rk4_gap, 1e-6});

    double min_ddet = std::numeric_limits<double>::infinity();
    for (double t : ts) {
        min_ddet = std::min(min_ddet, ddet(basis.eval(t)));
    }
    // nondegeneracy gate passes when the smallest sampled ddet stays above
    // tolerance; report it as a deficit so one pass/fail convention covers all
    gates.push_back({"ddet nondegeneracy", min_ddet > 1e-9 ? 0.0 : 1.0, 0.5});

    bool all_ok = true;
    for (const Gate& gate : gates) {
        const bool ok = gate.value <= gate.threshold;
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << gate.name << "  (measured "
                  << gate.value << ", limit " << gate.threshold << ")\n";
    }
    if (!all_ok) {
        std::cerr << "check failed for " << opt.input << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int run_liouville(const Options& opt) {
    const QMatrix a = require_matrix(load_problem(opt.input));
    const LiouvilleReport report = liouville_check(a, opt.t0, opt.t);
    if (opt.format == "json") {
        std::cout << Json{{"factor", report.factor}, {"max_rel_err", report.max_rel_err}}.dump()
                  << "\n";
    } else {
        std::cout << "factor = " << report.factor << "  max_rel_err = " << report.max_rel_err
                  << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternion linear differential equation toolkit"};
    app.require_subcommand(1);

    Options opt;
    bool t_given = false;

    auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
        auto* input = cmd->add_option("--input", opt.input, "problem file (JSON)");
        if (needs_input) {
            input->required();
        }
        cmd->add_option("--t", opt.t, "evaluation time (default 1)")
            ->each([&](const std::string&) { t_given = true; });
        cmd->add_option("--t0", opt.t0, "initial time (default 0)");
        cmd->add_option("--x0", opt.x0_path, "initial value file (JSON vector)");
        cmd->add_option("--tol", opt.tol, "series truncation tolerance override");
        cmd->add_option("--format", opt.format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
        return cmd;
    };

    auto* det = add_common(app.add_subcommand("det", "permutation determinant"));
    auto* ddet_cmd = add_common(app.add_subcommand("ddet", "double determinant"));
    auto* eig = add_common(app.add_subcommand("eig", "standard eigenvalues and chains"));
    auto* fundmat = add_common(app.add_subcommand("fundmat", "symbolic fundamental matrix"));
    auto* expat = add_common(app.add_subcommand("expat", "exp(A t) at --t"));
    expat->add_option("--method", opt.method, "eigen|series (default eigen)")
        ->check(CLI::IsMember({"eigen", "series"}));
    auto* solve = add_common(app.add_subcommand("solve", "IVP solution x(t)"));
    auto* diag_solve =
        add_common(app.add_subcommand("diag-solve", "diagonal time-varying system"));
    auto* check = add_common(app.add_subcommand("check", "run the verification gate suite"));
    auto* liouville =
        add_common(app.add_subcommand("liouville", "measured Wronskian growth factor"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        app.exit(e);
        return kExitParseError;
    }

    try {
        if (det->parsed()) return run_det(opt);
        if (ddet_cmd->parsed()) return run_ddet(opt);
        if (eig->parsed()) return run_eig(opt);
        if (fundmat->parsed()) return run_fundmat(opt, t_given);
        if (expat->parsed()) return run_expat(opt);
        if (solve->parsed()) return run_solve(opt);
        if (diag_solve->parsed()) return run_diag_solve(opt);
        if (check->parsed()) return run_check(opt);
        if (liouville->parsed()) return run_liouville(opt);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumericalError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumericalError;
    }
    return kExitOk;
}
