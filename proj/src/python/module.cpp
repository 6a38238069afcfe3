// Python bindings for the main operations. Reports that have a JSON form on
// the CLI side come back as plain dicts built from the same rendering code,
// so Python and CLI consumers see identical structures.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "lapalg/errors.hpp"
#include "lapalg/groups.hpp"
#include "lapalg/harmonic.hpp"
#include "lapalg/jobs.hpp"
#include "lapalg/jordan.hpp"
#include "lapalg/laplacian.hpp"
#include "lapalg/parser.hpp"
#include "lapalg/polarization.hpp"
#include "lapalg/subalgebra.hpp"
#include "lapalg/version.hpp"

namespace py = pybind11;
using namespace lapalg;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    py::module_ json_mod = py::module_::import("json");
    return json_mod.attr("loads")(j.dump());
}

std::vector<Polynomial> parse_list(const std::vector<std::string>& texts, int n) {
    int dim = n;
    if (dim < 0)
        for (const std::string& t : texts) dim = std::max(dim, parse_polynomial(t, -1).nvars());
    std::vector<Polynomial> out;
    for (const std::string& t : texts) out.push_back(parse_polynomial(t, dim));
    return out;
}

QMatrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) throw input_error("matrix must have at least one row");
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw input_error("ragged matrix rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const std::string& s = rows[i][j];
            auto slash = s.find('/');
            m.at(static_cast<int>(i), static_cast<int>(j)) =
                slash == std::string::npos ? make_rational(s)
                                           : make_rational(s.substr(0, slash), s.substr(slash + 1));
        }
    }
    return m;
}

std::vector<std::vector<std::string>> matrix_to_rows(const QMatrix& m) {
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<std::string> row;
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computational toolkit for Laplacian algebras: polynomial "
              "calculus over Q, harmonic decomposition, subalgebra membership, "
              "Laplacian closures, polarizations, Jordan/Clifford tests, and "
              "finite-group invariants.";
    m.attr("__version__") = kVersion;

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init([](const std::string& text, int n) { return parse_polynomial(text, n); }),
             py::arg("text"), py::arg("n") = -1)
        .def_property_readonly("n", &Polynomial::nvars)
        .def_property_readonly("degree", &Polynomial::degree)
        .def("is_zero", &Polynomial::is_zero)
        .def("is_homogeneous", [](const Polynomial& p) { return is_homogeneous(p); })
        .def("__str__", [](const Polynomial& p) { return to_string(p); })
        .def("__repr__",
             [](const Polynomial& p) { return "Polynomial('" + to_string(p) + "')"; })
        .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
        .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
        .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
        .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
        .def("__neg__", [](const Polynomial& a) { return -a; })
        .def("__pow__", [](const Polynomial& a, unsigned e) { return pow(a, e); })
        .def("derivative", [](const Polynomial& p, int i) { return derivative(p, i - 1); },
             py::arg("var"), "partial derivative with respect to the 1-based variable index")
        .def("laplacian", [](const Polynomial& p) { return laplacian(p); })
        .def("evaluate", [](const Polynomial& p, const std::vector<std::string>& point) {
            std::vector<Rational> pt;
            for (const std::string& s : point) {
                auto slash = s.find('/');
                pt.push_back(slash == std::string::npos
                                 ? make_rational(s)
                                 : make_rational(s.substr(0, slash), s.substr(slash + 1)));
            }
            return to_string(evaluate(p, pt));
        });

    m.def("parse", [](const std::string& t, int n) { return parse_polynomial(t, n); },
          py::arg("text"), py::arg("n") = -1);
    m.def("r_squared", &r_squared, py::arg("n"));
    m.def("grad_inner", &grad_inner, py::arg("p"), py::arg("q"));
    m.def("apolar_inner",
          [](const Polynomial& p, const Polynomial& q) { return to_string(apolar_inner(p, q)); });
    m.def("sphere_moment", [](const std::vector<int>& exps, int n) {
        return to_string(sphere_moment(Monomial(exps), n));
    });

    m.def("harmonic_decompose", [](const Polynomial& p) {
        HarmonicSplit s = harmonic_decompose(p);
        return std::make_pair(s.degree, s.components);
    });
    m.def("schur_ratios", [](int degree, int dim) {
        std::vector<std::string> out;
        for (const Rational& r : schur_ratios(degree, dim).ratios) out.push_back(to_string(r));
        return out;
    });

    m.def("membership",
          [](const std::string& f, const std::vector<std::string>& gens, int n) {
              std::vector<Polynomial> g = parse_list(gens, n);
              SubalgebraPresentation alg(g.front().nvars(), g);
              MembershipResult r = alg.membership(parse_polynomial(f, g.front().nvars()));
              return py::make_tuple(r.in, r.in ? to_string(r.witness, "g") : std::string());
          },
          py::arg("f"), py::arg("generators"), py::arg("n") = -1);
    m.def("transcendence_degree",
          [](const std::vector<std::string>& gens, int n, int trials, std::uint64_t seed) {
              std::vector<Polynomial> g = parse_list(gens, n);
              SubalgebraPresentation alg(g.front().nvars(), g);
              return transcendence_degree(alg, trials, seed);
          },
          py::arg("generators"), py::arg("n") = -1, py::arg("trials") = 5, py::arg("seed") = 0);

    // Job-level entry point: same JSON reports as the CLI.
    m.def("run_job", [](const py::dict& job) {
        py::module_ json_mod = py::module_::import("json");
        std::string dumped = json_mod.attr("dumps")(job).cast<std::string>();
        JobOutcome outcome = run_job(nlohmann::json::parse(dumped));
        return json_to_py(outcome.report);
    });

    m.def("check_laplacian", [](const std::vector<std::string>& polys, int n) {
        nlohmann::json job{{"command", "check-laplacian"}, {"polynomials", polys}};
        if (n >= 0) job["n"] = n;
        return json_to_py(run_job(job).report);
    }, py::arg("polynomials"), py::arg("n") = -1);

    m.def("laplacian_closure", [](const std::vector<std::string>& polys, int n, int stage_budget) {
        nlohmann::json job{{"command", "closure"}, {"polynomials", polys},
                           {"stage_budget", stage_budget}};
        if (n >= 0) job["n"] = n;
        return json_to_py(run_job(job).report);
    }, py::arg("polynomials"), py::arg("n") = -1, py::arg("stage_budget") = 16);

    m.def("classical_polarizations", [](const std::string& f, int n, int k) {
        nlohmann::json job{{"command", "polarize"}, {"polynomial", f}, {"k", k}};
        if (n >= 0) job["n"] = n;
        return json_to_py(run_job(job).report);
    }, py::arg("f"), py::arg("n") = -1, py::arg("k") = 2);

    m.def("homogeneity_compare",
          [](const std::vector<std::string>& gens, int n, int k, int degree_bound) {
              nlohmann::json job{{"command", "homogeneity"}, {"polynomials", gens},
                                 {"k", k}, {"degree_bound", degree_bound}};
              if (n >= 0) job["n"] = n;
              return json_to_py(run_job(job).report);
          },
          py::arg("generators"), py::arg("n") = -1, py::arg("k") = 2, py::arg("degree_bound") = 4);

    m.def("quadratic_homogeneity_test",
          [](const std::vector<std::vector<std::vector<std::string>>>& matrices) {
              std::vector<QMatrix> mats;
              for (const auto& rows : matrices) mats.push_back(matrix_from_rows(rows));
              QuadraticHomogeneityReport r = quadratic_homogeneity_test(mats);
              py::dict out;
              out["homogeneous"] = r.homogeneous;
              out["jordan_dim"] = r.jordan_dim;
              out["enveloping_dim"] = r.enveloping_dim;
              out["symmetric_enveloping_dim"] = r.symmetric_enveloping_dim;
              if (r.witness) out["witness"] = matrix_to_rows(*r.witness);
              return out;
          });

    m.def("clifford_system", [](int m_count, int l) {
        CliffordSystem sys = clifford_system(m_count, l);
        py::dict out;
        out["m"] = sys.m;
        out["l"] = sys.l;
        std::vector<std::vector<std::vector<std::string>>> mats;
        for (const QMatrix& p : sys.mats) mats.push_back(matrix_to_rows(p));
        out["matrices"] = mats;
        std::vector<std::string> gens;
        for (const Polynomial& f : clifford_foliation_generators(sys))
            gens.push_back(to_string(f));
        out["foliation_generators"] = gens;
        return out;
    }, py::arg("m"), py::arg("l") = 0);

    m.def("finite_group_invariants",
          [](const std::vector<std::vector<std::vector<std::string>>>& generators,
             int degree_bound, int cap) {
              std::vector<QMatrix> gens;
              for (const auto& rows : generators) gens.push_back(matrix_from_rows(rows));
              FiniteGroup G = group_closure(gens, cap);
              std::vector<std::string> out;
              for (const Polynomial& f : reynolds_invariant_basis(G, degree_bound))
                  out.push_back(to_string(f));
              return py::make_tuple(G.order(), out);
          },
          py::arg("generators"), py::arg("degree_bound") = 0, py::arg("cap") = 10000);

    m.def("kns_check",
          [](const std::vector<std::string>& gens, int n, int k, int trials, std::uint64_t seed) {
              KnsReport r = kns_check(parse_list(gens, n), k, trials, seed);
              py::dict out;
              out["k"] = r.k;
              out["max_rank"] = r.max_rank;
              out["dim"] = r.dim;
              out["holds"] = r.holds;
              return out;
          },
          py::arg("generators"), py::arg("n") = -1, py::arg("k") = 1, py::arg("trials") = 5,
          py::arg("seed") = 0);
}
