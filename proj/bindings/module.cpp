#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sendov/asymptotic.hpp"
#include "sendov/certify.hpp"
#include "sendov/search.hpp"

namespace py = pybind11;
using namespace sendov;

namespace {

FactoredPolynomial make_factored(Complex a, int n,
                                 const std::vector<std::pair<Complex, int>>& others,
                                 bool unit_disk) {
    std::vector<PrescribedRoot> roots;
    roots.reserve(others.size());
    for (const auto& [z, mult] : others) roots.push_back({z, mult});
    return FactoredPolynomial(a, n, std::move(roots), unit_disk);
}

AsymptoticConfig make_asymptotic(Complex a,
                                 const std::vector<std::tuple<Complex, int, RemainderRule>>& entries) {
    std::vector<AsymptoticEntry> es;
    es.reserve(entries.size());
    for (const auto& [z, r, s] : entries) es.push_back({z, r, s});
    return AsymptoticConfig(a, std::move(es));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Critical-point containment certificates for factored polynomials";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<NotLocatedError>(m, "NotLocatedError", PyExc_RuntimeError);

    py::class_<FactoredPolynomial>(m, "FactoredPolynomial")
        .def(py::init(&make_factored), py::arg("a"), py::arg("n"), py::arg("others"),
             py::arg("unit_disk") = true,
             "Polynomial (z-a)^n * prod (z-z_j)^{n_j}; others is a list of (z_j, n_j)")
        .def_property_readonly("a", &FactoredPolynomial::a)
        .def_property_readonly("n", &FactoredPolynomial::n)
        .def_property_readonly("k", &FactoredPolynomial::k)
        .def_property_readonly("m", &FactoredPolynomial::m)
        .def_property_readonly("unit_disk", &FactoredPolynomial::unit_disk)
        .def_property_readonly("others",
                               [](const FactoredPolynomial& fp) {
                                   std::vector<std::pair<Complex, int>> out;
                                   for (const auto& pr : fp.others())
                                       out.emplace_back(pr.z, pr.mult);
                                   return out;
                               })
        .def("__call__",
             [](const FactoredPolynomial& fp, Complex z) { return evaluate(fp, z); })
        .def("__repr__", [](const FactoredPolynomial& fp) {
            return "<FactoredPolynomial m=" + std::to_string(fp.m()) +
                   " k=" + std::to_string(fp.k()) + ">";
        });

    py::class_<CoefficientPolynomial>(m, "CoefficientPolynomial")
        .def(py::init<std::vector<Complex>>(), py::arg("coeffs"),
             "Dense polynomial, coefficients in ascending powers")
        .def_property_readonly("degree", &CoefficientPolynomial::degree)
        .def_property_readonly("coeffs",
                               [](const CoefficientPolynomial& cp) { return cp.coeffs(); })
        .def("__call__",
             [](const CoefficientPolynomial& cp, Complex z) { return evaluate(cp, z); })
        .def("__repr__", [](const CoefficientPolynomial& cp) {
            return "<CoefficientPolynomial degree=" + std::to_string(cp.degree()) + ">";
        });

    m.def("expand", &expand, py::arg("fp"), py::arg("degree_cap") = kDegreeCap);
    m.def("derivative", &derivative, py::arg("cp"));
    m.def("deflated_derivative", &deflated_derivative, py::arg("fp"));
    m.def("canonicalize", &canonicalize, py::arg("fp"));

    py::class_<SolveOptions>(m, "SolveOptions")
        .def(py::init<>())
        .def_readwrite("tol", &SolveOptions::tol)
        .def_readwrite("residual_tol", &SolveOptions::residual_tol)
        .def_readwrite("max_iter", &SolveOptions::max_iter)
        .def_readwrite("cluster_tol", &SolveOptions::cluster_tol);

    py::class_<RootResult>(m, "RootResult")
        .def_readonly("roots", &RootResult::roots)
        .def_readonly("residuals", &RootResult::residuals)
        .def_readonly("iterations", &RootResult::iterations)
        .def_readonly("converged", &RootResult::converged);

    m.def("all_roots", &all_roots, py::arg("cp"), py::arg("opt") = SolveOptions{});
    m.def("free_critical_points", &free_critical_points, py::arg("fp"),
          py::arg("opt") = SolveOptions{});
    m.def("gauss_lucas_check",
          [](const FactoredPolynomial& fp, const std::vector<Complex>& pts, double tol) {
              return gauss_lucas_check(fp, pts, tol);
          },
          py::arg("fp"), py::arg("points"), py::arg("tol") = 1e-7);

    py::class_<SendovWitness>(m, "SendovWitness")
        .def_readonly("root", &SendovWitness::root)
        .def_readonly("witness", &SendovWitness::witness)
        .def_readonly("distance", &SendovWitness::distance);

    py::class_<DiskCertificate>(m, "DiskCertificate")
        .def_readonly("center", &DiskCertificate::center)
        .def_readonly("radius", &DiskCertificate::radius)
        .def_readonly("witness", &DiskCertificate::witness)
        .def_readonly("slack", &DiskCertificate::slack)
        .def("valid", &DiskCertificate::valid, py::arg("tol") = kCertTol);

    py::class_<HalfplaneWitness>(m, "HalfplaneWitness")
        .def_readonly("index", &HalfplaneWitness::index)
        .def_readonly("value", &HalfplaneWitness::value)
        .def_readonly("threshold", &HalfplaneWitness::threshold);

    py::class_<Thm2Report>(m, "Thm2Report")
        .def_readonly("a", &Thm2Report::a)
        .def_readonly("a0", &Thm2Report::a0)
        .def_readonly("bound", &Thm2Report::bound)
        .def_readonly("witness", &Thm2Report::witness)
        .def_readonly("witness_abs", &Thm2Report::witness_abs)
        .def_readonly("distance", &Thm2Report::distance)
        .def_readonly("triangle_bound", &Thm2Report::triangle_bound)
        .def_readonly("certified", &Thm2Report::certified)
        .def_readonly("within_bound", &Thm2Report::within_bound)
        .def_readonly("within_unit", &Thm2Report::within_unit)
        .def("valid", &Thm2Report::valid);

    m.def("sendov_witness", &sendov_witness, py::arg("fp"), py::arg("opt") = SolveOptions{});
    m.def("lemma_critical_point", &lemma_critical_point, py::arg("a"), py::arg("b"),
          py::arg("kmul"), py::arg("rmul"));
    m.def("lemma_distance", &lemma_distance, py::arg("a"), py::arg("b"), py::arg("kmul"),
          py::arg("rmul"));
    m.def("lemma_predicate", &lemma_predicate, py::arg("a"), py::arg("b"), py::arg("kmul"),
          py::arg("rmul"));
    m.def("thm1_disk", &thm1_disk, py::arg("fp"), py::arg("opt") = SolveOptions{});
    m.def("thm1_identity_residual", &thm1_identity_residual, py::arg("fp"),
          py::arg("opt") = SolveOptions{});
    m.def("thm1_halfplane_witness", &thm1_halfplane_witness, py::arg("fp"),
          py::arg("opt") = SolveOptions{});
    m.def("corollary1_witness", &corollary1_witness, py::arg("fp"),
          py::arg("opt") = SolveOptions{});
    m.def("phi", &phi, py::arg("a"), py::arg("k"), py::arg("n"), py::arg("m"));
    m.def("solve_a0", &solve_a0, py::arg("k"), py::arg("n"), py::arg("m"),
          py::arg("tol") = 1e-12);
    m.def("thm2_certificate", &thm2_certificate, py::arg("fp"), py::arg("opt") = SolveOptions{});
    m.def("remark1_value", &remark1_value, py::arg("k"));
    m.def("remark1_check", &remark1_check, py::arg("k"));

    py::class_<RemainderRule>(m, "RemainderRule")
        .def_static("constant", &RemainderRule::constant, py::arg("value"))
        .def_static("cycle", &RemainderRule::cycle, py::arg("c"), py::arg("d"),
                    "(c*n) mod d")
        .def_static("log_rule", &RemainderRule::log_rule, py::arg("coef"),
                    "floor(coef * ln n)")
        .def_static("table_rule", &RemainderRule::table_rule, py::arg("entries"))
        .def("eval", &RemainderRule::eval, py::arg("n"));

    py::class_<AsymptoticConfig>(m, "AsymptoticConfig")
        .def(py::init(&make_asymptotic), py::arg("a"), py::arg("entries"),
             "entries: list of (z_j, r_j, RemainderRule)")
        .def_property_readonly("a", &AsymptoticConfig::a)
        .def_property_readonly("k", &AsymptoticConfig::k)
        .def_property_readonly("min_valid_n", &AsymptoticConfig::min_valid_n)
        .def_property_readonly("sum_r", &AsymptoticConfig::sum_r)
        .def("X", &AsymptoticConfig::X)
        .def("Y", &AsymptoticConfig::Y, py::arg("n"))
        .def("stable_Y", [](const AsymptoticConfig& c) { return c.stable_Y(); })
        .def("assemble", &AsymptoticConfig::assemble, py::arg("n"));

    py::class_<HypothesisIVResult>(m, "HypothesisIVResult")
        .def_readonly("satisfied", &HypothesisIVResult::satisfied)
        .def_readonly("zeta", &HypothesisIVResult::zeta)
        .def_readonly("margin", &HypothesisIVResult::margin)
        .def_readonly("candidates", &HypothesisIVResult::candidates);

    py::class_<TraceEntry>(m, "TraceEntry")
        .def_readonly("n", &TraceEntry::n)
        .def_readonly("zeta", &TraceEntry::zeta)
        .def_readonly("dist_to_zstar", &TraceEntry::dist_to_zstar)
        .def_readonly("dist_to_a", &TraceEntry::dist_to_a);

    py::class_<N0Result>(m, "N0Result")
        .def_readonly("n0", &N0Result::n0)
        .def_readonly("zstar", &N0Result::zstar)
        .def_readonly("margin", &N0Result::margin)
        .def_readonly("rho", &N0Result::rho)
        .def_readonly("trace", &N0Result::trace);

    m.def("build_P", &build_P, py::arg("cfg"));
    m.def("check_hypothesis_iv", &check_hypothesis_iv, py::arg("cfg"),
          py::arg("opt") = SolveOptions{});
    m.def("build_fn", &build_fn, py::arg("cfg"), py::arg("n"));
    m.def("build_fn_displayed", &build_fn_displayed, py::arg("cfg"), py::arg("n"),
          py::arg("opt") = SolveOptions{});
    m.def("build_f", &build_f, py::arg("cfg"), py::arg("opt") = SolveOptions{});
    m.def("find_n0",
          [](const AsymptoticConfig& cfg, double rho, long long n_max, int window) {
              N0Options opt;
              opt.rho = rho;
              opt.n_max = n_max;
              opt.stability_window = window;
              return find_n0(cfg, opt);
          },
          py::arg("cfg"), py::arg("rho") = -1.0, py::arg("n_max") = 10000,
          py::arg("window") = 10);

    py::class_<SearchSpace>(m, "SearchSpace")
        .def(py::init<>())
        .def_readwrite("k", &SearchSpace::k)
        .def_readwrite("n", &SearchSpace::n)
        .def_readwrite("multiplicities", &SearchSpace::multiplicities)
        .def_readwrite("a_free", &SearchSpace::a_free)
        .def_readwrite("a_fixed", &SearchSpace::a_fixed)
        .def_readwrite("seed", &SearchSpace::seed);

    py::class_<SearchReport>(m, "SearchReport")
        .def_readonly("best_config", &SearchReport::best_config)
        .def_readonly("best_margin", &SearchReport::best_margin)
        .def_readonly("evaluations", &SearchReport::evaluations)
        .def_readonly("history", &SearchReport::history);

    m.def("margin", &margin, py::arg("fp"), py::arg("opt") = SolveOptions{});
    m.def("corollary1_applicable", &corollary1_applicable, py::arg("space"));
    m.def("maximize_margin",
          [](const SearchSpace& space, int restarts, int iters, int threads) {
              SearchOptions opt;
              opt.restarts = restarts;
              opt.iters = iters;
              opt.threads = threads;
              return maximize_margin(space, opt);
          },
          py::arg("space"), py::arg("restarts") = 32, py::arg("iters") = 400,
          py::arg("threads") = 0);

    m.attr("__version__") = "0.1.0";
}
