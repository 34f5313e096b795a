#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgtail/bounds.hpp"
#include "sgtail/cffit.hpp"
#include "sgtail/diagnostics.hpp"
#include "sgtail/dist.hpp"
#include "sgtail/error.hpp"
#include "sgtail/randsum.hpp"
#include "sgtail/specfun.hpp"

namespace py = pybind11;
using namespace sgtail;

namespace {

diagnostics::TailMode tail_mode(const std::string& name) {
  if (name == "upper") return diagnostics::TailMode::kUpper;
  if (name == "absolute") return diagnostics::TailMode::kAbsolute;
  throw DomainError("tail mode must be 'upper' or 'absolute'");
}

randsum::Component component(const std::string& name, int m) {
  if (name == "uniform") return randsum::uniform_component(2.0);
  if (name == "normal") return randsum::normal_component(2.0);
  if (name == "sg") return randsum::sg_component(m);
  throw DomainError("component must be 'uniform', 'normal' or 'sg'");
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Symmetrized gamma law, tail diagnostics and stable fits";

  py::register_exception<DomainError>(mod, "DomainError", PyExc_ValueError);
  py::register_exception<DataError>(mod, "DataError", PyExc_ValueError);
  py::register_exception<NonConvergence>(mod, "NonConvergence", PyExc_ArithmeticError);

  mod.def("log_gamma", &specfun::log_gamma, py::arg("x"));
  mod.def("bessel_k", &specfun::bessel_k, py::arg("nu"), py::arg("x"));

  mod.def("sg_cf", [](double m, double t) { return dist::sg_cf(dist::SymmetrizedGamma(m), t); }, py::arg("m"), py::arg("t"));
  mod.def("sg_pdf", [](double m, double x) { return dist::sg_pdf(dist::SymmetrizedGamma(m), x); }, py::arg("m"), py::arg("x"));
  mod.def("sg_cdf", [](double m, double x) { return dist::sg_cdf(dist::SymmetrizedGamma(m), x); }, py::arg("m"), py::arg("x"));
  mod.def("sg_survival", [](double m, double x) { return dist::sg_survival(dist::SymmetrizedGamma(m), x); },
          py::arg("m"), py::arg("x"));
  mod.def(
      "sg_two_sided_exceed",
      [](double m, double k, const std::string& unit) {
        const auto u = unit == "stddev" ? dist::DeviationUnit::kStdDev : dist::DeviationUnit::kTableUnit;
        if (unit != "stddev" && unit != "table") throw DomainError("unit must be 'table' or 'stddev'");
        return dist::sg_two_sided_exceed(dist::SymmetrizedGamma(m), k, u);
      },
      py::arg("m"), py::arg("k_sigmas"), py::arg("unit") = "table");
  mod.def("sg_kurtosis", [](double m) { return dist::sg_kurtosis(dist::SymmetrizedGamma(m)); }, py::arg("m"));
  mod.def(
      "sg_sample",
      [](double m, std::size_t n, std::uint64_t seed) {
        Rng rng(seed);
        return dist::sg_sample(dist::SymmetrizedGamma(m), rng, n);
      },
      py::arg("m"), py::arg("n"), py::arg("seed") = 0x5EED);
  mod.def("stable_cdf", [](double alpha, double lambda, double x) {
    return dist::stable_cdf(dist::SymmetricStable(alpha, lambda), x);
  }, py::arg("alpha"), py::arg("lambda_"), py::arg("x"));

  mod.def("gauss_bound", [](double d, double sigma) { return bounds::gauss_bound(d, sigma).bound; }, py::arg("d"),
          py::arg("sigma") = 1.0);
  mod.def("chebyshev_bound", [](double d, double sigma) { return bounds::chebyshev_bound(d, sigma).bound; },
          py::arg("d"), py::arg("sigma") = 1.0);

  mod.def(
      "hill_estimate",
      [](const std::vector<double>& sample, std::size_t k, const std::string& mode) {
        return diagnostics::hill_estimate(sample, k, tail_mode(mode));
      },
      py::arg("sample"), py::arg("k"), py::arg("mode") = "absolute");
  mod.def(
      "hill_experiment",
      [](double m, std::size_t n, std::size_t sims, std::uint64_t seed, const std::string& mode, int workers) {
        py::dict out;
        for (const auto& row : diagnostics::hill_experiment(m, n, diagnostics::kAllRules, sims, seed, tail_mode(mode), workers)) {
          out[py::str(diagnostics::to_string(row.rule))] = row.mean_gamma;
        }
        return out;
      },
      py::arg("m") = 10.0, py::arg("n") = 10000, py::arg("sims") = 100, py::arg("seed") = 0x5EED,
      py::arg("mode") = "upper", py::arg("workers") = 1);
  mod.def("empirical_kurtosis", [](const std::vector<double>& s) { return diagnostics::empirical_kurtosis(s); },
          py::arg("sample"));

  mod.def("sum_cf", &cffit::sum_cf, py::arg("m"), py::arg("n"), py::arg("t"));
  mod.def(
      "fit_stable_to_cf",
      [](double m, int n, double delta, double Delta, const std::string& method) {
        const auto fit = cffit::fit_stable_to_cf(m, n, cffit::FitWindow{delta, Delta, 256}, cffit::parse_fit_method(method));
        return py::make_tuple(fit.alpha, fit.lambda);
      },
      py::arg("m"), py::arg("n"), py::arg("delta") = 0.005, py::arg("Delta") = 0.5, py::arg("method") = "ls-cf");

  mod.def("nu_pgf", [](int m, double p, double z) { return randsum::nu_pgf(randsum::NuFamily(m, p), z); },
          py::arg("m"), py::arg("p"), py::arg("z"));
  mod.def(
      "random_sum_ks",
      [](int m, const std::vector<double>& p_schedule, const std::string& comp, std::size_t reps, std::uint64_t seed,
         int workers) {
        std::vector<std::pair<double, double>> out;
        for (const auto& row : randsum::theorem1_experiment(m, component(comp, m), p_schedule, reps, seed, workers)) {
          out.emplace_back(row.p, row.ks);
        }
        return out;
      },
      py::arg("m"), py::arg("p_schedule"), py::arg("component") = "uniform", py::arg("replicates") = 100000,
      py::arg("seed") = 0x5EED, py::arg("workers") = 1);
}
