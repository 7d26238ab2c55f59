#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracwave/alpha.hpp"
#include "fracwave/chaos.hpp"
#include "fracwave/lemmas.hpp"
#include "fracwave/moments.hpp"
#include "fracwave/params.hpp"
#include "fracwave/regularity.hpp"
#include "fracwave/spectral.hpp"

namespace py = pybind11;
using namespace fracwave;

namespace {

ValidatedParams make_params(double kappa, double hurst_space, double hurst_time,
                            const std::string& temporal_kind) {
  ModelParams p;
  p.kappa = kappa;
  p.hurst_space = hurst_space;
  p.hurst_time = hurst_time;
  p.temporal_kind = temporal_kind == "colored" ? TemporalKind::Colored : TemporalKind::White;
  return validate_params(p);
}

}  // namespace

PYBIND11_MODULE(_fracwave, m) {
  m.doc() = "numeric certificates for the fractional wave equation with rough noise";

  m.def("validate", [](double kappa, double H, double H0, const std::string& kind) {
    ValidatedParams vp = make_params(kappa, H, H0, kind);
    py::dict out;
    out["regime"] = regime_name(vp.regime);
    out["solvable"] = vp.solvable();
    if (vp.solvable()) {
      ExponentSet e = exponents(vp);
      out["growth"] = e.growth;
      out["p_factor"] = e.p_factor;
      out["holder_time_sup"] = e.holder_time_sup;
      out["holder_space_sup"] = e.holder_space_sup;
      out["chaos_series_power"] = e.chaos_series_power;
    }
    return out;
  }, py::arg("kappa"), py::arg("hurst_space"), py::arg("hurst_time") = 0.5,
     py::arg("temporal_kind") = "white");

  m.def("fbm_sine_identity", [](double r, double s, double H) {
    IdentityCheck c = fbm_sine_identity(r, s, H);
    return py::make_tuple(c.lhs, c.rhs, c.lhs_error);
  }, py::arg("r"), py::arg("s"), py::arg("hurst"));

  m.def("alpha_index_set", [](int n) {
    std::vector<std::vector<int>> out;
    for (const AlphaIndex& a : alpha_index_set(n)) out.push_back(a.entries);
    return out;
  }, py::arg("n"));

  m.def("j_integral", [](int a, double kappa, double H) {
    return J_integral(a, make_params(kappa, H, 0.5, "white"));
  }, py::arg("a"), py::arg("kappa"), py::arg("hurst_space"));

  m.def("chaos_norm", [](int n, double t, double kappa, double H, std::uint64_t seed) {
    ChaosOrderResult r = chaos_norm_white(n, t, make_params(kappa, H, 0.5, "white"), {}, seed);
    py::dict out;
    out["order"] = r.order;
    out["value"] = r.value;
    out["error_estimate"] = r.error_estimate;
    out["method"] = r.method == ChaosMethod::Quadrature ? "quadrature" : "monte_carlo";
    return out;
  }, py::arg("n"), py::arg("t"), py::arg("kappa"), py::arg("hurst_space"),
     py::arg("seed") = 1);

  m.def("chaos_norm_upper_bound", [](int n, double t, double kappa, double H, double H0,
                                     const std::string& kind) {
    return chaos_norm_upper_bound(n, t, make_params(kappa, H, H0, kind));
  }, py::arg("n"), py::arg("t"), py::arg("kappa"), py::arg("hurst_space"),
     py::arg("hurst_time") = 0.5, py::arg("temporal_kind") = "white");

  m.def("divergence_probe", [](double kappa, double H, double t) {
    DivergenceProbeResult r = second_chaos_divergence_probe(kappa, H, t);
    py::dict out;
    out["verdict"] = r.verdict == ProbeVerdict::Divergent ? "Divergent" : "Convergent";
    out["cutoffs"] = r.cutoffs;
    out["values"] = r.values;
    out["increments"] = r.increments;
    out["increment_slope"] = r.increment_slope;
    return out;
  }, py::arg("kappa"), py::arg("hurst_space"), py::arg("t") = 1.0);

  m.def("second_moment_upper_log", [](double t, double kappa, double H, double H0,
                                      const std::string& kind, int max_order) {
    return second_moment_upper(t, make_params(kappa, H, H0, kind), max_order).log_partial_sum;
  }, py::arg("t"), py::arg("kappa"), py::arg("hurst_space"), py::arg("hurst_time") = 0.5,
     py::arg("temporal_kind") = "white", py::arg("max_order") = 400);

  m.def("second_moment_lower_log", [](double t, double kappa, double H, double H0,
                                      const std::string& kind, int max_order) {
    return second_moment_lower(t, make_params(kappa, H, H0, kind), max_order).log_partial_sum;
  }, py::arg("t"), py::arg("kappa"), py::arg("hurst_space"), py::arg("hurst_time") = 0.5,
     py::arg("temporal_kind") = "white", py::arg("max_order") = 400);

  m.def("time_increment_variance", [](double t, double h, double kappa, double H) {
    IncrementSample s = time_increment_variance(t, h, make_params(kappa, H, 0.5, "white"), {});
    return py::make_tuple(s.variance, s.quadrature_error);
  }, py::arg("t"), py::arg("offset"), py::arg("kappa"), py::arg("hurst_space"));

  m.def("space_increment_variance", [](double t, double z, double kappa, double H) {
    IncrementSample s = space_increment_variance(t, z, make_params(kappa, H, 0.5, "white"), {});
    return py::make_tuple(s.variance, s.quadrature_error);
  }, py::arg("t"), py::arg("offset"), py::arg("kappa"), py::arg("hurst_space"));

  m.def("lemma_suite", [](std::uint64_t seed) {
    static const char* names[] = {"L1", "L2", "L3", "L5", "L6", "L7", "L8"};
    std::vector<py::dict> out;
    for (const LemmaCertificate& c : lemma_certificate_suite(seed)) {
      py::dict d;
      d["lemma"] = names[int(c.lemma_id)];
      d["lhs"] = c.lhs;
      d["rhs"] = c.rhs;
      d["rel_error"] = c.rel_error;
      d["tolerance"] = c.tolerance;
      d["passed"] = c.passed;
      out.push_back(d);
    }
    return out;
  }, py::arg("seed") = 7);
}
