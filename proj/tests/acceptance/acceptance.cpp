// Runs the acceptance scenarios and prints one verdict line per criterion.
// Tolerances are pinned here and applied to the metrics each scenario writes;
// scenario-side verdicts are not trusted.

#include "galilei/scenarios.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace sc = galilei::scenarios;
using nlohmann::json;

namespace {

struct Run
{
  json metrics;
  json params;
  double seconds = 0.0;
  int exit_code = 0;
};

std::filesystem::path g_root;

Run run(const std::string& name, json extra = json::object())
{
  json user = {{"scenario", name}, {"output", {{"dir", (g_root / name).string()}, {"emit_svg", false}}}};
  user.merge_patch(extra);
  const sc::ScenarioConfig cfg = sc::parse_config(user);
  const auto t0 = std::chrono::steady_clock::now();
  const sc::RunOutcome out = sc::run(cfg);
  Run r;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.metrics = out.metrics.at("metrics");
  r.params = out.metrics.at("params");
  r.exit_code = out.exit_code;
  return r;
}

double num(const Run& r, const std::string& key)
{
  const auto it = r.metrics.find(key);
  if (it == r.metrics.end() || !it->is_number())
    return std::numeric_limits<double>::quiet_NaN();
  return it->get<double>();
}

bool flag(const Run& r, const std::string& key)
{
  const auto it = r.metrics.find(key);
  return it != r.metrics.end() && it->is_boolean() && it->get<bool>();
}

bool le(double x, double tol) { return std::isfinite(x) && x <= tol; }
bool in(double x, double lo, double hi) { return std::isfinite(x) && x >= lo && x <= hi; }

struct Verdict
{
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what)
  {
    pass = pass && ok;
    if (!ok)
      detail += (detail.empty() ? "" : "; ") + what;
  }
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0)
{
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

} // namespace

int main(int argc, char** argv)
{
  g_root = argc > 1 ? std::filesystem::path(argv[1]) : std::filesystem::temp_directory_path() / "galilei_acceptance";
  std::filesystem::remove_all(g_root);

  struct Criterion
  {
    int id;
    std::string title;
    std::function<std::pair<Verdict, std::string>(double&)> check;
  };

  const double fuzz_tol = 1e-12;
  const double ratio_lo = 16.0 * 0.8, ratio_hi = 16.0 * 1.2;

  std::vector<Criterion> criteria = {
    {1, "group laws, 1e4 fuzzed elements",
     [&](double& secs) {
       const Run r = run("group-axioms", {{"run", {{"steps", 10000}, {"seed", 42}}}});
       secs = r.seconds;
       Verdict v;
       double worst = 0.0;
       for (const char* k : {"plain.associativity", "plain.identity", "plain.inverse", "extended.associativity",
                             "extended.identity", "extended.inverse"}) {
         v.require(le(num(r, k), fuzz_tol), k);
         worst = std::max(worst, num(r, k));
       }
       v.require(r.params.value("samples", 0) == 10000, "sample count");
       v.require(secs < 1.0, "runtime");
       return std::pair{v, fmt("max residual %.2e", worst)};
     }},
    {2, "Bargmann loop, kernel",
     [&](double& secs) {
       const Run r = run("bargmann-loop");
       secs = r.seconds;
       Verdict v;
       v.require(le(num(r, "kernel.bm_relative_error"), 4.0 * std::numeric_limits<double>::epsilon()), "b_m = a.v");
       v.require(flag(r, "kernel.b_a_v_exactly_zero"), "b, a, v zero");
       v.require(flag(r, "kernel.erasure_is_identity"), "erasure");
       return std::pair{v, fmt("max |b_m - a.v|/(|a||v|) %.2e over 1000 samples", num(r, "kernel.bm_relative_error"))};
     }},
    {3, "Bargmann loop, two-channel state",
     [&](double& secs) {
       const Run r = run("bargmann-loop", {{"grid", {{"n", 1024}}}});
       secs = r.seconds;
       Verdict v;
       v.require(le(num(r, "phase_error"), 1e-10), "phases");
       v.require(le(std::abs(num(r, "coherent_density_before_over_A2") - 4.0), 1e-12), "4A^2 before");
       v.require(le(num(r, "coherent_density_after_over_A2"), 1e-12), "density drop");
       v.require(le(num(r, "single_channel_density_change"), 1e-12), "single channel");
       v.require(secs < 5.0, "runtime");
       return std::pair{v, fmt("phase err %.1e, after/A^2 %.1e", num(r, "phase_error"),
                               num(r, "coherent_density_after_over_A2"))};
     }},
    {4, "true vs projective representation",
     [&](double& secs) {
       const Run r = run("mass-interference");
       secs = r.seconds;
       Verdict v;
       v.require(le(num(r, "extended.representation_error"), 1e-10), "representation");
       v.require(le(num(r, "relative_phase_vs_cocycle"), 1e-10), "cocycle phase");
       v.require(le(num(r, "loop_phase_vs_cocycle"), 1e-10), "loop phases");
       v.require(flag(r, "erased_loop_is_identity"), "erased loop");
       return std::pair{v, fmt("rep err %.1e, phase vs cocycle %.1e", num(r, "extended.representation_error"),
                               num(r, "relative_phase_vs_cocycle"))};
     }},
    {5, "boost covariance, n=1024, t=1",
     [&](double& secs) {
       const Run r = run("boost-covariance", {{"grid", {{"n", 1024}}}, {"run", {{"dt", 1e-3}, {"steps", 1000}}}});
       secs = r.seconds;
       Verdict v;
       v.require(le(num(r, "free.l2_difference"), 1e-6), "V = 0");
       v.require(le(num(r, "harmonic.l2_difference"), 1e-6), "harmonic V");
       v.require(secs < 30.0, "runtime");
       return std::pair{v, fmt("L2 free %.1e, harmonic %.1e", num(r, "free.l2_difference"),
                               num(r, "harmonic.l2_difference"))};
     }},
    {6, "complex-mass boost density ratio",
     [&](double& secs) {
       const Run r = run("unstable-boost");
       secs = r.seconds;
       Verdict v;
       v.require(le(num(r, "ratio_relative_error"), 1e-8), "ratio");
       v.require(flag(r, "enough_points_resolved"), "coverage");
       return std::pair{v, fmt("max rel err %.1e", num(r, "ratio_relative_error"))};
     }},
    {7, "relativistic remnant, O(v^4) under halving",
     [&](double& secs) {
       const Run r = run("remnant-phase", {{"physics", {{"c", 1.0}, {"v", 1e-2}}}});
       secs = r.seconds;
       Verdict v;
       v.require(in(num(r, "halving_ratio_1"), ratio_lo, ratio_hi), "1e-2 -> 5e-3");
       v.require(in(num(r, "halving_ratio_2"), ratio_lo, ratio_hi), "5e-3 -> 2.5e-3");
       return std::pair{v, fmt("ratios %.2f, %.2f (x = 0: %.2f)", num(r, "halving_ratio_1"), num(r, "halving_ratio_2"),
                               num(r, "halving_ratio_1_at_x0"))};
     }},
    {8, "Klein-Gordon limit",
     [&](double& secs) {
       const Run r = run("kg-vs-schrodinger", {{"physics", {{"c", 20.0}}}});
       secs = r.seconds;
       Verdict v;
       v.require(in(num(r, "doubling_ratio"), 3.4, 4.6), "c doubling ratio");
       v.require(le(num(r, "error_c_1e6"), 1e-9), "c = 1e6");
       v.require(secs < 30.0, "runtime");
       return std::pair{v, fmt("ratio %.3f, error at c=1e6 %.1e", num(r, "doubling_ratio"), num(r, "error_c_1e6"))};
     }},
    {9, "Lorentz loop, O(v^4) residual",
     [&](double& secs) {
       const Run r = run("lorentz-loop", {{"physics", {{"c", 1.0}, {"v", 0.1}, {"a", 1.0}}}});
       secs = r.seconds;
       Verdict v;
       v.require(le(num(r, "relative_residual_at_beta"), 1e-2), "v/c = 0.1");
       v.require(le(num(r, "relative_residual_at_beta_over_10"), 1e-6), "v/c = 0.01");
       v.require(in(num(r, "halving_ratio_1"), ratio_lo, ratio_hi), "halving ratio");
       return std::pair{v, fmt("res %.1e at 0.1, %.1e at 0.01, halving %.2f", num(r, "relative_residual_at_beta"),
                               num(r, "relative_residual_at_beta_over_10"), num(r, "halving_ratio_1"))};
     }},
    {10, "canonical maps, 1e4 on-shell states",
     [&](double& secs) {
       const Run r = run("canonical-maps", {{"run", {{"steps", 10000}}}});
       secs = r.seconds;
       Verdict v;
       v.require(le(num(r, "on_shell_relative_error"), fuzz_tol), "on shell");
       v.require(le(num(r, "composed_vs_f3_f2.q"), 0.0) && le(num(r, "composed_vs_f3_f2.p"), 0.0), "q, p");
       v.require(le(num(r, "composed_vs_f3_f2.energy_relative"), fuzz_tol), "energy");
       return std::pair{v, fmt("shell %.1e, composed E %.1e", num(r, "on_shell_relative_error"),
                               num(r, "composed_vs_f3_f2.energy_relative"))};
     }},
    {11, "five-dimensional invariance",
     [&](double& secs) {
       const Run r = run("sch5-residual");
       secs = r.seconds;
       Verdict v;
       v.require(le(num(r, "action5_axiom"), fuzz_tol), "action axiom");
       v.require(in(num(r, "observed_order"), 1.7, 2.3), "order");
       v.require(le(num(r, "inner_product5_invariance"), fuzz_tol), "pairing");
       return std::pair{v, fmt("order %.3f, axiom %.1e, pairing %.1e", num(r, "observed_order"), num(r, "action5_axiom"),
                               num(r, "inner_product5_invariance"))};
     }},
    {12, "accelerated frame, n=2048",
     [&](double& secs) {
       const Run r = run("accelerated-frame", {{"grid", {{"n", 2048}}}});
       secs = r.seconds;
       Verdict v;
       v.require(le(num(r, "l2_transformed_vs_direct"), 1e-5), "L2");
       v.require(flag(r, "horizon_at_most_1"), "t <= 1");
       v.require(std::isfinite(num(r, "kappa")), "kappa reported");
       v.require(r.metrics.contains("residual_curve"), "residual curve");
       v.require(secs < 60.0, "runtime");
       return std::pair{v, fmt("L2 %.1e, kappa %.8f", num(r, "l2_transformed_vs_direct"), num(r, "kappa"))};
     }},
    {13, "decay mass ratio",
     [&](double& secs) {
       const Run r = run("canonical-maps");
       secs = r.seconds;
       Verdict v;
       v.require(num(r, "decay_mass_ratio_example") == 1.1, "m0 = 1, v/c = 0.1");
       v.require(flag(r, "decay_mass_ratio_exact"), "fuzzed equality");
       return std::pair{v, fmt("m(1, 0.1c) = %.15g", num(r, "decay_mass_ratio_example"))};
     }},
  };

  int failed = 0;
  for (auto& c : criteria) {
    double secs = 0.0;
    Verdict v;
    std::string summary;
    try {
      std::tie(v, summary) = c.check(secs);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = e.what();
    }
    failed += v.pass ? 0 : 1;
    std::printf("[%s] %2d %-44s %s (%.2fs)%s%s\n", v.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), summary.c_str(),
                secs, v.pass ? "" : "  failed: ", v.detail.c_str());
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
