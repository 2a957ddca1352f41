#include "bodies.hpp"

#include "galilei/group_kernel.hpp"
#include "galilei/wave/wave_engine.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace galilei::scenarios::detail {

namespace {

Vec3 to_vec3(const std::vector<double>& v) { return {v.at(0), v.at(1), v.at(2)}; }

// Two halvings of v must each shrink an O(v⁴) residual by 16, ±20%.
constexpr double kQuarticRatioLo = 16.0 * 0.8;
constexpr double kQuarticRatioHi = 16.0 * 1.2;

} // namespace

void group_axioms(const ScenarioConfig& cfg, ScenarioResult& out, OutputSink& sink)
{
  std::mt19937_64 rng(cfg.run.seed);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  auto vec = [&] { return Vec3(u(rng), u(rng), u(rng)); };

  const std::size_t samples = cfg.run.steps;
  std::vector<double> idx, plain_worst, ext_worst;
  double assoc = 0.0, ident = 0.0, inv = 0.0, action = 0.0;
  double ext_assoc = 0.0, ext_ident = 0.0, ext_inv = 0.0, action5 = 0.0, erase_hom = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const GalileiElement g{u(rng), vec(), vec()}, h{u(rng), vec(), vec()}, k{u(rng), vec(), vec()};
    const Event e{vec(), u(rng)};
    const double r_assoc = max_abs_diff(compose(compose(g, h), k), compose(g, compose(h, k)));
    const double r_ident =
      std::max(max_abs_diff(compose(g, GalileiElement::identity()), g), max_abs_diff(compose(GalileiElement::identity(), g), g));
    const double r_inv = std::max(max_abs_diff(compose(g, inverse(g)), GalileiElement::identity()),
                                  max_abs_diff(compose(inverse(g), g), GalileiElement::identity()));
    const double r_act = max_abs_diff(act(compose(g, h), e), act(g, act(h, e)));
    assoc = std::max(assoc, r_assoc);
    ident = std::max(ident, r_ident);
    inv = std::max(inv, r_inv);
    action = std::max(action, r_act);

    const ExtendedGalileiElement eg{u(rng), u(rng), vec(), vec()}, eh{u(rng), u(rng), vec(), vec()},
      ek{u(rng), u(rng), vec(), vec()};
    const Event5 e5{vec(), u(rng), u(rng)};
    const double x_assoc = max_abs_diff(compose(compose(eg, eh), ek), compose(eg, compose(eh, ek)));
    const double x_ident = std::max(max_abs_diff(compose(eg, ExtendedGalileiElement::identity()), eg),
                                    max_abs_diff(compose(ExtendedGalileiElement::identity(), eg), eg));
    const double x_inv = std::max(max_abs_diff(compose(eg, inverse(eg)), ExtendedGalileiElement::identity()),
                                  max_abs_diff(compose(inverse(eg), eg), ExtendedGalileiElement::identity()));
    const double x_act = max_abs_diff(act(compose(eg, eh), e5), act(eg, act(eh, e5)));
    const double x_erase = max_abs_diff(erase(compose(eg, eh)), compose(erase(eg), erase(eh)));
    ext_assoc = std::max(ext_assoc, x_assoc);
    ext_ident = std::max(ext_ident, x_ident);
    ext_inv = std::max(ext_inv, x_inv);
    action5 = std::max(action5, x_act);
    erase_hom = std::max(erase_hom, x_erase);

    idx.push_back(static_cast<double>(i));
    plain_worst.push_back(std::max({r_assoc, r_ident, r_inv, r_act}));
    ext_worst.push_back(std::max({x_assoc, x_ident, x_inv, x_act, x_erase}));
  }

  out.params["samples"] = samples;
  out.params["range"] = 10.0;
  out.at_most("plain.associativity", assoc, 1e-12);
  out.at_most("plain.identity", ident, 1e-12);
  out.at_most("plain.inverse", inv, 1e-12);
  out.at_most("plain.action", action, 1e-12);
  out.at_most("extended.associativity", ext_assoc, 1e-12);
  out.at_most("extended.identity", ext_ident, 1e-12);
  out.at_most("extended.inverse", ext_inv, 1e-12);
  out.at_most("extended.action5", action5, 1e-12);
  out.at_most("extended.erase_homomorphism", erase_hom, 1e-12);

  const AlgebraCheck ext = verify_algebra(GroupKind::Extended);
  const AlgebraCheck plain = verify_algebra(GroupKind::Galilei);
  out.at_most("algebra.extended.bracket_error", ext.max_error, 1e-6);
  out.at_most("algebra.galilei.bracket_error", plain.max_error, 1e-6);
  out.at_most("algebra.extended.jacobi", AlgebraTable::extended().max_jacobi_violation(), 1e-12);

  sink.write("residuals.csv", csv_columns({"sample", "plain_max_residual", "extended_max_residual"},
                                          {idx, plain_worst, ext_worst}));
}

void lorentz_loop(const ScenarioConfig& cfg, ScenarioResult& out, OutputSink& sink)
{
  const double c = cfg.physics.c;
  const Vec3 v = to_vec3(cfg.physics.v);
  const Vec3 a = to_vec3(cfg.physics.a);
  const double scale = std::max(a.norm(), 1e-300);
  auto relative = [&](const Vec3& vel) { return galilei::lorentz_loop(a, vel, c).residual(c) / scale; };

  const LorentzLoopResult at_v = galilei::lorentz_loop(a, v, c);
  out.params["beta"] = v.norm() / c;
  out.params["a_norm"] = a.norm();
  out.info("predicted_dt", at_v.predicted_dt);
  out.info("exact_dt", at_v.exact_dt);
  out.info("residual_x", at_v.residual_x);
  out.info("residual_t", at_v.residual_t);
  out.at_most("linear_part_deviation", at_v.linear_deviation, 1e-12);

  // Thresholds pinned at the configured v/c and one tenth of it.
  out.at_most("relative_residual_at_beta", relative(v), 1e-2);
  out.at_most("relative_residual_at_beta_over_10", relative(v / 10.0), 1e-6);

  const double r0 = relative(v), r1 = relative(v / 2.0), r2 = relative(v / 4.0);
  out.within("halving_ratio_1", r0 / r1, kQuarticRatioLo, kQuarticRatioHi);
  out.within("halving_ratio_2", r1 / r2, kQuarticRatioLo, kQuarticRatioHi);
  out.info("halving_ratio_residual_x",
           at_v.residual_x / galilei::lorentz_loop(a, v / 2.0, c).residual_x);
  out.info("halving_ratio_residual_t",
           at_v.residual_t / galilei::lorentz_loop(a, v / 2.0, c).residual_t);

  std::vector<double> beta, res, rx, rt;
  for (int i = 0; i <= 24; ++i) {
    const double f = std::pow(2.0, -0.25 * i);
    const LorentzLoopResult r = galilei::lorentz_loop(a, v * f, c);
    beta.push_back(v.norm() * f / c);
    res.push_back(r.residual(c) / scale);
    rx.push_back(r.residual_x / scale);
    rt.push_back(c * r.residual_t / scale);
  }
  sink.write("residual_vs_beta.csv",
             csv_columns({"beta", "relative_residual", "residual_x", "c_residual_t"}, {beta, res, rx, rt}));
  if (sink.emit_svg())
    sink.write("residual_vs_beta.svg",
               svg_line_chart("Lorentz loop residual", "v/c", "residual / |a|",
                              {{"total", beta, res}, {"x part", beta, rx}, {"c t part", beta, rt}}, true));
}

void remnant_phase(const ScenarioConfig& cfg, ScenarioResult& out, OutputSink& sink)
{
  const double c = cfg.physics.c;
  const Vec3 v = to_vec3(cfg.physics.v);
  const double m = cfg.physics.masses.empty() ? 1.0 : cfg.physics.masses.front().real();
  const Vec3 dir = v.normalized();
  // Generic event: one unit along v at t = 1.
  const Event generic{dir, 1.0};
  const Event on_axis{Vec3::Zero(), 1.0};

  auto residual = [&](const Vec3& vel, const Event& e) { return std::abs(remnant_phase_check(vel, c, e, m).residual); };

  out.params["beta"] = v.norm() / c;
  out.params["event"] = {{"x_along_v", 1.0}, {"t", 1.0}};
  out.params["mass"] = m;

  const double r0 = residual(v, generic), r1 = residual(v / 2.0, generic), r2 = residual(v / 4.0, generic);
  out.info("residual_beta", r0);
  out.info("residual_beta_over_2", r1);
  out.info("residual_beta_over_4", r2);
  out.within("halving_ratio_1", r0 / r1, kQuarticRatioLo, kQuarticRatioHi);
  out.within("halving_ratio_2", r1 / r2, kQuarticRatioLo, kQuarticRatioHi);

  const double z0 = residual(v, on_axis), z1 = residual(v / 2.0, on_axis), z2 = residual(v / 4.0, on_axis);
  out.info("halving_ratio_1_at_x0", z0 / z1);
  out.info("halving_ratio_2_at_x0", z1 / z2);
  out.info("relative_residual", remnant_phase_check(v, c, generic, m).relative);

  std::vector<double> beta, gen, axis;
  for (int i = 0; i <= 24; ++i) {
    const Vec3 vel = v * std::pow(2.0, -0.25 * i);
    beta.push_back(vel.norm() / c);
    gen.push_back(residual(vel, generic));
    axis.push_back(residual(vel, on_axis));
  }
  sink.write("residual_vs_beta.csv", csv_columns({"beta", "residual_generic", "residual_x0"}, {beta, gen, axis}));
  if (sink.emit_svg())
    sink.write("residual_vs_beta.svg", svg_line_chart("Remnant phase residual", "v/c", "|residual|",
                                                      {{"x = 1, t = 1", beta, gen}, {"x = 0, t = 1", beta, axis}}, true));
}

} // namespace galilei::scenarios::detail
