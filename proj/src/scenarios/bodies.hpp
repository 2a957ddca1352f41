#pragma once

#include "galilei/scenarios.hpp"

#include "galilei/wave/grid.hpp"
#include "galilei/wave/state.hpp"

namespace galilei::scenarios::detail {

void group_axioms(const ScenarioConfig& cfg, ScenarioResult& out, OutputSink& sink);
void lorentz_loop(const ScenarioConfig& cfg, ScenarioResult& out, OutputSink& sink);
void remnant_phase(const ScenarioConfig& cfg, ScenarioResult& out, OutputSink& sink);

void bargmann_loop(const ScenarioConfig& cfg, ScenarioResult& out, OutputSink& sink);
void boost_covariance(const ScenarioConfig& cfg, ScenarioResult& out, OutputSink& sink);
void mass_interference(const ScenarioConfig& cfg, ScenarioResult& out, OutputSink& sink);
void unstable_boost(const ScenarioConfig& cfg, ScenarioResult& out, OutputSink& sink);
void accelerated_frame(const ScenarioConfig& cfg, ScenarioResult& out, OutputSink& sink);
void kg_vs_schrodinger(const ScenarioConfig& cfg, ScenarioResult& out, OutputSink& sink);
void sch5_residual(const ScenarioConfig& cfg, ScenarioResult& out, OutputSink& sink);

void canonical_maps(const ScenarioConfig& cfg, ScenarioResult& out, OutputSink& sink);

// Shared helpers
Grid1D make_grid(const ScenarioConfig& cfg);
/// Same Gaussian packet in every configured mass channel.
SuperposedState packet_state(const ScenarioConfig& cfg, double t = 0.0);
json complex_json(std::complex<double> z);
std::string csv_columns(const std::vector<std::string>& header, const std::vector<std::vector<double>>& columns);

} // namespace galilei::scenarios::detail
