#include "bodies.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace galilei::scenarios {

// ---------------------------------------------------------------------------
// ScenarioResult

void ScenarioResult::at_most(const std::string& name, double value, double max)
{
  metrics.push_back({name, value, {{"max", max}}, std::isfinite(value) && value <= max});
}

void ScenarioResult::within(const std::string& name, double value, double lo, double hi)
{
  metrics.push_back({name, value, {{"min", lo}, {"max", hi}}, std::isfinite(value) && value >= lo && value <= hi});
}

void ScenarioResult::equals(const std::string& name, const json& value, const json& expected)
{
  metrics.push_back({name, value, {{"equals", expected}}, value == expected});
}

void ScenarioResult::holds(const std::string& name, bool flag)
{
  metrics.push_back({name, flag, {{"equals", true}}, flag});
}

void ScenarioResult::info(const std::string& name, json value) { metrics.push_back({name, std::move(value), nullptr, true}); }

bool ScenarioResult::pass() const
{
  for (const auto& m : metrics)
    if (!m.pass)
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// OutputSink

OutputSink::OutputSink(std::filesystem::path dir, bool emit_svg) : dir_(std::move(dir)), emit_svg_(emit_svg)
{
  std::filesystem::create_directories(dir_);
}

void OutputSink::write(const std::string& name, const std::string& contents)
{
  std::ofstream out(dir_ / name, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + (dir_ / name).string());
  out << contents;
  if (!out)
    throw std::runtime_error("write failed for " + (dir_ / name).string());
  files_.push_back(name);
}

// ---------------------------------------------------------------------------

void run_scenario(const ScenarioConfig& cfg, ScenarioResult& result, OutputSink& sink)
{
  using Body = void (*)(const ScenarioConfig&, ScenarioResult&, OutputSink&);
  static const std::map<std::string, Body> bodies = {
    {"group-axioms", detail::group_axioms},
    {"bargmann-loop", detail::bargmann_loop},
    {"boost-covariance", detail::boost_covariance},
    {"mass-interference", detail::mass_interference},
    {"unstable-boost", detail::unstable_boost},
    {"accelerated-frame", detail::accelerated_frame},
    {"kg-vs-schrodinger", detail::kg_vs_schrodinger},
    {"remnant-phase", detail::remnant_phase},
    {"lorentz-loop", detail::lorentz_loop},
    {"canonical-maps", detail::canonical_maps},
    {"sch5-residual", detail::sch5_residual},
  };
  bodies.at(cfg.scenario)(cfg, result, sink);
}

std::string config_hash(const json& effective)
{
  const std::string text = effective.dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < length; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

std::string tool_version() { return GALILEI_VERSION; }

namespace {

std::string utc_now()
{
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json metrics_document(const ScenarioConfig& cfg, const ScenarioResult& result, const std::string& error)
{
  json metrics = json::object();
  json tolerances = json::object();
  json verdicts = json::object();
  for (const auto& m : result.metrics) {
    metrics[m.name] = m.value;
    tolerances[m.name] = m.tolerance;
    verdicts[m.name] = m.pass;
  }
  json doc = {{"scenario", cfg.scenario},
              {"paper_anchor", catalog_entry(cfg.scenario).anchor},
              {"params", result.params},
              {"metrics", metrics},
              {"tolerances", tolerances},
              {"metric_pass", verdicts},
              {"pass", error.empty() && result.pass()}};
  if (!error.empty())
    doc["error"] = error;
  return doc;
}

} // namespace

RunOutcome run(const ScenarioConfig& cfg)
{
  RunOutcome outcome;
  const std::string started = utc_now();
  const auto t0 = std::chrono::steady_clock::now();

  OutputSink sink(cfg.output.dir, cfg.output.emit_svg);
  ScenarioResult result;
  const ValidationReport physics = validate_physics(cfg);
  result.warnings = physics.warnings;

  std::string error;
  try {
    run_scenario(cfg, result, sink);
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  outcome.metrics = metrics_document(cfg, result, error);
  sink.write("metrics.json", outcome.metrics.dump(2) + "\n");

  json per_metric = json::object();
  for (const auto& m : result.metrics)
    per_metric[m.name] = m.pass;
  json files = sink.files();
  files.push_back("manifest.json");
  outcome.manifest = {{"scenario", cfg.scenario},
                      {"config_hash", config_hash(cfg.effective)},
                      {"config", cfg.effective},
                      {"tool_version", tool_version()},
                      {"prng", {{"name", kPrngName}, {"seed", cfg.run.seed}}},
                      {"started", started},
                      {"finished", utc_now()},
                      {"wall_seconds", seconds},
                      {"status", error.empty() ? "completed" : "error"},
                      {"metric_pass", per_metric},
                      {"pass", outcome.metrics.at("pass")},
                      {"warnings", result.warnings},
                      {"files", files}};
  if (!error.empty())
    outcome.manifest["error"] = error;
  sink.write("manifest.json", outcome.manifest.dump(2) + "\n");

  outcome.exit_code = outcome.metrics.at("pass").get<bool>() ? 0 : 1;
  return outcome;
}

} // namespace galilei::scenarios
