#pragma once

// Declarative scenario runner: JSON config in, metrics/manifest/CSV/SVG out.

#include <json.hpp>

#include <complex>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace galilei::scenarios {

using nlohmann::json;

/// Validation failure; `field` is the dotted path of the offending key.
class ConfigError : public std::invalid_argument
{
public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field))
  {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

struct GridConfig
{
  std::size_t n = 1024;
  double x_min = -40.0;
  double x_max = 40.0;
};

struct PacketConfig
{
  double x0 = 0.0;
  double sigma = 1.0;
  double p0 = 0.0;
};

struct PhysicsConfig
{
  double c = 1.0;
  double hbar = 1.0;
  std::vector<std::complex<double>> masses;
  std::vector<double> v{0.0, 0.0, 0.0};
  std::vector<double> a{0.0, 0.0, 0.0};
  double b = 0.0;
  double bm = 0.0;
  double g_acc = 0.0;
  PacketConfig packet;
  double harmonic_k = 0.0;
};

struct RunConfig
{
  double dt = 1e-3;
  std::size_t steps = 1000;
  std::uint64_t seed = 42;
};

struct OutputConfig
{
  std::string dir = "out";
  bool emit_svg = false;
};

struct ScenarioConfig
{
  std::string scenario;
  GridConfig grid;
  PhysicsConfig physics;
  RunConfig run;
  OutputConfig output;
  /// Effective configuration after defaults and overrides, as JSON.
  json effective;
};

struct CatalogEntry
{
  std::string name;
  std::string summary;
  /// Machine-readable anchor naming the relation the scenario checks.
  std::string anchor;
  bool wave = false;         // needs masses and a grid
  bool relativistic = false; // needs |v| < c
};

/// The eleven scenarios in a fixed order.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

/// Defaults for a scenario, already in config form.
json default_config(const std::string& scenario);

/// Sets a dotted path ("physics.c") to a value. The value is parsed as JSON
/// when possible and kept as a string otherwise.
void apply_override(json& config, const std::string& assignment);

/// Schema check of a user config plus defaults; throws ConfigError naming the
/// first offending field.
ScenarioConfig parse_config(const json& user);

struct ValidationReport
{
  bool ok = true;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
};

/// Schema and physics sanity checks (|v| < c where relativistic, distinct
/// masses, packet margin from the periodic boundary). Never throws for bad
/// input; problems end up in the report.
ValidationReport validate(const json& user);
/// Physics checks on an already parsed config. Margin problems are warnings.
ValidationReport validate_physics(const ScenarioConfig& config);

// ---------------------------------------------------------------------------
// Results

struct Metric
{
  std::string name;
  json value;
  /// {"max": x}, {"min": x, "max": y}, {"equals": x}, or null for metrics that
  /// are reported but not judged.
  json tolerance;
  bool pass = true;
};

struct ScenarioResult
{
  std::vector<Metric> metrics;
  json params = json::object();
  std::vector<std::string> warnings;

  /// Adds a judged metric: pass iff value ≤ max.
  void at_most(const std::string& name, double value, double max);
  /// pass iff lo ≤ value ≤ hi.
  void within(const std::string& name, double value, double lo, double hi);
  /// pass iff value == expected exactly.
  void equals(const std::string& name, const json& value, const json& expected);
  /// pass iff flag.
  void holds(const std::string& name, bool flag);
  /// Reported, not judged.
  void info(const std::string& name, json value);

  bool pass() const;
};

/// Where a scenario writes its files; every write is recorded.
class OutputSink
{
public:
  explicit OutputSink(std::filesystem::path dir, bool emit_svg);
  const std::filesystem::path& dir() const { return dir_; }
  bool emit_svg() const { return emit_svg_; }
  void write(const std::string& name, const std::string& contents);
  const std::vector<std::string>& files() const { return files_; }

private:
  std::filesystem::path dir_;
  bool emit_svg_;
  std::vector<std::string> files_;
};

/// Runs a scenario body. Bodies append metrics as they go so that a failure
/// part-way still leaves partial results.
void run_scenario(const ScenarioConfig& config, ScenarioResult& result, OutputSink& sink);

struct RunOutcome
{
  int exit_code = 0; // 0 pass, 1 metric or runtime failure
  json metrics;      // contents of metrics.json
  json manifest;     // contents of manifest.json
};

inline constexpr const char* kPrngName = "std::mt19937_64";

/// Executes the scenario, writes metrics.json, manifest.json and the
/// scenario's CSV/SVG files into config.output.dir.
RunOutcome run(const ScenarioConfig& config);

/// SHA-256 of the effective config serialized compactly.
std::string config_hash(const json& effective);

std::string tool_version();

// ---------------------------------------------------------------------------
// Plot helper

struct Series
{
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Minimal SVG line chart. With log_y, non-positive values are skipped.
std::string svg_line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                           const std::vector<Series>& series, bool log_y = false);

} // namespace galilei::scenarios
