// galilei-lab: run, list and validate scenarios.

#include "galilei/mechanics.hpp"
#include "galilei/scenarios.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <thread>

namespace sc = galilei::scenarios;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

json read_json(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw sc::ConfigError(path, "cannot open config file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw sc::ConfigError(path, std::string("invalid JSON: ") + e.what());
  }
}

void print_summary(const std::string& path, const std::string& dir, const sc::RunOutcome& r)
{
  std::cout << (r.exit_code == 0 ? "PASS " : "FAIL ") << r.metrics.value("scenario", "?") << "  (" << path << " -> "
            << dir << ")\n";
  for (const auto& [name, value] : r.metrics.at("metrics").items()) {
    const bool ok = r.metrics.at("metric_pass").at(name).get<bool>();
    if (!ok || r.metrics.at("tolerances").at(name).is_null())
      std::cout << "    " << (ok ? "  " : "x ") << name << " = " << value.dump() << '\n';
  }
  if (r.metrics.contains("error"))
    std::cout << "    error: " << r.metrics.at("error").get<std::string>() << '\n';
}

int cmd_run(const std::vector<std::string>& configs, const std::vector<std::string>& sets)
{
  std::vector<sc::ScenarioConfig> parsed;
  std::set<std::string> dirs;
  for (const auto& path : configs) {
    json user = read_json(path);
    for (const auto& s : sets)
      sc::apply_override(user, s);
    sc::ScenarioConfig cfg = sc::parse_config(user);
    const sc::ValidationReport report = sc::validate_physics(cfg);
    if (!report.ok) {
      const std::string& first = report.errors.front();
      const auto colon = first.find(": ");
      if (colon == std::string::npos)
        throw sc::ConfigError(path, first);
      throw sc::ConfigError(first.substr(0, colon), first.substr(colon + 2));
    }
    for (const auto& w : report.warnings)
      std::cerr << "warning: " << path << ": " << w << '\n';
    const std::string dir = std::filesystem::weakly_canonical(cfg.output.dir).string();
    if (!dirs.insert(dir).second)
      throw sc::ConfigError("output.dir", "'" + cfg.output.dir + "' is used by more than one config");
    parsed.push_back(std::move(cfg));
  }

  // One worker per scenario; each writes only to its own directory.
  std::vector<sc::RunOutcome> outcomes(parsed.size());
  std::vector<std::thread> workers;
  for (std::size_t i = 0; i < parsed.size(); ++i)
    workers.emplace_back([&, i] { outcomes[i] = sc::run(parsed[i]); });
  for (auto& w : workers)
    w.join();

  int code = 0;
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    print_summary(configs[i], parsed[i].output.dir, outcomes[i]);
    if (outcomes[i].exit_code != 0)
      code = kExitFail;
  }
  return code;
}

int cmd_validate(const std::string& path)
{
  const sc::ValidationReport r = sc::validate(read_json(path));
  for (const auto& e : r.errors)
    std::cout << "error: " << e << '\n';
  for (const auto& w : r.warnings)
    std::cout << "warning: " << w << '\n';
  std::cout << (r.ok ? "valid" : "invalid") << '\n';
  return r.ok ? 0 : kExitConfig;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Scenario runner for the extended Galilei group toolkit"};
  app.set_version_flag("--version", sc::tool_version());
  app.require_subcommand(1);

  std::vector<std::string> configs, sets;
  auto* run = app.add_subcommand("run", "Run one or more scenario configs");
  run->add_option("--config", configs, "Scenario config (JSON); repeat to run a batch concurrently")->required();
  run->add_option("--set", sets, "Override a field, e.g. physics.c=40");

  auto* list = app.add_subcommand("list", "List scenarios");

  std::string vconfig;
  auto* validate = app.add_subcommand("validate", "Check a config without running it");
  validate->add_option("--config", vconfig, "Scenario config (JSON)")->required();

  double table_c = 1.0;
  auto* table = app.add_subcommand("metric-table", "Print the five-dimensional metric tables as JSON");
  table->add_option("--c", table_c, "Speed of light")->check(CLI::PositiveNumber);
  table->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run)
      return cmd_run(configs, sets);
    if (*list) {
      for (const auto& e : sc::catalog())
        std::cout << e.name << "  [" << e.anchor << "]  " << e.summary << '\n';
      return 0;
    }
    if (*validate)
      return cmd_validate(vconfig);
    if (*table) {
      std::cout << galilei::metric5_table(table_c).dump(2) << '\n';
      return 0;
    }
  } catch (const sc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return 0;
}
