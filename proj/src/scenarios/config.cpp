#include "galilei/scenarios.hpp"

#include "galilei/wave/grid.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace galilei::scenarios {

namespace {

// Allowed keys; a nested map marks an object.
struct Schema
{
  std::map<std::string, Schema> children;
  bool leaf = true;
};

Schema object(std::initializer_list<std::pair<const std::string, Schema>> items)
{
  Schema s;
  s.leaf = false;
  s.children = items;
  return s;
}

const Schema& schema()
{
  static const Schema s = object({
    {"scenario", {}},
    {"grid", object({{"n", {}}, {"x_min", {}}, {"x_max", {}}})},
    {"physics", object({{"c", {}},
                        {"hbar", {}},
                        {"masses", {}},
                        {"v", {}},
                        {"a", {}},
                        {"b", {}},
                        {"bm", {}},
                        {"g_acc", {}},
                        {"packet", object({{"x0", {}}, {"sigma", {}}, {"p0", {}}})},
                        {"harmonic_k", {}}})},
    {"run", object({{"dt", {}}, {"steps", {}}, {"seed", {}}})},
    {"output", object({{"dir", {}}, {"emit_svg", {}}})},
  });
  return s;
}

std::string join(const std::string& prefix, const std::string& key) { return prefix.empty() ? key : prefix + "." + key; }

void check_keys(const json& j, const Schema& s, const std::string& path)
{
  if (!j.is_object())
    throw ConfigError(path.empty() ? "config" : path, "expected a JSON object");
  for (const auto& item : j.items()) {
    const std::string where = join(path, item.key());
    const auto it = s.children.find(item.key());
    if (it == s.children.end())
      throw ConfigError(where, "unknown key");
    if (item.value().is_null())
      throw ConfigError(where, "null is not allowed");
    if (!it->second.leaf)
      check_keys(item.value(), it->second, where);
  }
}

double number(const json& j, const std::string& path)
{
  if (!j.is_number())
    throw ConfigError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v))
    throw ConfigError(path, "must be finite");
  return v;
}

std::uint64_t unsigned_integer(const json& j, const std::string& path)
{
  if (j.is_number_unsigned())
    return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (std::isfinite(v) && v >= 0.0 && v == std::floor(v) && v < 1.8e19)
      return static_cast<std::uint64_t>(v);
  }
  throw ConfigError(path, "expected a non-negative integer");
}

std::vector<double> vector3(const json& j, const std::string& path)
{
  if (j.is_number())
    return {number(j, path), 0.0, 0.0};
  if (!j.is_array() || j.empty() || j.size() > 3)
    throw ConfigError(path, "expected a number or an array of 1 to 3 numbers");
  std::vector<double> out(3, 0.0);
  for (std::size_t i = 0; i < j.size(); ++i)
    out[i] = number(j[i], path + "[" + std::to_string(i) + "]");
  return out;
}

std::complex<double> mass(const json& j, const std::string& path)
{
  if (j.is_number())
    return {number(j, path), 0.0};
  if (!j.is_object())
    throw ConfigError(path, "expected a number or {\"re\": …, \"im\": …}");
  double re = 0.0, im = 0.0;
  bool has_re = false;
  for (const auto& item : j.items()) {
    if (item.key() == "re") {
      re = number(item.value(), path + ".re");
      has_re = true;
    } else if (item.key() == "im") {
      im = number(item.value(), path + ".im");
    } else {
      throw ConfigError(path + "." + item.key(), "unknown key");
    }
  }
  if (!has_re)
    throw ConfigError(path + ".re", "missing");
  return {re, im};
}

json base_defaults(const std::string& name)
{
  return {
    {"scenario", name},
    {"grid", {{"n", 1024}, {"x_min", -40.0}, {"x_max", 40.0}}},
    {"physics",
     {{"c", 1.0},
      {"hbar", 1.0},
      {"masses", json::array({{{"re", 1.0}, {"im", 0.0}}})},
      {"v", 0.0},
      {"a", 0.0},
      {"b", 0.0},
      {"bm", 0.0},
      {"g_acc", 0.0},
      {"packet", {{"x0", 0.0}, {"sigma", 1.0}, {"p0", 0.0}}},
      {"harmonic_k", 0.0}}},
    {"run", {{"dt", 1e-3}, {"steps", 1000}, {"seed", 42}}},
    {"output", {{"dir", "out/" + name}, {"emit_svg", false}}},
  };
}

json masses_json(std::initializer_list<std::pair<double, double>> ms)
{
  json arr = json::array();
  for (const auto& [re, im] : ms)
    arr.push_back({{"re", re}, {"im", im}});
  return arr;
}

} // namespace

json default_config(const std::string& scenario)
{
  catalog_entry(scenario); // throws for unknown names
  json d = base_defaults(scenario);
  json& p = d["physics"];
  json& r = d["run"];
  if (scenario == "group-axioms") {
    r["steps"] = 10000;
  } else if (scenario == "bargmann-loop") {
    p["masses"] = masses_json({{1.0, 0.0}, {2.0, 0.0}});
    p["a"] = std::numbers::pi;
    p["v"] = 1.0;
  } else if (scenario == "boost-covariance") {
    p["a"] = 0.7;
    p["v"] = 0.4;
    p["harmonic_k"] = 1.0;
    p["packet"] = {{"x0", -1.0}, {"sigma", 1.0}, {"p0", 0.3}};
  } else if (scenario == "mass-interference") {
    p["masses"] = masses_json({{1.0, 0.0}, {2.0, 0.0}});
    p["a"] = 0.9;
    p["v"] = 1.3;
    p["packet"] = {{"x0", -2.0}, {"sigma", 1.0}, {"p0", 0.5}};
    r["steps"] = 20;
  } else if (scenario == "unstable-boost") {
    p["masses"] = masses_json({{1.0, -0.05}});
    p["v"] = 1.0;
    p["packet"] = {{"x0", 0.0}, {"sigma", 2.0}, {"p0", 0.0}};
    r["dt"] = 0.01;
    r["steps"] = 10;
  } else if (scenario == "accelerated-frame") {
    d["grid"]["n"] = 2048;
    p["g_acc"] = 0.5;
  } else if (scenario == "kg-vs-schrodinger") {
    p["c"] = 20.0;
    p["packet"] = {{"x0", 0.0}, {"sigma", 0.5}, {"p0", 0.0}};
    r["dt"] = 0.01;
    r["steps"] = 100;
  } else if (scenario == "remnant-phase") {
    p["v"] = 0.01;
  } else if (scenario == "lorentz-loop") {
    p["v"] = 0.1;
    p["a"] = 1.0;
  } else if (scenario == "canonical-maps") {
    p["c"] = 10.0;
    p["v"] = 0.1;
    r["steps"] = 10000;
  } else if (scenario == "sch5-residual") {
    p["masses"] = masses_json({{1.0, 0.0}, {2.0, 0.0}});
    p["harmonic_k"] = 0.5;
    p["packet"] = {{"x0", -2.0}, {"sigma", 1.0}, {"p0", 0.5}};
    r["dt"] = 4e-3;
    r["steps"] = 10000;
  }
  return d;
}

void apply_override(json& config, const std::string& assignment)
{
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError(assignment, "override must look like key.path=value");
  const std::string path = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);

  json value;
  try {
    value = json::parse(text);
  } catch (const json::parse_error&) {
    value = text;
  }

  json* node = &config;
  std::stringstream ss(path);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(ss, part, '.')) {
    if (part.empty())
      throw ConfigError(path, "empty path component");
    parts.push_back(part);
  }
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    json& next = (*node)[parts[i]];
    if (next.is_null())
      next = json::object();
    if (!next.is_object())
      throw ConfigError(path, "'" + parts[i] + "' is not an object");
    node = &next;
  }
  (*node)[parts.back()] = value;
}

ScenarioConfig parse_config(const json& user)
{
  check_keys(user, schema(), "");
  if (!user.contains("scenario") || !user.at("scenario").is_string())
    throw ConfigError("scenario", "required string");
  const std::string name = user.at("scenario").get<std::string>();
  catalog_entry(name);

  json merged = default_config(name);
  merged.merge_patch(user);

  ScenarioConfig cfg;
  cfg.scenario = name;

  const json& g = merged.at("grid");
  cfg.grid.n = static_cast<std::size_t>(unsigned_integer(g.at("n"), "grid.n"));
  cfg.grid.x_min = number(g.at("x_min"), "grid.x_min");
  cfg.grid.x_max = number(g.at("x_max"), "grid.x_max");
  try {
    Grid1D probe(cfg.grid.n, cfg.grid.x_min, cfg.grid.x_max);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("grid", e.what());
  }

  const json& p = merged.at("physics");
  cfg.physics.c = number(p.at("c"), "physics.c");
  if (!(cfg.physics.c > 0.0))
    throw ConfigError("physics.c", "must be positive");
  cfg.physics.hbar = number(p.at("hbar"), "physics.hbar");
  if (cfg.physics.hbar != 1.0)
    throw ConfigError("physics.hbar", "is fixed to 1 (natural units)");
  if (!p.at("masses").is_array())
    throw ConfigError("physics.masses", "expected an array");
  for (std::size_t i = 0; i < p.at("masses").size(); ++i)
    cfg.physics.masses.push_back(mass(p.at("masses")[i], "physics.masses[" + std::to_string(i) + "]"));
  cfg.physics.v = vector3(p.at("v"), "physics.v");
  cfg.physics.a = vector3(p.at("a"), "physics.a");
  cfg.physics.b = number(p.at("b"), "physics.b");
  cfg.physics.bm = number(p.at("bm"), "physics.bm");
  cfg.physics.g_acc = number(p.at("g_acc"), "physics.g_acc");
  const json& pk = p.at("packet");
  cfg.physics.packet.x0 = number(pk.at("x0"), "physics.packet.x0");
  cfg.physics.packet.sigma = number(pk.at("sigma"), "physics.packet.sigma");
  cfg.physics.packet.p0 = number(pk.at("p0"), "physics.packet.p0");
  if (!(cfg.physics.packet.sigma > 0.0))
    throw ConfigError("physics.packet.sigma", "must be positive");
  cfg.physics.harmonic_k = number(p.at("harmonic_k"), "physics.harmonic_k");

  const json& r = merged.at("run");
  cfg.run.dt = number(r.at("dt"), "run.dt");
  if (!(cfg.run.dt > 0.0))
    throw ConfigError("run.dt", "must be positive");
  cfg.run.steps = static_cast<std::size_t>(unsigned_integer(r.at("steps"), "run.steps"));
  if (cfg.run.steps == 0)
    throw ConfigError("run.steps", "must be at least 1");
  cfg.run.seed = unsigned_integer(r.at("seed"), "run.seed");

  const json& o = merged.at("output");
  if (!o.at("dir").is_string() || o.at("dir").get<std::string>().empty())
    throw ConfigError("output.dir", "expected a non-empty string");
  cfg.output.dir = o.at("dir").get<std::string>();
  if (!o.at("emit_svg").is_boolean())
    throw ConfigError("output.emit_svg", "expected true or false");
  cfg.output.emit_svg = o.at("emit_svg").get<bool>();

  cfg.effective = merged;
  return cfg;
}

ValidationReport validate_physics(const ScenarioConfig& cfg)
{
  ValidationReport report;
  const CatalogEntry& entry = catalog_entry(cfg.scenario);
  const auto& ph = cfg.physics;
  auto error = [&](const std::string& field, const std::string& msg) {
    report.ok = false;
    report.errors.push_back(field + ": " + msg);
  };

  const double speed = std::sqrt(ph.v[0] * ph.v[0] + ph.v[1] * ph.v[1] + ph.v[2] * ph.v[2]);
  if (entry.relativistic && !(speed < ph.c))
    error("physics.v", "|v| must be below physics.c for a relativistic scenario");
  if (entry.relativistic && speed == 0.0)
    error("physics.v", "scaling study needs a nonzero velocity");

  if (entry.wave) {
    if (ph.masses.empty())
      error("physics.masses", "wave scenarios need at least one mass channel");
    for (std::size_t i = 0; i < ph.masses.size(); ++i) {
      if (ph.masses[i] == 0.0)
        error("physics.masses[" + std::to_string(i) + "]", "mass must be nonzero");
      for (std::size_t j = 0; j < i; ++j)
        if (ph.masses[i] == ph.masses[j])
          error("physics.masses[" + std::to_string(i) + "]", "masses must be distinct");
    }
    if (ph.v[1] != 0.0 || ph.v[2] != 0.0)
      error("physics.v", "wave scenarios act along x; transverse components must be zero");
    if (ph.a[1] != 0.0 || ph.a[2] != 0.0)
      error("physics.a", "wave scenarios act along x; transverse components must be zero");
  }

  const bool needs_real = cfg.scenario == "accelerated-frame" || cfg.scenario == "kg-vs-schrodinger" ||
                          cfg.scenario == "bargmann-loop" || cfg.scenario == "mass-interference" ||
                          cfg.scenario == "boost-covariance";
  if (needs_real)
    for (std::size_t i = 0; i < ph.masses.size(); ++i)
      if (ph.masses[i].imag() != 0.0 || ph.masses[i].real() <= 0.0)
        error("physics.masses[" + std::to_string(i) + "]", "this scenario needs positive real masses");
  if (cfg.scenario == "unstable-boost" && !ph.masses.empty() && ph.masses[0].imag() > 0.0)
    error("physics.masses[0].im", "an unstable particle has Im m <= 0");
  if (cfg.scenario == "kg-vs-schrodinger" && ph.masses.size() != 1)
    error("physics.masses", "the Klein-Gordon comparison uses exactly one mass");
  if (cfg.scenario == "accelerated-frame" && ph.masses.size() != 1)
    error("physics.masses", "the accelerated frame map uses a single channel");
  if (cfg.scenario == "accelerated-frame" && ph.g_acc == 0.0)
    error("physics.g_acc", "the cubic coefficient is undetermined for zero acceleration");
  if (cfg.scenario == "boost-covariance" && ph.b != 0.0)
    error("physics.b", "time translation is not a symmetry in the harmonic potential");
  if (cfg.scenario == "canonical-maps" && !(speed < ph.c))
    error("physics.v", "photon recoil speed must be below physics.c");

  // Packet margin: at least 5σ(t) from either end over the horizon.
  if (entry.wave && report.ok) {
    const double lo = cfg.grid.x_min, hi = cfg.grid.x_max;
    const auto& pk = ph.packet;
    double m_min = 1e300;
    for (const auto& m : ph.masses)
      m_min = std::min(m_min, std::abs(m));
    const double horizon = cfg.run.dt * static_cast<double>(cfg.scenario == "group-axioms" ? 0 : cfg.run.steps);
    const double t = (cfg.scenario == "mass-interference" || cfg.scenario == "sch5-residual") ? 0.0 : horizon;
    const double spread = pk.sigma * std::sqrt(1.0 + std::pow(t / (2.0 * m_min * pk.sigma * pk.sigma), 2));
    const double drift = std::abs(pk.p0 / m_min) * t + std::abs(ph.v[0]) * t + std::abs(ph.a[0]) +
                         0.5 * std::abs(ph.g_acc) * t * t;
    const double reach = 5.0 * spread + drift;
    if (pk.x0 - reach < lo || pk.x0 + reach > hi) {
      std::ostringstream os;
      os << "physics.packet: packet may come within 5 sigma of the periodic boundary (reach " << reach
         << " around x0 = " << pk.x0 << ")";
      report.warnings.push_back(os.str());
    }
  }
  return report;
}

ValidationReport validate(const json& user)
{
  ValidationReport report;
  try {
    const ScenarioConfig cfg = parse_config(user);
    report = validate_physics(cfg);
  } catch (const ConfigError& e) {
    report.ok = false;
    report.errors.push_back(e.what());
  }
  return report;
}

} // namespace galilei::scenarios
