#include "galilei/group_kernel_json.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace galilei {

namespace {

double finite_number(const nlohmann::json& j, const char* what)
{
  if (!j.is_number())
    throw std::invalid_argument(std::string(what) + ": expected a number");
  const double value = j.get<double>();
  if (!std::isfinite(value))
    throw std::invalid_argument(std::string(what) + ": value is not finite");
  return value;
}

void reject_unknown(const nlohmann::json& j, std::initializer_list<const char*> allowed)
{
  if (!j.is_object())
    throw std::invalid_argument("group element: expected a JSON object");
  for (const auto& item : j.items())
  {
    bool known = false;
    for (const char* key : allowed)
      known = known || item.key() == key;
    if (!known)
      throw std::invalid_argument("group element: unknown key '" + item.key() + "'");
  }
}

} // namespace

nlohmann::json vec3_to_json(const Vec3& v) { return nlohmann::json::array({v[0], v[1], v[2]}); }

Vec3 vec3_from_json(const nlohmann::json& j)
{
  Vec3 out = Vec3::Zero();
  if (j.is_number())
  {
    out[0] = finite_number(j, "vector");
    return out;
  }
  if (!j.is_array() || j.empty() || j.size() > 3)
    throw std::invalid_argument("vector: expected a number or an array of 1 to 3 numbers");
  for (std::size_t i = 0; i < j.size(); ++i)
    out[static_cast<int>(i)] = finite_number(j[i], "vector component");
  return out;
}

void to_json(nlohmann::json& j, const GalileiElement& g)
{
  j = nlohmann::json{{"b", g.b}, {"a", vec3_to_json(g.a)}, {"v", vec3_to_json(g.v)}};
}

void from_json(const nlohmann::json& j, GalileiElement& g)
{
  reject_unknown(j, {"b", "a", "v"});
  g = GalileiElement{};
  if (j.contains("b"))
    g.b = finite_number(j.at("b"), "b");
  if (j.contains("a"))
    g.a = vec3_from_json(j.at("a"));
  if (j.contains("v"))
    g.v = vec3_from_json(j.at("v"));
}

void to_json(nlohmann::json& j, const ExtendedGalileiElement& g)
{
  j = nlohmann::json{{"bm", g.bm}, {"b", g.b}, {"a", vec3_to_json(g.a)}, {"v", vec3_to_json(g.v)}};
}

void from_json(const nlohmann::json& j, ExtendedGalileiElement& g)
{
  reject_unknown(j, {"bm", "b", "a", "v"});
  g = ExtendedGalileiElement{};
  if (j.contains("bm"))
    g.bm = finite_number(j.at("bm"), "bm");
  if (j.contains("b"))
    g.b = finite_number(j.at("b"), "b");
  if (j.contains("a"))
    g.a = vec3_from_json(j.at("a"));
  if (j.contains("v"))
    g.v = vec3_from_json(j.at("v"));
}

} // namespace galilei
