#pragma once

// JSON form of group elements used by scenario configs:
// {"bm": …, "b": …, "a": [ax, ay, az], "v": [vx, vy, vz]}.
// "bm" is omitted for plain Galilei elements and optional on input.

#include "galilei/group_kernel.hpp"

#include <json.hpp>

namespace galilei {

void to_json(nlohmann::json& j, const GalileiElement& g);
void from_json(const nlohmann::json& j, GalileiElement& g);
void to_json(nlohmann::json& j, const ExtendedGalileiElement& g);
void from_json(const nlohmann::json& j, ExtendedGalileiElement& g);

nlohmann::json vec3_to_json(const Vec3& v);
/// Accepts a number (taken as the x component) or an array of 1 to 3 numbers.
Vec3 vec3_from_json(const nlohmann::json& j);

} // namespace galilei
