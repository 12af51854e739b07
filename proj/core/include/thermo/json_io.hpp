#pragma once

#include <string>

#include "thermo/circle_map.hpp"
#include "thermo/potential.hpp"

namespace thermo {

// Map spec: {"type":"linear_full_branch","slopes":[...]}
//         | {"type":"manneville_pomeau","alpha":...}
//         | {"type":"piecewise_poly","branches":[{"domain":[a,b],"coeffs":[c0,...]},...]}
CircleMap map_from_json_text(const std::string& text);
CircleMap map_from_file(const std::string& path);

// Potential spec: {"type":"geometric"} | {"type":"constant","value":...}
//               | {"type":"trig_series","cos":[...],"sin":[...]}
//               | {"type":"indicator","interval":[a,b]}
//               | {"type":"combo","terms":[{"weight":...,"potential":...},...]}
Potential potential_from_json_text(const std::string& text, const CircleMap& map);
Potential potential_from_file(const std::string& path, const CircleMap& map);

} // namespace thermo
