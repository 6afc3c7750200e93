#pragma once

#include <string>

#include "klr/root_data.hpp"

namespace klr {

// {"vertices": ["1","2"], "edges": [["1","2"]], "weights": {"L1": {"1": 1}}}
Quiver parse_quiver_json(const std::string& text);
Quiver load_quiver(const std::string& path);
std::string quiver_to_json(const Quiver& q);

// accepts a CSV of integers or the name of a weight declared in the file
Weight resolve_weight(const Quiver& q, const std::string& spec);

}  // namespace klr
