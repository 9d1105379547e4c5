#pragma once

#include <string>

#include "json.hpp"
#include "semistrong/reduction.hpp"
#include "semistrong/tree_dp.hpp"

namespace semistrong::cli {

using nlohmann::ordered_json;

/// FNV-1a 64-bit digest as 16 hex digits.
std::string digest(const std::string& bytes);

ordered_json to_json(const Quadruple& x);
ordered_json to_json(const ReductionMap& map);
ordered_json to_json(const Gadget& gadget);
ordered_json to_json(const LemmaReport& report);

}  // namespace semistrong::cli
