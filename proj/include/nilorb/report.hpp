#pragma once

#include <json.hpp>

#include "nilorb/verify.hpp"

namespace nilorb {

/// {"check", "params": {"max_n", "a_offset"}, "instances", "failures",
///  "witnesses": [{"input": {...}}], "elapsed_ms"}
nlohmann::ordered_json to_json(const CheckReport& report, bool include_elapsed = true);

}  // namespace nilorb
