#pragma once

#include <json.hpp>

#include "smcstrict/twocell.hpp"
#include "smcstrict/verify.hpp"

namespace smc {

// Key order is fixed so the CLI output is byte-stable.
nlohmann::ordered_json to_json(const CheckReport& r);
nlohmann::ordered_json to_json(const SuiteReport& r);

}  // namespace smc
