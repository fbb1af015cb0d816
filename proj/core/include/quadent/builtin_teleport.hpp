#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quadent/teleport.hpp"

namespace quadent {

// Every built-in teleportation scenario, in suite order. Subclass scenarios
// carry their dressing in the id, e.g. "ghz_2q_subclass:1,3".
std::vector<TeleportScenario> builtin_teleport_scenarios();
std::vector<std::string> builtin_teleport_ids();
TeleportScenario builtin_teleport(std::string_view id);

}  // namespace quadent
