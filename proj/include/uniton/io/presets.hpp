#pragma once

#include <string>
#include <vector>

#include "uniton/io/scenario.hpp"

namespace uniton {

/// Frozen example scenarios, in a fixed order.
std::vector<std::string> preset_names();

/// Throws BadArguments for an unknown name.
Scenario preset(const std::string& name);

/// Presets that are not deliberate violators.
bool preset_is_valid_example(const std::string& name);

}  // namespace uniton
