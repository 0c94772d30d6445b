#pragma once

#include <string>
#include <vector>

#include "wqd/scenario.hpp"

namespace wqd {

// Canned scenarios reproducing the published decoherence/transition figures
// at desk scale; one per figure panel, parameters from the captions.
struct Preset {
  std::string name;
  std::string description;
  Scenario scenario;
};

const std::vector<Preset>& preset_catalog();
const Preset* find_preset(const std::string& name);

}  // namespace wqd
