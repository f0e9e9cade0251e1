#ifndef HEISYM_SCENARIOS_HPP
#define HEISYM_SCENARIOS_HPP

#include "heisym/report.hpp"
#include "heisym/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace heisym {

struct ScenarioContext {
  std::uint64_t seed = kDefaultSeed;
};

/// A named verification scenario. claim states the mathematical fact the
/// scenario checks; run produces a deterministic report for a given seed.
struct Scenario {
  std::string name;
  std::string description;
  std::string claim;
  Report (*run)(const ScenarioContext&);
};

const std::vector<Scenario>& scenario_registry();
const Scenario* find_scenario(const std::string& name);

}  // namespace heisym

#endif
