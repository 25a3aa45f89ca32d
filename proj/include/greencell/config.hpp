#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "greencell/engine.hpp"

namespace greencell {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat `key = value` text with '#' comments. Unknown keys are rejected with
// their line number; missing keys keep the scenario defaults. Profiles can
// be given inline (24 comma-separated values) or as a CSV path.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig parse_config(const std::string& text, const std::string& source_name);

// Writes a config that loads back to an identical scenario (profiles are
// inlined, so the echo is self-contained).
void save_config(const ScenarioConfig& config, const std::string& path);
std::string config_to_string(const ScenarioConfig& config);

enum class SweepAxis { StorageCapacity, StorageFactor, LineLossPct, SolarCapacity };

std::string to_string(SweepAxis axis);

struct SweepSpec {
  SweepAxis axis = SweepAxis::StorageCapacity;
  std::vector<double> values;  // strictly increasing
};

// "STORAGE_CAPACITY=500,1000,2000" and friends (case-insensitive axis).
SweepSpec parse_sweep(const std::string& text);

// One sweep point applied to a base scenario. SOLAR_CAPACITY scales the
// storage capacity (and the spatial-diversity scale) along with the panel.
ScenarioConfig apply_sweep_value(const ScenarioConfig& base, SweepAxis axis, double value);

// A run scenario: a CoMP mode token with optional explicit sharing, e.g.
// "dps", "dps+share", "jt-share". Bare tokens inherit the config's flag.
struct ScenarioSelector {
  CompMode mode = CompMode::NonComp;
  bool override_sharing = false;
  bool sharing = false;

  std::string label(const ScenarioConfig& base) const;
  ScenarioConfig apply(const ScenarioConfig& base) const;
};

ScenarioSelector parse_scenario(const std::string& token);
std::vector<ScenarioSelector> parse_scenario_list(const std::string& csv);

}  // namespace greencell
