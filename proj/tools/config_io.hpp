#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tqgate/params.hpp"

namespace tqgate::cli {

// JSON config schema: sections `emitter`, `cavity`, `detection`, `scheme`,
// plus an optional `preset` base name. Frequencies in files and --set
// overrides are plain Hz; the shipped convention table applies the 2 pi
// where the internal representation is angular. raw_angular disables all
// conversion (values are taken as stored).
//
// Unknown keys fail with the offending path named.

struct ConfigOverride {
    std::string path;
    double value = 0.0;
};

// True when the field holds an angular rate internally (2 pi x Hz).
bool is_angular(const std::string& path);

// Multiplier applied to a config/CLI value for the given path (2 pi or 1).
double input_scale(const std::string& path, bool raw_angular);

ScenarioPreset load_preset(const std::string& name);

// Parses the JSON text. `base` applies when the file has no `preset` key.
ScenarioPreset parse_config(const std::string& json_text,
                            const std::string& base = "scenario1",
                            bool raw_angular = false);

ScenarioPreset load_config_file(const std::string& path, bool raw_angular = false);

// Applies one override (quoted cavity fields or any sweep parameter path)
// with unit conversion.
void apply_override(ScenarioPreset& preset, const ConfigOverride& ov,
                    bool raw_angular = false);

std::vector<ConfigOverride> parse_overrides(const std::vector<std::string>& kv);

} // namespace tqgate::cli
