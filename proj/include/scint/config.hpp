#ifndef SCINT_CONFIG_HPP
#define SCINT_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "scint/phys_params.hpp"
#include "scint/pipeline.hpp"

namespace scint {

struct SweepSpec {
    SweepAxis axis = SweepAxis::z;
    double min = 0.0;
    double max = 0.0;
    int points = 1;
    bool log_scale = false;

    std::vector<double> grid() const;
};

/// Fully resolved run description; the sidecar serializes exactly this, so a
/// published CSV can be regenerated from its sidecar alone.
struct RunConfig {
    PhysicalParams params;
    SweepSpec sweep;
    double tol = 1e-6;
    std::uint64_t mc_samples = 200'000;
    std::uint64_t seed = 12345;
    int threads = 1;
    std::string output = "out.csv";
    std::string cache_dir; ///< empty disables caching
    std::string preset;    ///< resolved preset name, if any

    nlohmann::json to_json() const;
    static RunConfig from_json(const nlohmann::json& j);
};

/// Parse a flat key = value document ('#' comments, "inf" spells infinity).
/// Unknown keys are rejected by name; all errors are aggregated with line
/// numbers. When the document names a preset, explicit keys that contradict
/// the preset are an error unless prefer_preset is set, in which case the
/// preset value wins.
RunConfig parse_config(const std::string& text, bool prefer_preset = false);

/// Figure presets. Caption-pinned values are exact; grid choices and the
/// values captions omit are artifact defaults (documented in the README).
RunConfig preset_config(const std::string& name);

std::vector<std::string> preset_names();

/// Units and meaning of every accepted config key (for --help and README).
std::string config_key_reference();

} // namespace scint

#endif
