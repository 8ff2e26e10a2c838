#pragma once

#include <string>
#include <vector>

#include "mcvd/engine.hpp"

namespace mcvd::io {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A base configuration plus sweep axes. An empty axis means "use the base
/// value"; listing several values turns the key into a sweep dimension.
struct ExperimentPlan {
    engine::SimulationConfig base;
    std::vector<engine::Scenario> scenarios;
    std::vector<double> distances;
    std::vector<double> enzyme_radii;
    std::vector<double> symbol_periods;
    std::vector<double> half_lives;
    std::string out_dir = ".";
    int threads = 1;
    bool dump_hits = false;
};

/// Parses the line-oriented `key = value` format. Unknown keys are
/// rejected with the offending key and line number; omitted keys take the
/// defaults from the published parameter table. `scenario` is required.
ExperimentPlan parse_config(const std::string& text);

/// Inverse of parse_config: parse_config(render_config(p)) == p.
std::string render_config(const ExperimentPlan& plan);

bool operator==(const ExperimentPlan& a, const ExperimentPlan& b);

}  // namespace mcvd::io
