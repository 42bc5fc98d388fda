#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "confscale/types.hpp"

namespace confscale {

/// Knobs for the synthetic rise / plateau / fall workload generator.
struct ScenarioParams {
    std::string name = "custom";
    Count amplitude = 1;          ///< max per-slot join or leave count
    double plateau_fraction = 0.3;
    std::uint64_t seed = 0;
};

/// Scenario presets with their default timing.
struct Preset {
    ScenarioParams params;
    Config config;
};

/// `mmog` (amplitude 1500) or `oppd` (amplitude 300), both n=100, delta=3, theta=4.
/// Throws ConfigError for unknown names.
Preset scenario_preset(const std::string& name);

void validate(const ScenarioParams& params);

/// Checks lengths against `config.n`, non-negativity and non-negative running occupancy.
/// Throws ParseError naming the first offending slot.
void validate(const Workload& workload, const Config& config);

/// Deterministic synthetic workload: growth slots add arrivals only, the plateau keeps
/// occupancy constant (alternating a = d draws and idle slots), decay slots remove
/// participants only. Draws use std::mt19937_64 seeded with `params.seed`.
Workload generate_workload(const ScenarioParams& params, const Config& config);

/// Running occupancy: result[i-1] = sum_{k<=i} (a_k - d_k).
std::vector<Count> occupancy(const Workload& workload);

/// Participants that arrived at least theta slots ago and are still present under FIFO
/// departures: l_i = max(0, sum_{k<=i-theta} a_k - sum_{k<=i} d_k).
std::vector<Count> mandatory_load(const Workload& workload, const Config& config);

}  // namespace confscale
