#include "confscale/workload.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "confscale/rng.hpp"

namespace confscale {

void validate(const Config& config)
{
    if (config.n < 1) throw ConfigError("n must be >= 1, got " + std::to_string(config.n));
    if (config.delta <= 1)
        throw ConfigError("delta must be > 1, got " + std::to_string(config.delta));
    if (config.theta <= config.delta)
        throw ConfigError("theta must exceed delta (delta=" + std::to_string(config.delta) +
                          ", theta=" + std::to_string(config.theta) + ")");
    if (config.theta > config.n)
        throw ConfigError("theta must be <= n (theta=" + std::to_string(config.theta) +
                          ", n=" + std::to_string(config.n) + ")");
}

Preset scenario_preset(const std::string& name)
{
    const Config preset_timing{100, 3, 4};
    if (name == "mmog") return {{"mmog", 1500, 0.3, 0}, preset_timing};
    if (name == "oppd") return {{"oppd", 300, 0.3, 0}, preset_timing};
    throw ConfigError("unknown scenario '" + name + "' (expected mmog or oppd)");
}

void validate(const ScenarioParams& params)
{
    if (params.amplitude < 0)
        throw ConfigError("amplitude must be >= 0, got " + std::to_string(params.amplitude));
    if (!(params.plateau_fraction >= 0.0 && params.plateau_fraction <= 1.0))
        throw ConfigError("plateau_fraction must lie in [0, 1]");
}

void validate(const Workload& workload, const Config& config)
{
    const auto n = static_cast<std::size_t>(config.n);
    if (workload.arrivals.size() != n)
        throw ParseError("arrivals length " + std::to_string(workload.arrivals.size()) +
                         " does not match n=" + std::to_string(n));
    if (workload.departures.size() != n)
        throw ParseError("departures length " + std::to_string(workload.departures.size()) +
                         " does not match n=" + std::to_string(n));
    Count running = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const auto slot = std::to_string(k + 1);
        if (workload.arrivals[k] < 0) throw ParseError("negative arrival count at slot " + slot);
        if (workload.departures[k] < 0)
            throw ParseError("negative departure count at slot " + slot);
        running += workload.arrivals[k] - workload.departures[k];
        if (running < 0)
            throw ParseError("departures exceed arrivals in prefix ending at slot " + slot);
    }
}

Workload generate_workload(const ScenarioParams& params, const Config& config)
{
    validate(config);
    validate(params);

    const int n = config.n;
    const int plateau = static_cast<int>(std::floor(params.plateau_fraction * n));
    const int growth = (n - plateau) / 2;

    Workload w{std::vector<Count>(static_cast<std::size_t>(n), 0),
               std::vector<Count>(static_cast<std::size_t>(n), 0)};
    SeededRng rng(params.seed);
    const auto amp = static_cast<std::uint64_t>(params.amplitude);
    Count present = 0;

    for (int k = 0; k < n; ++k) {
        auto& a = w.arrivals[static_cast<std::size_t>(k)];
        auto& d = w.departures[static_cast<std::size_t>(k)];
        if (k < growth) {
            a = static_cast<Count>(rng.uniform_inclusive(amp));
        } else if (k < growth + plateau) {
            // Even plateau offsets swap participants one-for-one, odd ones are idle.
            if ((k - growth) % 2 == 0) {
                const auto hi = std::min<std::uint64_t>(amp, static_cast<std::uint64_t>(present));
                a = d = static_cast<Count>(rng.uniform_inclusive(hi));
            }
        } else {
            const auto hi = std::min<std::uint64_t>(amp, static_cast<std::uint64_t>(present));
            d = static_cast<Count>(rng.uniform_inclusive(hi));
        }
        present += a - d;
    }
    return w;
}

std::vector<Count> occupancy(const Workload& workload)
{
    std::vector<Count> out(workload.arrivals.size());
    Count running = 0;
    for (std::size_t k = 0; k < out.size(); ++k) {
        running += workload.arrivals[k] - workload.departures[k];
        out[k] = running;
    }
    return out;
}

std::vector<Count> mandatory_load(const Workload& workload, const Config& config)
{
    const auto n = workload.arrivals.size();
    const auto theta = static_cast<std::size_t>(config.theta);
    std::vector<Count> out(n, 0);
    Count old_arrivals = 0;  // sum of a_k for k <= i - theta
    Count departed = 0;      // sum of d_k for k <= i
    for (std::size_t i = 1; i <= n; ++i) {
        if (i > theta) old_arrivals += workload.arrivals[i - theta - 1];
        departed += workload.departures[i - 1];
        out[i - 1] = std::max<Count>(0, old_arrivals - departed);
    }
    return out;
}

}  // namespace confscale
