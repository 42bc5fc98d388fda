#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace confscale {

/// Participant counts and cost units. Signed so net changes share the type.
using Count = std::int64_t;

/// Time slots are 1-based throughout the public API; slot j lives at index j - 1.
using Slot = int;

/// Horizon and SLA timing, all in time slots.
struct Config {
    int n = 0;      ///< horizon length
    int delta = 0;  ///< provisioning lag
    int theta = 0;  ///< acceptable join delay

    friend bool operator==(const Config&, const Config&) = default;
};

/// Forecast per-slot arrivals and departures over the horizon.
struct Workload {
    std::vector<Count> arrivals;
    std::vector<Count> departures;

    int horizon() const { return static_cast<int>(arrivals.size()); }
    Count arrival(Slot i) const { return arrivals[static_cast<std::size_t>(i - 1)]; }
    Count departure(Slot i) const { return departures[static_cast<std::size_t>(i - 1)]; }

    friend bool operator==(const Workload&, const Workload&) = default;
};

/// Net capacity change requested at each slot; zero means no request.
struct Schedule {
    std::vector<Count> changes;

    int horizon() const { return static_cast<int>(changes.size()); }
    Count change(Slot j) const { return changes[static_cast<std::size_t>(j - 1)]; }
    Count& change(Slot j) { return changes[static_cast<std::size_t>(j - 1)]; }

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Invalid configuration, scenario or model parameters.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed or invariant-violating input text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A schedule or workload that cannot be realised (negative capacity, inconsistent departures).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Validates the timing invariants: n >= 1, 1 < delta < theta <= n.
void validate(const Config& config);

}  // namespace confscale
