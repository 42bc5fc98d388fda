#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "confscale/types.hpp"

namespace confscale {

/// Capacity per slot: cap_t = sum_{j <= t - delta} s_j. A request sent at slot j is
/// active from slot j + delta inclusive. Throws InfeasibleError at the first slot whose
/// capacity would be negative.
std::vector<Count> capacity_trajectory(const Schedule& schedule, const Config& config);

/// Resource cost in net-change form: sum_{j <= n - delta} s_j * (n - j - delta).
/// Requests in the last delta slots carry no weight.
Count resource_cost(const Schedule& schedule, const Config& config);

/// Number of slots with a nonzero change.
int num_requests(const Schedule& schedule);

enum class CohortOutcome {
    admitted,          ///< got a place at `slot`
    departed_waiting,  ///< left at `slot` before ever being admitted
    unadmitted,        ///< still waiting when the horizon ended
};

/// A group of participants from one arrival slot sharing the same fate.
struct CohortSegment {
    Count count = 0;
    Slot slot = 0;
    CohortOutcome outcome = CohortOutcome::admitted;

    friend bool operator==(const CohortSegment&, const CohortSegment&) = default;
};

/// Outcome of replaying a workload against a schedule's pooled capacity.
struct SimulationReport {
    /// arrival slot -> segments in FIFO order
    std::map<Slot, std::vector<CohortSegment>> cohorts;
    /// wait (slots) -> number of participants with that wait
    std::map<int, Count> wait_histogram;
    /// arrival slots with a participant waiting more than theta or never admitted
    std::vector<Slot> theta_violations;
    /// slots where capacity fell below the admitted occupancy (after departures)
    std::vector<Slot> overcommitted_slots;
    std::vector<Count> capacity;
    Count qos_cost = 0;

    friend bool operator==(const SimulationReport&, const SimulationReport&) = default;
};

/// FIFO admission replay. Per slot: arrivals join the queue, departures remove the
/// earliest arrivals still present (admitted ones first, since admission is FIFO), then
/// queued participants are admitted in arrival order up to free capacity. A participant
/// who departs while still queued is charged its wait up to the departure slot; one still
/// queued at the horizon end is charged up to slot n and flagged.
SimulationReport simulate(const Workload& workload, const Schedule& schedule,
                          const Config& config);

struct CostReport {
    Count resource_cost = 0;
    Count qos_cost = 0;
    Count max_capacity = 0;
    int num_requests = 0;
    bool feasible = false;

    friend bool operator==(const CostReport&, const CostReport&) = default;
};

enum class ViolationKind {
    separation,         ///< two requests closer than delta
    late_request,       ///< request in the last delta slots
    negative_capacity,
    mandatory_load,     ///< capacity below participants that can no longer wait
    theta,              ///< a cohort waited more than theta
    unadmitted,         ///< a cohort never got a place before the horizon ended
    overcommitted,      ///< capacity below admitted occupancy
    length_mismatch,
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    Slot slot = 0;
    std::optional<Slot> slot2;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct FeasibilityReport {
    std::vector<Violation> violations;

    bool feasible() const { return violations.empty(); }
};

/// Checks request separation, the quiet tail, non-negative capacity, the mandatory
/// load floor, admission within theta and capacity never undercutting admitted users.
FeasibilityReport check_feasibility(const Workload& workload, const Schedule& schedule,
                                    const Config& config);

/// `VIOLATION <kind> slot=<j> [slot2=<j'>] detail=<text>`, one per line.
void write_report(std::ostream& out, const FeasibilityReport& report);

/// Resource and QoS cost plus feasibility for a schedule. Does not throw on infeasible
/// schedules; `feasible` is false instead.
CostReport evaluate(const Workload& workload, const Schedule& schedule, const Config& config);

/// Structural invariants only (length, tail, separation); empty when well formed.
std::vector<Violation> shape_violations(const Schedule& schedule, const Config& config);

}  // namespace confscale
