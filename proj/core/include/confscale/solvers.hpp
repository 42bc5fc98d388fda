#pragma once

#include <chrono>
#include <stdexcept>

#include "confscale/ilp.hpp"
#include "confscale/types.hpp"

namespace confscale {

/// Look-ahead scaling heuristic. From each decision point i it scans t in
/// [i + delta, min(i + theta, n)] for the smallest running occupancy (ties go to the
/// later slot), requests that size at t - delta, and moves to the slot where that
/// request takes effect. Stops once i + delta > n.
Schedule ads_heuristic(const Workload& workload, const Config& config);

/// Periodic baseline: every delta slots from slot 1 (while t <= n - delta) it sets the
/// capacity to the peak occupancy over [t + delta, min(t + 2 delta, n)].
Schedule greedy(const Workload& workload, const Config& config);

struct OracleLimits {
    int max_n = 10;
    Count max_total_participants = 8;
    std::chrono::milliseconds time_budget{std::chrono::minutes(1)};
};

/// The oracle declined an instance outside its limits or ran out of time.
class OracleRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    SolutionMatrices solution;
    Count cost = 0;
};

/// Exhaustive minimum-cost solution of the scaling ILP for tiny instances. Enumerates
/// request sets obeying the separation and quiet-tail rules, then every integer
/// allocation of each arrival cohort and de-allocation of each departure cohort to
/// admissible request slots, keeping the lexicographically smallest optimum (X, Y, R
/// row-major). Every accepted candidate is checked with validate_solution under `skip`.
/// Throws OracleRefused outside `limits`, InfeasibleError if nothing is feasible.
OracleResult exact_oracle(const Workload& workload, const Config& config,
                          const OracleLimits& limits = {}, const FamilySet& skip = {});

/// Expresses a pooled schedule as earmarked matrices with the same column net sums,
/// hence the same cost. Arrival cohorts take allocations FIFO, de-allocations go FIFO
/// to departures; where an arrival can only be covered by recycling a departing
/// participant's place, a matched allocation/de-allocation pair is added at a request
/// slot (inserting a zero-net request at a free slot if necessary). Throws
/// InfeasibleError when no such lift exists.
SolutionMatrices lift_schedule(const Schedule& schedule, const Workload& workload,
                               const Config& config);

}  // namespace confscale
