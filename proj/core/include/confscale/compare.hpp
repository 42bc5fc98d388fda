#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "confscale/schedule.hpp"
#include "confscale/solvers.hpp"
#include "confscale/workload.hpp"

namespace confscale {

enum class Algorithm { ads, greedy, oracle };

std::string to_string(Algorithm algorithm);
/// Throws ConfigError for names other than ads, greedy, oracle.
Algorithm parse_algorithm(std::string_view name);

struct SolveOutcome {
    Schedule schedule;
    std::optional<OracleResult> oracle;  ///< set for Algorithm::oracle
};

/// Runs one algorithm; OracleRefused propagates for instances outside `limits`.
SolveOutcome solve(Algorithm algorithm, const Workload& workload, const Config& config,
                   const OracleLimits& limits = {});

struct CompareSpec {
    ScenarioParams scenario;
    Config config;
    std::uint64_t first_seed = 0;
    std::uint64_t last_seed = 0;  ///< inclusive
    std::vector<Algorithm> algorithms;
    OracleLimits oracle_limits;
    /// When set, every seed reuses this workload instead of generating one.
    std::optional<Workload> fixed_workload;
};

struct CompareRow {
    std::uint64_t seed = 0;
    Algorithm algorithm = Algorithm::ads;
    CostReport report;
};

struct AlgorithmSummary {
    Algorithm algorithm = Algorithm::ads;
    double median_resource_cost = 0;
    double median_qos_cost = 0;
    std::size_t runs = 0;
    std::size_t infeasible = 0;
};

struct CompareResult {
    std::vector<CompareRow> rows;  ///< sorted by seed, then algorithm name
    std::vector<AlgorithmSummary> summary;
    std::vector<std::string> notes;  ///< skipped runs and exclusions, human readable
};

inline constexpr std::string_view kCompareHeader =
    "seed,algorithm,resource_cost,qos_cost,max_capacity,num_requests,feasible";

/// Throws ConfigError for an empty seed range or algorithm set.
void validate(const CompareSpec& spec);

/// Runs every (seed, algorithm) pair, in parallel where the hardware allows. The oracle
/// is dropped with a note when n exceeds its limits, and skipped per seed when the
/// generated workload is too large.
CompareResult run_compare(const CompareSpec& spec);

/// Header, one row per run, then a `# summary` block with per-algorithm medians.
std::string to_csv(const CompareResult& result);

double median(std::vector<double> values);

}  // namespace confscale
