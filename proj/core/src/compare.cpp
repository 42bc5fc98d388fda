#include "confscale/compare.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace confscale {

std::string to_string(Algorithm algorithm)
{
    switch (algorithm) {
    case Algorithm::ads: return "ads";
    case Algorithm::greedy: return "greedy";
    case Algorithm::oracle: return "oracle";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name)
{
    if (name == "ads") return Algorithm::ads;
    if (name == "greedy") return Algorithm::greedy;
    if (name == "oracle") return Algorithm::oracle;
    throw ConfigError("unknown algorithm '" + std::string(name) + "' (expected ads, greedy or oracle)");
}

SolveOutcome solve(Algorithm algorithm, const Workload& workload, const Config& config,
                   const OracleLimits& limits)
{
    switch (algorithm) {
    case Algorithm::ads: return {ads_heuristic(workload, config), std::nullopt};
    case Algorithm::greedy: return {greedy(workload, config), std::nullopt};
    case Algorithm::oracle: {
        auto result = exact_oracle(workload, config, limits);
        auto schedule = schedule_from_solution(result.solution, config);
        return {std::move(schedule), std::move(result)};
    }
    }
    throw ConfigError("unknown algorithm");
}

void validate(const CompareSpec& spec)
{
    validate(spec.config);
    validate(spec.scenario);
    if (spec.first_seed > spec.last_seed) throw ConfigError("empty seed range");
    if (spec.algorithms.empty()) throw ConfigError("no algorithms selected");
    if (spec.fixed_workload) validate(*spec.fixed_workload, spec.config);
}

double median(std::vector<double> values)
{
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const auto mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

CompareResult run_compare(const CompareSpec& spec)
{
    validate(spec);

    CompareResult result;
    std::vector<Algorithm> algorithms = spec.algorithms;
    std::sort(algorithms.begin(), algorithms.end(),
              [](Algorithm a, Algorithm b) { return to_string(a) < to_string(b); });
    algorithms.erase(std::unique(algorithms.begin(), algorithms.end()), algorithms.end());

    if (spec.config.n > spec.oracle_limits.max_n) {
        const auto it = std::find(algorithms.begin(), algorithms.end(), Algorithm::oracle);
        if (it != algorithms.end()) {
            algorithms.erase(it);
            result.notes.push_back("oracle excluded: n=" + std::to_string(spec.config.n) +
                                   " exceeds its limit of " +
                                   std::to_string(spec.oracle_limits.max_n) +
                                   " (exhaustive search is intractable at this size)");
        }
    }

    const std::uint64_t seed_count = spec.last_seed - spec.first_seed + 1;
    struct Job {
        std::uint64_t seed;
        std::optional<CompareRow> row[3];
        std::string note;
    };
    std::vector<Job> jobs(seed_count);
    for (std::uint64_t k = 0; k < seed_count; ++k) jobs[k].seed = spec.first_seed + k;

    auto run_job = [&](Job& job) {
        ScenarioParams params = spec.scenario;
        params.seed = job.seed;
        const Workload workload =
            spec.fixed_workload ? *spec.fixed_workload : generate_workload(params, spec.config);
        for (std::size_t a = 0; a < algorithms.size(); ++a) {
            try {
                const auto outcome = solve(algorithms[a], workload, spec.config, spec.oracle_limits);
                job.row[a] = CompareRow{job.seed, algorithms[a],
                                        evaluate(workload, outcome.schedule, spec.config)};
            } catch (const OracleRefused& e) {
                job.note = "seed " + std::to_string(job.seed) + ": " + e.what();
            }
        }
    };

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) {
            try {
                run_job(jobs[k]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, jobs.size());
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
        worker();
    }
    if (error) std::rethrow_exception(error);

    for (auto& job : jobs) {
        for (std::size_t a = 0; a < algorithms.size(); ++a)
            if (job.row[a]) result.rows.push_back(*job.row[a]);
        if (!job.note.empty()) result.notes.push_back(job.note);
    }

    for (Algorithm algorithm : algorithms) {
        AlgorithmSummary s;
        s.algorithm = algorithm;
        std::vector<double> resource, qos;
        for (const auto& row : result.rows) {
            if (row.algorithm != algorithm) continue;
            ++s.runs;
            if (!row.report.feasible) ++s.infeasible;
            resource.push_back(static_cast<double>(row.report.resource_cost));
            qos.push_back(static_cast<double>(row.report.qos_cost));
        }
        s.median_resource_cost = median(resource);
        s.median_qos_cost = median(qos);
        result.summary.push_back(s);
    }
    return result;
}

namespace {

std::string format_number(double v)
{
    std::ostringstream out;
    if (v == std::floor(v) && std::fabs(v) < 9e15)
        out << static_cast<long long>(v);
    else
        out << std::fixed << std::setprecision(1) << v;
    return out.str();
}

}  // namespace

std::string to_csv(const CompareResult& result)
{
    std::ostringstream out;
    out << kCompareHeader << '\n';
    for (const auto& row : result.rows) {
        const auto& r = row.report;
        out << row.seed << ',' << to_string(row.algorithm) << ',' << r.resource_cost << ','
            << r.qos_cost << ',' << r.max_capacity << ',' << r.num_requests << ','
            << (r.feasible ? "true" : "false") << '\n';
    }
    out << "# summary\n";
    out << "algorithm,median_resource_cost,median_qos_cost,runs,infeasible\n";
    for (const auto& s : result.summary) {
        out << to_string(s.algorithm) << ',' << format_number(s.median_resource_cost) << ','
            << format_number(s.median_qos_cost) << ',' << s.runs << ',' << s.infeasible << '\n';
    }
    for (const auto& s : result.summary)
        if (s.infeasible > 0)
            out << "# WARNING: " << to_string(s.algorithm) << " produced " << s.infeasible
                << " infeasible schedule(s)\n";
    return out.str();
}

}  // namespace confscale
