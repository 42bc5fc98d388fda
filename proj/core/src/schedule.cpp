#include "confscale/schedule.hpp"

#include <algorithm>
#include <string>

#include "detail.hpp"

namespace confscale {

namespace detail {

std::vector<Count> raw_capacity(const Schedule& schedule, const Config& config)
{
    const int n = schedule.horizon();
    std::vector<Count> cap(static_cast<std::size_t>(n), 0);
    Count active = 0;
    for (Slot t = 1; t <= n; ++t) {
        const Slot j = t - config.delta;
        if (j >= 1) active += schedule.change(j);
        cap[static_cast<std::size_t>(t - 1)] = active;
    }
    return cap;
}

void require_same_horizon(const Workload& workload, const Schedule& schedule,
                          const Config& config)
{
    if (workload.horizon() != config.n || schedule.horizon() != config.n ||
        workload.departures.size() != workload.arrivals.size())
        throw ConfigError("workload, schedule and config disagree on the horizon length");
}

}  // namespace detail

std::vector<Count> capacity_trajectory(const Schedule& schedule, const Config& config)
{
    if (schedule.horizon() != config.n)
        throw ConfigError("schedule length " + std::to_string(schedule.horizon()) +
                          " does not match n=" + std::to_string(config.n));
    auto cap = detail::raw_capacity(schedule, config);
    for (std::size_t k = 0; k < cap.size(); ++k)
        if (cap[k] < 0)
            throw InfeasibleError("negative capacity " + std::to_string(cap[k]) + " at slot " +
                                  std::to_string(k + 1));
    return cap;
}

Count resource_cost(const Schedule& schedule, const Config& config)
{
    Count total = 0;
    const int last = std::min(schedule.horizon(), config.n - config.delta);
    for (Slot j = 1; j <= last; ++j)
        total += schedule.change(j) * (config.n - j - config.delta);
    return total;
}

int num_requests(const Schedule& schedule)
{
    return static_cast<int>(std::count_if(schedule.changes.begin(), schedule.changes.end(),
                                          [](Count s) { return s != 0; }));
}

std::string to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::separation: return "separation";
    case ViolationKind::late_request: return "late_request";
    case ViolationKind::negative_capacity: return "negative_capacity";
    case ViolationKind::mandatory_load: return "mandatory_load";
    case ViolationKind::theta: return "theta";
    case ViolationKind::unadmitted: return "unadmitted";
    case ViolationKind::overcommitted: return "overcommitted";
    case ViolationKind::length_mismatch: return "length_mismatch";
    }
    return "unknown";
}

void write_report(std::ostream& out, const FeasibilityReport& report)
{
    for (const auto& v : report.violations) {
        out << "VIOLATION " << to_string(v.kind) << " slot=" << v.slot;
        if (v.slot2) out << " slot2=" << *v.slot2;
        out << " detail=" << v.detail << '\n';
    }
}

std::vector<Violation> shape_violations(const Schedule& schedule, const Config& config)
{
    std::vector<Violation> out;
    if (schedule.horizon() != config.n) {
        out.push_back({ViolationKind::length_mismatch, schedule.horizon(), std::nullopt,
                       "schedule length differs from n=" + std::to_string(config.n)});
        return out;
    }
    std::vector<Slot> requests;
    for (Slot j = 1; j <= config.n; ++j)
        if (schedule.change(j) != 0) requests.push_back(j);

    for (std::size_t a = 0; a < requests.size(); ++a)
        for (std::size_t b = a + 1; b < requests.size() && requests[b] - requests[a] < config.delta;
             ++b)
            out.push_back({ViolationKind::separation, requests[a], requests[b],
                           "requests " + std::to_string(requests[b] - requests[a]) +
                               " slots apart, need " + std::to_string(config.delta)});

    for (Slot j : requests)
        if (j > config.n - config.delta)
            out.push_back({ViolationKind::late_request, j, std::nullopt,
                           "request of " + std::to_string(schedule.change(j)) +
                               " cannot take effect before the horizon ends"});
    return out;
}

CostReport evaluate(const Workload& workload, const Schedule& schedule, const Config& config)
{
    detail::require_same_horizon(workload, schedule, config);
    const auto cap = detail::raw_capacity(schedule, config);
    CostReport report;
    report.resource_cost = resource_cost(schedule, config);
    report.qos_cost = simulate(workload, schedule, config).qos_cost;
    report.max_capacity = std::max<Count>(0, cap.empty() ? 0 : *std::max_element(cap.begin(), cap.end()));
    report.num_requests = num_requests(schedule);
    report.feasible = check_feasibility(workload, schedule, config).feasible();
    return report;
}

}  // namespace confscale
