#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "confscale/schedule.hpp"
#include "detail.hpp"

namespace confscale {

namespace {

struct Group {
    Slot arrival;
    Count count;
};

}  // namespace

SimulationReport simulate(const Workload& workload, const Schedule& schedule,
                          const Config& config)
{
    detail::require_same_horizon(workload, schedule, config);

    SimulationReport report;
    report.capacity = detail::raw_capacity(schedule, config);

    std::deque<Group> admitted;  // FIFO by arrival, so also by admission
    std::deque<Group> waiting;
    Count admitted_total = 0;
    std::set<Slot> violations;

    auto record = [&](Slot arrival, Count count, Slot at, CohortOutcome outcome) {
        const int wait = at - arrival;
        report.cohorts[arrival].push_back({count, at, outcome});
        report.wait_histogram[wait] += count;
        report.qos_cost += count * wait;
        if (wait > config.theta || outcome == CohortOutcome::unadmitted)
            violations.insert(arrival);
    };

    for (Slot t = 1; t <= config.n; ++t) {
        if (const Count a = workload.arrival(t); a > 0) waiting.push_back({t, a});

        Count leaving = workload.departure(t);
        while (leaving > 0 && !admitted.empty()) {
            auto& g = admitted.front();
            const Count k = std::min(leaving, g.count);
            g.count -= k;
            admitted_total -= k;
            leaving -= k;
            if (g.count == 0) admitted.pop_front();
        }
        while (leaving > 0 && !waiting.empty()) {
            auto& g = waiting.front();
            const Count k = std::min(leaving, g.count);
            record(g.arrival, k, t, CohortOutcome::departed_waiting);
            g.count -= k;
            leaving -= k;
            if (g.count == 0) waiting.pop_front();
        }
        if (leaving > 0)
            throw InfeasibleError("departures exceed present participants at slot " +
                                  std::to_string(t));

        const Count cap = report.capacity[static_cast<std::size_t>(t - 1)];
        if (admitted_total > cap) report.overcommitted_slots.push_back(t);

        Count free = cap - admitted_total;
        while (free > 0 && !waiting.empty()) {
            auto& g = waiting.front();
            const Count k = std::min(free, g.count);
            record(g.arrival, k, t, CohortOutcome::admitted);
            if (!admitted.empty() && admitted.back().arrival == g.arrival)
                admitted.back().count += k;
            else
                admitted.push_back({g.arrival, k});
            admitted_total += k;
            free -= k;
            g.count -= k;
            if (g.count == 0) waiting.pop_front();
        }
    }

    for (const auto& g : waiting) record(g.arrival, g.count, config.n, CohortOutcome::unadmitted);

    report.theta_violations.assign(violations.begin(), violations.end());
    return report;
}

}  // namespace confscale
