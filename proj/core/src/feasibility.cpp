#include <string>

#include "confscale/schedule.hpp"
#include "confscale/workload.hpp"
#include "detail.hpp"

namespace confscale {

FeasibilityReport check_feasibility(const Workload& workload, const Schedule& schedule,
                                    const Config& config)
{
    FeasibilityReport report;
    report.violations = shape_violations(schedule, config);
    if (workload.horizon() != config.n) {
        report.violations.push_back({ViolationKind::length_mismatch, workload.horizon(),
                                     std::nullopt, "workload length differs from n"});
    }
    if (!report.violations.empty() &&
        report.violations.back().kind == ViolationKind::length_mismatch)
        return report;

    const auto cap = detail::raw_capacity(schedule, config);
    const auto floor = mandatory_load(workload, config);
    for (Slot t = 1; t <= config.n; ++t) {
        const auto k = static_cast<std::size_t>(t - 1);
        if (cap[k] < 0)
            report.violations.push_back({ViolationKind::negative_capacity, t, std::nullopt,
                                         "capacity " + std::to_string(cap[k])});
        if (cap[k] < floor[k])
            report.violations.push_back({ViolationKind::mandatory_load, t, std::nullopt,
                                         "capacity " + std::to_string(cap[k]) +
                                             " below mandatory load " + std::to_string(floor[k])});
    }

    const auto sim = simulate(workload, schedule, config);
    for (const auto& [arrival, segments] : sim.cohorts) {
        for (const auto& seg : segments) {
            const int wait = seg.slot - arrival;
            if (seg.outcome == CohortOutcome::unadmitted) {
                report.violations.push_back(
                    {ViolationKind::unadmitted, arrival, std::nullopt,
                     std::to_string(seg.count) + " participant(s) never admitted"});
            } else if (wait > config.theta) {
                report.violations.push_back(
                    {ViolationKind::theta, arrival, seg.slot,
                     std::to_string(seg.count) + " participant(s) waited " +
                         std::to_string(wait) + " slots"});
            }
        }
    }
    for (Slot t : sim.overcommitted_slots)
        report.violations.push_back({ViolationKind::overcommitted, t, std::nullopt,
                                     "capacity " + std::to_string(cap[static_cast<std::size_t>(t - 1)]) +
                                         " below admitted occupancy"});
    return report;
}

}  // namespace confscale
