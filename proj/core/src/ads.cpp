#include <limits>

#include "confscale/solvers.hpp"
#include "confscale/workload.hpp"

namespace confscale {

Schedule ads_heuristic(const Workload& workload, const Config& config)
{
    validate(config);
    validate(workload, config);

    const int n = config.n;
    Schedule schedule{std::vector<Count>(static_cast<std::size_t>(n), 0)};

    Count old_size = 0;
    for (int i = 1; i + config.delta <= n; ++i) {
        Count min_size = std::numeric_limits<Count>::max();
        int best_t = 0;

        // Phase 1: smallest conference size reachable in the admissible window.
        const int last = std::min(i + config.theta, n);
        for (int t = i + config.delta; t <= last; ++t) {
            Count total_size = 0;
            for (int p = 1; p <= t; ++p) total_size += workload.arrival(p) - workload.departure(p);
            if (min_size >= total_size) {
                min_size = total_size;
                best_t = t - config.delta;
            }
        }

        // Phase 2: request the difference and resume where it takes effect.
        const Count new_size = min_size;
        schedule.change(best_t) = new_size - old_size;
        old_size = new_size;
        i = best_t + config.delta - 1;
    }
    return schedule;
}

}  // namespace confscale
