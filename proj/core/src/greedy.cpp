#include <algorithm>

#include "confscale/solvers.hpp"
#include "confscale/workload.hpp"

namespace confscale {

Schedule greedy(const Workload& workload, const Config& config)
{
    validate(config);
    validate(workload, config);

    const int n = config.n;
    const int delta = config.delta;
    const auto occ = occupancy(workload);
    Schedule schedule{std::vector<Count>(static_cast<std::size_t>(n), 0)};

    Count provisioned = 0;
    for (int t = 1; t <= n - delta; t += delta) {
        const auto from = occ.begin() + (t + delta - 1);
        const auto to = occ.begin() + std::min(t + 2 * delta, n);
        const Count target = *std::max_element(from, to);
        schedule.change(t) = target - provisioned;
        provisioned = target;
    }
    return schedule;
}

}  // namespace confscale
