#pragma once

#include <vector>

#include "confscale/types.hpp"

namespace confscale::detail {

/// Capacity trajectory without the negativity check.
std::vector<Count> raw_capacity(const Schedule& schedule, const Config& config);

void require_same_horizon(const Workload& workload, const Schedule& schedule,
                          const Config& config);

}  // namespace confscale::detail
