#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "confscale/schedule.hpp"
#include "confscale/solvers.hpp"
#include "confscale/workload.hpp"

namespace confscale {

namespace {

struct Pending {
    int row;
    Count remaining;
};

}  // namespace

SolutionMatrices lift_schedule(const Schedule& schedule, const Workload& workload,
                               const Config& config)
{
    validate(config);
    validate(workload, config);
    if (const auto bad = shape_violations(schedule, config); !bad.empty())
        throw InfeasibleError("schedule is malformed: " + to_string(bad.front().kind) +
                              " at slot " + std::to_string(bad.front().slot));

    const int n = config.n;
    const int delta = config.delta;
    const int last_column = n - delta;
    auto deadline = [&](int row) { return std::min(row + config.theta - delta, last_column); };

    std::set<int> requests;
    for (Slot j = 1; j <= n; ++j)
        if (schedule.change(j) != 0) requests.insert(j);

    auto addable = [&](int c) {
        if (c < 1 || c > last_column || requests.contains(c)) return false;
        const auto it = requests.lower_bound(c);
        if (it != requests.end() && *it - c < delta) return false;
        if (it != requests.begin() && c - *std::prev(it) < delta) return false;
        return true;
    };
    // Is there a column in (c, limit] that is, or can become, a request?
    auto later_column = [&](int c, int limit) {
        for (int k = c + 1; k <= std::min(limit, last_column); ++k)
            if (requests.contains(k) || addable(k)) return true;
        return false;
    };

    SolutionMatrices m(n);
    std::deque<Pending> arrivals;
    for (int i = 1; i <= n; ++i)
        if (workload.arrival(i) > 0) arrivals.push_back({i, workload.arrival(i)});
    std::deque<Pending> departures;
    int next_departure_row = 1;

    for (int c = 1; c <= last_column; ++c) {
        while (next_departure_row <= std::min(c + delta, n)) {
            if (const Count d = workload.departure(next_departure_row); d > 0)
                departures.push_back({next_departure_row, d});
            ++next_departure_row;
        }

        const bool urgent =
            !arrivals.empty() && !later_column(c, deadline(arrivals.front().row));
        if (!requests.contains(c)) {
            if (!urgent || !addable(c)) continue;
            requests.insert(c);
        }

        const Count s = schedule.change(c);
        Count up = std::max<Count>(s, 0);
        Count down = std::max<Count>(-s, 0);

        // Net allocations go to the earliest uncovered arrivals.
        while (up > 0 && !arrivals.empty()) {
            auto& p = arrivals.front();
            const Count k = std::min(up, p.remaining);
            m.x(p.row, c) += k;
            p.remaining -= k;
            up -= k;
            if (p.remaining == 0) arrivals.pop_front();
        }
        if (up > 0) m.x(n, c) += up;

        // Arrivals that cannot wait for a later request recycle departing places here.
        Count recycled = 0;
        while (!arrivals.empty() && !later_column(c, deadline(arrivals.front().row))) {
            auto& p = arrivals.front();
            m.x(p.row, c) += p.remaining;
            recycled += p.remaining;
            arrivals.pop_front();
        }

        Count freed = down + recycled;
        while (freed > 0 && !departures.empty()) {
            auto& p = departures.front();
            const Count k = std::min(freed, p.remaining);
            m.y(p.row, c) += k;
            p.remaining -= k;
            freed -= k;
            if (p.remaining == 0) departures.pop_front();
        }
        if (freed > 0)
            throw InfeasibleError("cannot attribute " + std::to_string(freed) +
                                  " de-allocated place(s) at slot " + std::to_string(c) +
                                  " to departures");
    }

    for (int j : requests) m.r(j) = 1;

    if (const auto bad = validate_solution(m, workload, config); !bad.empty())
        throw InfeasibleError("lifted schedule violates " + bad.front().tag + " at index " +
                              std::to_string(bad.front().i));
    if (matrices_to_schedule(m, config) != schedule)
        throw std::logic_error("lift changed the column net sums");
    return m;
}

}  // namespace confscale
