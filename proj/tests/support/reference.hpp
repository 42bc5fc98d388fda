#pragma once

// Test-only reference implementations. They follow different routes from the library
// code they check and must not call into it beyond plain data types.

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <vector>

#include "confscale/types.hpp"
#include "confscale/workload.hpp"

namespace confscale {

inline void PrintTo(const Schedule& s, std::ostream* os)
{
    *os << '[';
    for (std::size_t k = 0; k < s.changes.size(); ++k) *os << (k ? "," : "") << s.changes[k];
    *os << ']';
}

}  // namespace confscale

namespace confscale::reference {

inline Config t1_config() { return {8, 2, 3}; }

inline Workload t1_workload()
{
    return {{2, 0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 2, 0, 0, 0}};
}

/// Minimum objective over column-sum vectors. Cost and the EQ7/EQ8 rows depend only on column
/// sums; row feasibility is decided by prefix Hall conditions (arrival deadlines and
/// departure availability are both nested), so no matrices are built.
inline std::optional<Count> min_cost_by_column_sums(const Workload& w, const Config& cfg,
                                                    bool enforce_floor = true)
{
    const int n = cfg.n, delta = cfg.delta, theta = cfg.theta;
    const int last = n - delta;
    const Count total_a = std::accumulate(w.arrivals.begin(), w.arrivals.end(), Count{0});
    const Count total_d = std::accumulate(w.departures.begin(), w.departures.end(), Count{0});

    // floor_j = max(0, arrivals up to j - theta minus departures up to j)
    std::vector<Count> floor(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 1; j <= n; ++j) {
        Count old = 0, gone = 0;
        for (int k = 1; k <= j - theta; ++k) old += w.arrival(k);
        for (int k = 1; k <= j; ++k) gone += w.departure(k);
        floor[static_cast<std::size_t>(j)] = std::max<Count>(0, old - gone);
    }

    std::optional<Count> best;
    std::vector<int> req;
    std::vector<Count> X(static_cast<std::size_t>(n) + 1, 0), Y(X.size(), 0);

    auto check = [&] {
        // arrivals with deadline <= D need that much allocation by D
        for (int k = 1; k <= n; ++k) {
            const int dl = std::min(k + theta - delta, last);
            Count need = 0, have = 0;
            for (int i = 1; i <= k; ++i) need += w.arrival(i);
            for (int j = 1; j <= dl; ++j) have += X[static_cast<std::size_t>(j)];
            if (have < need) return;
        }
        // de-allocations up to column j may only use departures up to j + delta
        for (int j = 1; j <= last; ++j) {
            Count used = 0, avail = 0;
            for (int t = 1; t <= j; ++t) used += Y[static_cast<std::size_t>(t)];
            for (int i = 1; i <= std::min(j + delta, n); ++i) avail += w.departure(i);
            if (used > avail) return;
        }
        Count net = 0, cost = 0;
        std::vector<Count> prefix(static_cast<std::size_t>(n) + 1, 0);
        for (int j = 1; j <= n; ++j) {
            net += X[static_cast<std::size_t>(j)] - Y[static_cast<std::size_t>(j)];
            prefix[static_cast<std::size_t>(j)] = net;
            if (net < 0) return;
            if (j <= last) cost += (X[static_cast<std::size_t>(j)] - Y[static_cast<std::size_t>(j)]) * (n - j - delta);
        }
        if (enforce_floor)
            for (int j = delta + 1; j <= n; ++j)
                if (prefix[static_cast<std::size_t>(j - delta)] < floor[static_cast<std::size_t>(j)]) return;
        if (!best || cost < *best) best = cost;
    };

    // distribute `left` units over req[pos..] into vec
    std::function<void(std::vector<Count>&, std::size_t, Count, bool, const std::function<void()>&)>
        spread = [&](std::vector<Count>& vec, std::size_t pos, Count left, bool exact,
                     const std::function<void()>& next) {
            if (pos == req.size()) {
                if (!exact || left == 0) next();
                return;
            }
            for (Count v = 0; v <= left; ++v) {
                vec[static_cast<std::size_t>(req[pos])] = v;
                spread(vec, pos + 1, left - v, exact, next);
            }
            vec[static_cast<std::size_t>(req[pos])] = 0;
        };

    std::function<void(int)> choose = [&](int from) {
        spread(X, 0, total_a, true, [&] { spread(Y, 0, total_d, false, check); });
        for (int j = from; j <= last; ++j) {
            req.push_back(j);
            choose(j + delta);
            req.pop_back();
        }
    };
    choose(1);
    return best;
}

struct ParticipantOutcome {
    Count qos_cost = 0;
    bool theta_ok = true;
    bool all_admitted = true;
};

/// One record per participant; FIFO by arrival for both admission and departure.
inline ParticipantOutcome per_participant_replay(const Workload& w, const Schedule& s,
                                                 const Config& cfg)
{
    struct P {
        int arrival;
        bool admitted = false;
        bool gone = false;
    };
    std::vector<P> people;
    ParticipantOutcome out;
    for (int t = 1; t <= cfg.n; ++t) {
        for (Count k = 0; k < w.arrival(t); ++k) people.push_back({t});
        Count leaving = w.departure(t);
        for (auto& p : people) {
            if (leaving == 0) break;
            if (p.gone) continue;
            p.gone = true;
            --leaving;
            if (!p.admitted) {
                out.qos_cost += t - p.arrival;
                if (t - p.arrival > cfg.theta) out.theta_ok = false;
            }
        }
        Count cap = 0;
        for (int j = 1; j <= t - cfg.delta; ++j) cap += s.change(j);
        Count inside = 0;
        for (const auto& p : people) inside += (p.admitted && !p.gone) ? 1 : 0;
        for (auto& p : people) {
            if (inside >= cap) break;
            if (p.gone || p.admitted) continue;
            p.admitted = true;
            ++inside;
            out.qos_cost += t - p.arrival;
            if (t - p.arrival > cfg.theta) out.theta_ok = false;
        }
    }
    for (const auto& p : people)
        if (!p.admitted && !p.gone) {
            out.all_admitted = false;
            out.qos_cost += cfg.n - p.arrival;
        }
    return out;
}

/// First `count` generated workloads (seeds 0, 1, ...) with at most `max_participants`
/// arrivals in total.
inline std::vector<Workload> tiny_instances(Count amplitude, std::size_t count,
                                            Count max_participants, const Config& cfg,
                                            std::vector<std::uint64_t>* seeds = nullptr)
{
    std::vector<Workload> out;
    for (std::uint64_t seed = 0; out.size() < count; ++seed) {
        ScenarioParams p{"tiny", amplitude, 0.3, seed};
        auto w = generate_workload(p, cfg);
        if (std::accumulate(w.arrivals.begin(), w.arrivals.end(), Count{0}) > max_participants) continue;
        out.push_back(std::move(w));
        if (seeds) seeds->push_back(seed);
    }
    return out;
}

}  // namespace confscale::reference
