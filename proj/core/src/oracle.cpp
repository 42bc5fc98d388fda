#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "confscale/solvers.hpp"
#include "confscale/workload.hpp"

namespace confscale {

namespace {

using Vec = std::vector<Count>;

/// Column-sum vector -> lexicographically smallest row-major matrix reaching it.
using StateMap = std::map<Vec, Vec>;

/// Calls `emit(parts)` for every way of writing `total` as an ordered sum of
/// parts.size() non-negative integers.
template <class F>
void for_each_composition(Count total, std::size_t k, Vec& parts, std::size_t pos, F&& emit)
{
    if (k == 0) {
        if (total == 0) emit(parts);
        return;
    }
    if (pos + 1 == k) {
        parts[pos] = total;
        emit(parts);
        return;
    }
    for (Count v = 0; v <= total; ++v) {
        parts[pos] = v;
        for_each_composition(total - v, k, parts, pos + 1, emit);
    }
}

/// Extends every state by one more matrix row whose entries sit in `cols` and sum to any
/// value in [lo, hi].
StateMap extend(const StateMap& states, int n, const std::vector<int>& cols, Count lo, Count hi)
{
    StateMap next;
    Vec parts(cols.size(), 0);
    for (const auto& [colsum, prefix] : states) {
        for (Count total = lo; total <= hi; ++total) {
            for_each_composition(total, cols.size(), parts, 0, [&](const Vec& p) {
                Vec row(static_cast<std::size_t>(n), 0);
                Vec sums = colsum;
                for (std::size_t k = 0; k < cols.size(); ++k) {
                    const auto c = static_cast<std::size_t>(cols[k] - 1);
                    row[c] = p[k];
                    sums[c] += p[k];
                }
                Vec matrix = prefix;
                matrix.insert(matrix.end(), row.begin(), row.end());
                auto it = next.find(sums);
                if (it == next.end())
                    next.emplace(std::move(sums), std::move(matrix));
                else if (matrix < it->second)
                    it->second = std::move(matrix);
            });
        }
    }
    return next;
}

void request_sets(int first, int last, int gap, std::vector<int>& current,
                  std::vector<std::vector<int>>& out)
{
    out.push_back(current);
    for (int j = first; j <= last; ++j) {
        current.push_back(j);
        request_sets(j + gap, last, gap, current, out);
        current.pop_back();
    }
}

struct Candidate {
    Count cost;
    Vec x;
    Vec y;
};

bool better(const Candidate& a, const std::optional<Candidate>& b)
{
    if (!b) return true;
    if (a.cost != b->cost) return a.cost < b->cost;
    if (a.x != b->x) return a.x < b->x;
    return a.y < b->y;
}

}  // namespace

OracleResult exact_oracle(const Workload& workload, const Config& config,
                          const OracleLimits& limits, const FamilySet& skip)
{
    validate(config);
    validate(workload, config);

    const int n = config.n;
    const int delta = config.delta;
    const int theta = config.theta;
    const Count total =
        std::accumulate(workload.arrivals.begin(), workload.arrivals.end(), Count{0});
    if (n > limits.max_n)
        throw OracleRefused("exact oracle refuses n=" + std::to_string(n) + " (limit " +
                            std::to_string(limits.max_n) + ")");
    if (total > limits.max_total_participants)
        throw OracleRefused("exact oracle refuses " + std::to_string(total) +
                            " participants (limit " +
                            std::to_string(limits.max_total_participants) + ")");

    const auto started = std::chrono::steady_clock::now();
    auto check_budget = [&] {
        if (std::chrono::steady_clock::now() - started > limits.time_budget)
            throw OracleRefused("exact oracle exceeded its time budget");
    };

    const auto floor = mandatory_load(workload, config);
    const bool check_eq7 = !skip.contains(Family::eq7);
    const bool check_eq8 = !skip.contains(Family::eq8);

    std::vector<std::vector<int>> sets;
    std::vector<int> scratch;
    request_sets(1, n - delta, delta, scratch, sets);

    std::optional<Candidate> best;
    std::size_t evaluated = 0;

    for (const auto& requests : sets) {
        check_budget();

        // Allocations for arrival i may use requests up to min(i + theta - delta, n - delta).
        StateMap xs{{Vec(static_cast<std::size_t>(n), 0), Vec{}}};
        for (int i = 1; i <= n && !xs.empty(); ++i) {
            std::vector<int> cols;
            for (int j : requests)
                if (j <= std::min(i + theta - delta, n - delta)) cols.push_back(j);
            const Count a = workload.arrival(i);
            if (cols.empty() && a > 0) {
                xs.clear();
                break;
            }
            xs = extend(xs, n, cols, a, a);
        }
        if (xs.empty()) continue;

        // De-allocations for departure i may use requests from max(i - delta, 1) on.
        StateMap ys{{Vec(static_cast<std::size_t>(n), 0), Vec{}}};
        for (int i = 1; i <= n; ++i) {
            std::vector<int> cols;
            for (int j : requests)
                if (j >= std::max(i - delta, 1)) cols.push_back(j);
            ys = extend(ys, n, cols, 0, cols.empty() ? 0 : workload.departure(i));
        }

        for (const auto& [col_x, x] : xs) {
            for (const auto& [col_y, y] : ys) {
                if (++evaluated % 4096 == 0) check_budget();

                Count cost = 0;
                Count net = 0;
                Vec prefix(static_cast<std::size_t>(n) + 1, 0);
                bool ok = true;
                for (int j = 1; j <= n; ++j) {
                    const auto k = static_cast<std::size_t>(j - 1);
                    net += col_x[k] - col_y[k];
                    prefix[k + 1] = net;
                    if (check_eq7 && net < 0) {
                        ok = false;
                        break;
                    }
                    if (j <= n - delta) cost += (col_x[k] - col_y[k]) * (n - j - delta);
                }
                if (!ok) continue;
                if (check_eq8)
                    for (int j = delta + 1; j <= n && ok; ++j)
                        ok = prefix[static_cast<std::size_t>(j - delta)] >=
                             floor[static_cast<std::size_t>(j - 1)];
                if (!ok) continue;

                Candidate cand{cost, x, y};
                if (!better(cand, best)) continue;

                SolutionMatrices m(n);
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j) {
                        const auto k = static_cast<std::size_t>((i - 1) * n + (j - 1));
                        m.x(i, j) = x[k];
                        m.y(i, j) = y[k];
                    }
                for (int j = 1; j <= n; ++j) {
                    bool used = false;
                    for (int i = 1; i <= n && !used; ++i) used = m.x(i, j) > 0 || m.y(i, j) > 0;
                    m.r(j) = used ? 1 : 0;
                }
                if (!validate_solution(m, workload, config, skip).empty())
                    throw std::logic_error("exact oracle produced a candidate that fails validation");
                best = std::move(cand);
            }
        }
    }

    if (!best) throw InfeasibleError("no assignment satisfies the model constraints");

    OracleResult result{SolutionMatrices(n), best->cost};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const auto k = static_cast<std::size_t>((i - 1) * n + (j - 1));
            result.solution.x(i, j) = best->x[k];
            result.solution.y(i, j) = best->y[k];
            if (best->x[k] > 0 || best->y[k] > 0) result.solution.r(j) = 1;
        }
    return result;
}

}  // namespace confscale
