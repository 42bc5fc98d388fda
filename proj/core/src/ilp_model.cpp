#include <numeric>
#include <string>

#include "confscale/ilp.hpp"
#include "confscale/workload.hpp"

namespace confscale {

std::string to_string(Family family)
{
    return "EQ" + std::to_string(static_cast<int>(family));
}

std::size_t IlpModel::x_var(int i, int j) const
{
    const auto n = static_cast<std::size_t>(config.n);
    return static_cast<std::size_t>(i - 1) * n + static_cast<std::size_t>(j - 1);
}

std::size_t IlpModel::y_var(int i, int j) const
{
    const auto n = static_cast<std::size_t>(config.n);
    return n * n + x_var(i, j);
}

std::size_t IlpModel::r_var(int j) const
{
    const auto n = static_cast<std::size_t>(config.n);
    return 2 * n * n + static_cast<std::size_t>(j - 1);
}

std::optional<std::size_t> IlpModel::find(std::string_view name) const
{
    // x_<i>_<j>, y_<i>_<j>, r_<j>
    auto parse_index = [](std::string_view s) -> std::optional<int> {
        if (s.empty() || s.size() > 9) return std::nullopt;
        int v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') return std::nullopt;
            v = v * 10 + (c - '0');
        }
        if (s.front() == '0') return std::nullopt;
        return v;
    };
    const int n = config.n;
    if (name.size() < 3 || name[1] != '_') return std::nullopt;
    const char kind = name[0];
    const auto rest = name.substr(2);
    if (kind == 'r') {
        const auto j = parse_index(rest);
        if (!j || *j < 1 || *j > n) return std::nullopt;
        return r_var(*j);
    }
    if (kind != 'x' && kind != 'y') return std::nullopt;
    const auto sep = rest.find('_');
    if (sep == std::string_view::npos) return std::nullopt;
    const auto i = parse_index(rest.substr(0, sep));
    const auto j = parse_index(rest.substr(sep + 1));
    if (!i || !j || *i < 1 || *i > n || *j < 1 || *j > n) return std::nullopt;
    return kind == 'x' ? x_var(*i, *j) : y_var(*i, *j);
}

std::size_t IlpModel::count(Family family) const
{
    std::size_t c = 0;
    for (const auto& row : constraints)
        if (row.family == family) ++c;
    return c;
}

Count effective_big_m(const Workload& workload, std::optional<Count> requested)
{
    if (requested) return *requested;
    const Count total =
        std::accumulate(workload.arrivals.begin(), workload.arrivals.end(), Count{0});
    return std::min(kDefaultBigM, std::max<Count>(total, 1));
}

IlpModel build_model(const Workload& workload, const Config& config, std::optional<Count> big_m)
{
    validate(config);
    validate(workload, config);

    const Count total =
        std::accumulate(workload.arrivals.begin(), workload.arrivals.end(), Count{0});
    const Count m_value = effective_big_m(workload, big_m);
    if (m_value < 1 || m_value < total)
        throw ConfigError("big-M " + std::to_string(m_value) +
                          " is smaller than the total arrivals " + std::to_string(total));

    const int n = config.n;
    const int delta = config.delta;
    const int theta = config.theta;

    IlpModel model;
    model.config = config;
    model.big_m = m_value;

    const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    model.variables.reserve(2 * nn + static_cast<std::size_t>(n));
    for (char kind : {'x', 'y'})
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                model.variables.push_back(
                    {std::string(1, kind) + "_" + std::to_string(i) + "_" + std::to_string(j),
                     VarKind::integer});
    for (int j = 1; j <= n; ++j)
        model.variables.push_back({"r_" + std::to_string(j), VarKind::binary});

    for (int sign : {1, -1})
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n - delta; ++j) {
                const Count w = n - j - delta;
                if (w == 0) continue;
                model.objective.push_back(
                    {sign > 0 ? model.x_var(i, j) : model.y_var(i, j), sign * w});
            }

    auto& rows = model.constraints;
    auto add = [&rows](std::string name, Family family, Sense sense, Count rhs) -> Constraint& {
        rows.push_back({std::move(name), family, {}, sense, rhs});
        return rows.back();
    };
    const auto si = [](int v) { return std::to_string(v); };

    // EQ2: arrivals at i are covered by requests sent no later than i + theta - delta.
    for (int i = 1; i <= n - theta; ++i) {
        auto& c = add("EQ2_i" + si(i), Family::eq2, Sense::greater_equal, workload.arrival(i));
        for (int j = 1; j <= i + theta - delta; ++j) c.terms.push_back({model.x_var(i, j), 1});
    }
    // EQ3: late arrivals are covered by any effective request.
    for (int i = n - theta + 1; i <= n; ++i) {
        auto& c = add("EQ3_i" + si(i), Family::eq3, Sense::greater_equal, workload.arrival(i));
        for (int j = 1; j <= n - delta; ++j) c.terms.push_back({model.x_var(i, j), 1});
    }
    // EQ4: de-allocations for early departures.
    for (int i = 1; i <= delta; ++i) {
        auto& c = add("EQ4_i" + si(i), Family::eq4, Sense::less_equal, workload.departure(i));
        for (int j = 1; j <= n - delta; ++j) c.terms.push_back({model.y_var(i, j), 1});
    }
    // EQ5: de-allocations requested from i - delta onwards.
    for (int i = delta + 1; i <= n; ++i) {
        auto& c = add("EQ5_i" + si(i), Family::eq5, Sense::less_equal, workload.departure(i));
        for (int j = i - delta; j <= n - delta; ++j) c.terms.push_back({model.y_var(i, j), 1});
    }
    // EQ6: no de-allocation requested before i - delta.
    for (int i = delta + 2; i <= n; ++i) {
        auto& c = add("EQ6_i" + si(i), Family::eq6, Sense::equal, 0);
        for (int j = 1; j <= i - delta - 1; ++j) c.terms.push_back({model.y_var(i, j), 1});
    }
    // EQ7: cumulative allocations dominate cumulative de-allocations.
    for (int j = 1; j <= n; ++j) {
        auto& c = add("EQ7_j" + si(j), Family::eq7, Sense::greater_equal, 0);
        for (int i = 1; i <= n; ++i)
            for (int t = 1; t <= j; ++t) c.terms.push_back({model.x_var(i, t), 1});
        for (int i = 1; i <= n; ++i)
            for (int t = 1; t <= j; ++t) c.terms.push_back({model.y_var(i, t), -1});
    }
    // EQ8: active capacity covers the mandatory load.
    const auto floor = mandatory_load(workload, config);
    for (int j = delta + 1; j <= n; ++j) {
        auto& c = add("EQ8_j" + si(j), Family::eq8, Sense::greater_equal,
                      floor[static_cast<std::size_t>(j - 1)]);
        for (int i = 1; i <= n; ++i)
            for (int t = 1; t <= j - delta; ++t) c.terms.push_back({model.x_var(i, t), 1});
        for (int i = 1; i <= n; ++i)
            for (int t = 1; t <= j - delta; ++t) c.terms.push_back({model.y_var(i, t), -1});
    }
    // EQ9: at most one request in any delta-wide window.
    for (int i = 1; i <= n - delta; ++i) {
        auto& c = add("EQ9_i" + si(i), Family::eq9, Sense::less_equal, 1);
        for (int j = i; j <= i + delta - 1; ++j) c.terms.push_back({model.r_var(j), 1});
    }
    // EQ10 / EQ11: any allocation or de-allocation at j needs a request at j.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            auto& c = add("EQ10_i" + si(i) + "_j" + si(j), Family::eq10, Sense::less_equal, 0);
            c.terms = {{model.x_var(i, j), 1}, {model.r_var(j), -m_value}};
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            auto& c = add("EQ11_i" + si(i) + "_j" + si(j), Family::eq11, Sense::less_equal, 0);
            c.terms = {{model.y_var(i, j), 1}, {model.r_var(j), -m_value}};
        }
    // EQ12: quiet tail.
    for (int j = n - delta + 1; j <= n; ++j) {
        auto& c = add("EQ12_j" + si(j), Family::eq12, Sense::equal, 0);
        c.terms.push_back({model.r_var(j), 1});
    }
    return model;
}

}  // namespace confscale
