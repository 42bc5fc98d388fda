#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "confscale/ilp.hpp"
#include "confscale/schedule.hpp"
#include "confscale/workload.hpp"

namespace confscale {

namespace {

constexpr double kIntegralityTolerance = 1e-6;

std::string line_ref(std::size_t line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

SolutionMatrices parse_solution(std::string_view text, const IlpModel& model)
{
    const int n = model.config.n;
    SolutionMatrices m(n);
    std::vector<bool> seen(model.variables.size(), false);

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream fields(raw);
        std::string name, value_text, extra;
        if (!(fields >> name)) continue;
        if (!(fields >> value_text))
            throw ParseError(line_ref(line_no) + "missing value for '" + name + "'");
        if (fields >> extra) throw ParseError(line_ref(line_no) + "trailing text '" + extra + "'");

        const auto var = model.find(name);
        if (!var) throw ParseError(line_ref(line_no) + "unknown variable '" + name + "'");
        if (seen[*var]) throw ParseError(line_ref(line_no) + "duplicate variable '" + name + "'");
        seen[*var] = true;

        char* end = nullptr;
        const double value = std::strtod(value_text.c_str(), &end);
        if (end == value_text.c_str() || *end != '\0' || !std::isfinite(value))
            throw ParseError(line_ref(line_no) + "malformed value '" + value_text + "'");
        const double rounded = std::round(value);
        if (std::fabs(value - rounded) > kIntegralityTolerance)
            throw ParseError(line_ref(line_no) + "non-integral value " + value_text + " for '" +
                             name + "'");
        const auto v = static_cast<Count>(rounded);
        if (v < 0) throw ParseError(line_ref(line_no) + "negative value for '" + name + "'");

        const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
        if (*var < nn) {
            const int i = static_cast<int>(*var / static_cast<std::size_t>(n)) + 1;
            const int j = static_cast<int>(*var % static_cast<std::size_t>(n)) + 1;
            m.x(i, j) = v;
        } else if (*var < 2 * nn) {
            const auto k = *var - nn;
            const int i = static_cast<int>(k / static_cast<std::size_t>(n)) + 1;
            const int j = static_cast<int>(k % static_cast<std::size_t>(n)) + 1;
            m.y(i, j) = v;
        } else {
            if (v > 1)
                throw ParseError(line_ref(line_no) + "binary '" + name + "' must be 0 or 1");
            m.r(static_cast<int>(*var - 2 * nn) + 1) = v;
        }
    }
    return m;
}

std::string format_solution(const SolutionMatrices& m)
{
    std::ostringstream out;
    const int n = m.n();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (m.x(i, j) != 0) out << "x_" << i << '_' << j << ' ' << m.x(i, j) << '\n';
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (m.y(i, j) != 0) out << "y_" << i << '_' << j << ' ' << m.y(i, j) << '\n';
    for (int j = 1; j <= n; ++j)
        if (m.r(j) != 0) out << "r_" << j << ' ' << m.r(j) << '\n';
    return out.str();
}

std::vector<ModelViolation> validate_solution(const SolutionMatrices& m, const Workload& workload,
                                              const Config& config, const FamilySet& skip)
{
    std::vector<ModelViolation> out;
    const int n = config.n;
    if (m.n() != n || workload.horizon() != n) {
        out.push_back({"DOMAIN", 0, std::nullopt, "dimension mismatch with n=" + std::to_string(n)});
        return out;
    }
    const int delta = config.delta;
    const int theta = config.theta;
    const auto on = [&skip](Family f) { return !skip.contains(f); };
    const auto num = [](Count v) { return std::to_string(v); };

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (m.x(i, j) < 0) out.push_back({"DOMAIN", i, j, "negative x"});
            if (m.y(i, j) < 0) out.push_back({"DOMAIN", i, j, "negative y"});
        }
    for (int j = 1; j <= n; ++j)
        if (m.r(j) != 0 && m.r(j) != 1) out.push_back({"DOMAIN", j, std::nullopt, "r not binary"});

    auto x_row = [&](int i, int from, int to) {
        Count s = 0;
        for (int j = std::max(from, 1); j <= to; ++j) s += m.x(i, j);
        return s;
    };
    auto y_row = [&](int i, int from, int to) {
        Count s = 0;
        for (int j = std::max(from, 1); j <= to; ++j) s += m.y(i, j);
        return s;
    };

    if (on(Family::eq2))
        for (int i = 1; i <= n - theta; ++i)
            if (const Count s = x_row(i, 1, i + theta - delta); s < workload.arrival(i))
                out.push_back({"EQ2", i, std::nullopt,
                               "allocated " + num(s) + " < arrivals " + num(workload.arrival(i))});
    if (on(Family::eq3))
        for (int i = std::max(n - theta + 1, 1); i <= n; ++i)
            if (const Count s = x_row(i, 1, n - delta); s < workload.arrival(i))
                out.push_back({"EQ3", i, std::nullopt,
                               "allocated " + num(s) + " < arrivals " + num(workload.arrival(i))});
    if (on(Family::eq4))
        for (int i = 1; i <= delta && i <= n; ++i)
            if (const Count s = y_row(i, 1, n - delta); s > workload.departure(i))
                out.push_back({"EQ4", i, std::nullopt,
                               "de-allocated " + num(s) + " > departures " +
                                   num(workload.departure(i))});
    if (on(Family::eq5))
        for (int i = delta + 1; i <= n; ++i)
            if (const Count s = y_row(i, i - delta, n - delta); s > workload.departure(i))
                out.push_back({"EQ5", i, std::nullopt,
                               "de-allocated " + num(s) + " > departures " +
                                   num(workload.departure(i))});
    if (on(Family::eq6))
        for (int i = delta + 2; i <= n; ++i)
            if (const Count s = y_row(i, 1, i - delta - 1); s != 0)
                out.push_back({"EQ6", i, std::nullopt,
                               "de-allocated " + num(s) + " before slot " + num(i - delta)});

    std::vector<Count> col_x(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Count> col_y(col_x.size(), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            col_x[static_cast<std::size_t>(j)] += m.x(i, j);
            col_y[static_cast<std::size_t>(j)] += m.y(i, j);
        }
    std::vector<Count> net_prefix(col_x.size(), 0);  // net_prefix[j] = sum_{t<=j} (X_t - Y_t)
    for (int j = 1; j <= n; ++j)
        net_prefix[static_cast<std::size_t>(j)] =
            net_prefix[static_cast<std::size_t>(j - 1)] + col_x[static_cast<std::size_t>(j)] -
            col_y[static_cast<std::size_t>(j)];

    if (on(Family::eq7))
        for (int j = 1; j <= n; ++j)
            if (const Count s = net_prefix[static_cast<std::size_t>(j)]; s < 0)
                out.push_back({"EQ7", j, std::nullopt,
                               "cumulative de-allocation exceeds allocation by " + num(-s)});
    if (on(Family::eq8)) {
        const auto floor = mandatory_load(workload, config);
        for (int j = delta + 1; j <= n; ++j) {
            const Count s = net_prefix[static_cast<std::size_t>(j - delta)];
            const Count need = floor[static_cast<std::size_t>(j - 1)];
            if (s < need)
                out.push_back({"EQ8", j, std::nullopt,
                               "active capacity " + num(s) + " < mandatory load " + num(need)});
        }
    }
    if (on(Family::eq9))
        for (int i = 1; i <= n - delta; ++i) {
            Count s = 0;
            for (int j = i; j <= i + delta - 1; ++j) s += m.r(j);
            if (s > 1)
                out.push_back({"EQ9", i, std::nullopt,
                               num(s) + " requests within slots " + num(i) + ".." +
                                   num(i + delta - 1)});
        }
    if (on(Family::eq10))
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (m.x(i, j) > 0 && m.r(j) == 0)
                    out.push_back({"EQ10", i, j, "allocation without a request"});
    if (on(Family::eq11))
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (m.y(i, j) > 0 && m.r(j) == 0)
                    out.push_back({"EQ11", i, j, "de-allocation without a request"});
    if (on(Family::eq12))
        for (int j = std::max(n - delta + 1, 1); j <= n; ++j)
            if (m.r(j) != 0) out.push_back({"EQ12", j, std::nullopt, "request in the last delta slots"});
    return out;
}

void write_violations(std::ostream& out, const std::vector<ModelViolation>& violations)
{
    for (const auto& v : violations) {
        out << "VIOLATION " << v.tag << " i=" << v.i;
        if (v.j) out << " j=" << *v.j;
        out << " detail=" << v.detail << '\n';
    }
}

Count objective_value(const SolutionMatrices& m, const Config& config)
{
    const int n = config.n;
    Count total = 0;
    for (int i = 1; i <= m.n(); ++i)
        for (int j = 1; j <= n - config.delta && j <= m.n(); ++j)
            total += (m.x(i, j) - m.y(i, j)) * (n - j - config.delta);
    return total;
}

Schedule matrices_to_schedule(const SolutionMatrices& m, const Config& config)
{
    Schedule s{std::vector<Count>(static_cast<std::size_t>(config.n), 0)};
    for (int i = 1; i <= m.n(); ++i)
        for (int j = 1; j <= m.n() && j <= config.n; ++j) s.change(j) += m.x(i, j) - m.y(i, j);
    return s;
}

Schedule schedule_from_solution(const SolutionMatrices& m, const Config& config)
{
    auto s = matrices_to_schedule(m, config);
    const auto bad = shape_violations(s, config);
    if (!bad.empty())
        throw std::logic_error("solution yields an invalid schedule: " + to_string(bad.front().kind) +
                               " at slot " + std::to_string(bad.front().slot));
    try {
        (void)capacity_trajectory(s, config);
    } catch (const InfeasibleError& e) {
        throw std::logic_error(std::string("solution yields an invalid schedule: ") + e.what());
    }
    return s;
}

}  // namespace confscale
