#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "confscale/types.hpp"

namespace confscale {

/// Earmarked allocation matrices. x(i, j): participants arriving at slot i whose
/// place was requested at slot j; y(i, j): places freed for departures at slot i by
/// the request at slot j; r(j): whether a request is sent at slot j. Indices 1-based.
class SolutionMatrices {
public:
    SolutionMatrices() = default;
    explicit SolutionMatrices(int n)
        : n_(n),
          x_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0),
          y_(x_.size(), 0),
          r_(static_cast<std::size_t>(n), 0)
    {
    }

    int n() const { return n_; }

    Count& x(int i, int j) { return x_[index(i, j)]; }
    Count x(int i, int j) const { return x_[index(i, j)]; }
    Count& y(int i, int j) { return y_[index(i, j)]; }
    Count y(int i, int j) const { return y_[index(i, j)]; }
    Count& r(int j) { return r_[static_cast<std::size_t>(j - 1)]; }
    Count r(int j) const { return r_[static_cast<std::size_t>(j - 1)]; }

    /// Row-major views, in the order used for lexicographic tie-breaking.
    const std::vector<Count>& x_data() const { return x_; }
    const std::vector<Count>& y_data() const { return y_; }
    const std::vector<Count>& r_data() const { return r_; }

    friend bool operator==(const SolutionMatrices&, const SolutionMatrices&) = default;
    friend auto operator<=>(const SolutionMatrices& a, const SolutionMatrices& b)
    {
        if (auto c = a.x_ <=> b.x_; c != 0) return c;
        if (auto c = a.y_ <=> b.y_; c != 0) return c;
        return a.r_ <=> b.r_;
    }

private:
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j - 1);
    }

    int n_ = 0;
    std::vector<Count> x_;
    std::vector<Count> y_;
    std::vector<Count> r_;
};

/// Constraint families of the scaling ILP.
enum class Family { eq2 = 2, eq3, eq4, eq5, eq6, eq7, eq8, eq9, eq10, eq11, eq12 };

std::string to_string(Family family);  ///< "EQ2" .. "EQ12"

using FamilySet = std::set<Family>;

enum class VarKind { integer, binary };

struct Variable {
    std::string name;
    VarKind kind = VarKind::integer;
};

struct Term {
    std::size_t var = 0;
    Count coef = 0;
};

enum class Sense { less_equal, greater_equal, equal };

struct Constraint {
    std::string name;
    Family family = Family::eq2;
    std::vector<Term> terms;
    Sense sense = Sense::greater_equal;
    Count rhs = 0;
};

/// Big-M value used when none is requested explicitly.
inline constexpr Count kDefaultBigM = 1'000'000;

/// Variables are laid out as X (row-major), Y (row-major), R.
struct IlpModel {
    Config config;
    Count big_m = kDefaultBigM;
    std::vector<Variable> variables;
    std::vector<Constraint> constraints;
    std::vector<Term> objective;

    std::size_t x_var(int i, int j) const;
    std::size_t y_var(int i, int j) const;
    std::size_t r_var(int j) const;
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t count(Family family) const;
};

/// Big-M actually used: the requested value, or kDefaultBigM lowered to
/// max(total arrivals, 1) when no value is requested.
Count effective_big_m(const Workload& workload, std::optional<Count> requested);

/// Transcribes the objective and every constraint family with its exact index range.
/// Throws ConfigError when `big_m` is below the total arrivals.
IlpModel build_model(const Workload& workload, const Config& config,
                     std::optional<Count> big_m = std::nullopt);

/// CPLEX-LP text: Minimize / Subject To / Bounds / General / Binary / End.
std::string export_lp(const IlpModel& model);
void export_lp(std::ostream& out, const IlpModel& model);

/// Reads `<name> <value>` lines (`#` starts a comment). Unlisted variables are 0;
/// values within 1e-6 of an integer are rounded. Throws ParseError on unknown names,
/// duplicates, fractional or negative values and binaries outside {0, 1}.
SolutionMatrices parse_solution(std::string_view text, const IlpModel& model);

/// Solution assignment in the same `<name> <value>` form, nonzero entries only.
std::string format_solution(const SolutionMatrices& m);

struct ModelViolation {
    std::string tag;  ///< EQ2..EQ12, or DOMAIN for negative / non-binary entries
    int i = 0;        ///< row (or the single index for one-index families)
    std::optional<int> j;
    std::string detail;
};

/// Evaluates every constraint exactly in integer arithmetic; empty iff feasible.
/// `skip` omits whole families, e.g. {Family::eq8} for the implied-floor check.
/// EQ10/EQ11 rows are checked logically (an entry > 0 needs r_j = 1), independent of M.
std::vector<ModelViolation> validate_solution(const SolutionMatrices& m, const Workload& workload,
                                              const Config& config, const FamilySet& skip = {});

void write_violations(std::ostream& out, const std::vector<ModelViolation>& violations);

/// sum_i sum_{j <= n - delta} (x_ij - y_ij) * (n - j - delta).
Count objective_value(const SolutionMatrices& m, const Config& config);

/// Column net sums s_j = sum_i (x_ij - y_ij). Accepts any matrices.
Schedule matrices_to_schedule(const SolutionMatrices& m, const Config& config);

/// matrices_to_schedule for a validated solution; throws std::logic_error if the result
/// breaks schedule invariants, which means the solution was not actually feasible.
Schedule schedule_from_solution(const SolutionMatrices& m, const Config& config);

}  // namespace confscale
