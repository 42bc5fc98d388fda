#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "confscale/ilp.hpp"
#include "confscale/schedule.hpp"
#include "support/reference.hpp"

using namespace confscale;

namespace {

/// The hand-checked optimum for T1.
SolutionMatrices w1()
{
    SolutionMatrices m(8);
    m.x(1, 2) = 2;
    m.x(3, 4) = 1;
    m.y(5, 4) = 2;
    m.r(2) = 1;
    m.r(4) = 1;
    return m;
}

const char* kW1Text = "x_1_2 2\nx_3_4 1\ny_5_4 2\nr_2 1\nr_4 1\n";

bool has_tag(const std::vector<ModelViolation>& vs, const std::string& tag, int i,
             std::optional<int> j = std::nullopt)
{
    for (const auto& v : vs)
        if (v.tag == tag && v.i == i && (!j || v.j == j)) return true;
    return false;
}

std::size_t count_lines_in_section(const std::string& lp, const std::string& section)
{
    std::istringstream in(lp);
    std::string line;
    bool inside = false;
    std::size_t count = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != ' ') {
            inside = line == section;
            continue;
        }
        if (inside) ++count;
    }
    return count;
}

}  // namespace

TEST(BuildModel, CountsForSmallHorizon)
{
    const Workload w{{1, 0, 0, 0}, {0, 0, 0, 1}};
    const auto model = build_model(w, Config{4, 2, 3});
    EXPECT_EQ(model.variables.size(), 36u);
    EXPECT_EQ(model.constraints.size(), 51u);
    EXPECT_EQ(model.count(Family::eq2), 1u);
    EXPECT_EQ(model.count(Family::eq3), 3u);
    EXPECT_EQ(model.count(Family::eq4), 2u);
    EXPECT_EQ(model.count(Family::eq5), 2u);
    EXPECT_EQ(model.count(Family::eq6), 1u);
    EXPECT_EQ(model.count(Family::eq7), 4u);
    EXPECT_EQ(model.count(Family::eq8), 2u);
    EXPECT_EQ(model.count(Family::eq9), 2u);
    EXPECT_EQ(model.count(Family::eq10), 16u);
    EXPECT_EQ(model.count(Family::eq11), 16u);
    EXPECT_EQ(model.count(Family::eq12), 2u);
}

TEST(BuildModel, ObjectiveWeightsAndBigM)
{
    EXPECT_EQ(kDefaultBigM, 1000000);
    const auto model = build_model(reference::t1_workload(), reference::t1_config());
    EXPECT_EQ(model.big_m, 3);  // default lowered to the 3 arrivals
    for (const auto& t : model.objective) {
        const auto& name = model.variables[t.var].name;
        ASSERT_TRUE(name[0] == 'x' || name[0] == 'y') << name;
        const int j = std::stoi(name.substr(name.rfind('_') + 1));
        EXPECT_LE(j, 8 - 2);
        EXPECT_EQ(t.coef, (name[0] == 'x' ? 1 : -1) * (8 - j - 2));
    }
    EXPECT_EQ(build_model(reference::t1_workload(), reference::t1_config(), 1000000).big_m, 1000000);
    EXPECT_THROW(build_model(reference::t1_workload(), reference::t1_config(), 2), ConfigError);
}

TEST(BuildModel, DefaultBigMKeptForLargeWorkloads)
{
    Workload w{std::vector<Count>(4, 0), std::vector<Count>(4, 0)};
    w.arrivals[0] = 2'000'000;
    EXPECT_EQ(effective_big_m(w, std::nullopt), kDefaultBigM);
}

TEST(BuildModel, ConstraintsReferenceDeclaredVariables)
{
    const auto model = build_model(reference::t1_workload(), reference::t1_config());
    for (const auto& c : model.constraints) {
        ASSERT_FALSE(c.terms.empty()) << c.name;
        for (const auto& t : c.terms) EXPECT_LT(t.var, model.variables.size());
    }
}

TEST(ExportLp, SectionsAndDeterminism)
{
    const auto model = build_model(reference::t1_workload(), reference::t1_config());
    const auto lp = export_lp(model);
    EXPECT_EQ(lp, export_lp(build_model(reference::t1_workload(), reference::t1_config())));

    std::vector<std::string> order;
    std::istringstream in(lp);
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != ' ' && line[0] != '\\') order.push_back(line);
    EXPECT_EQ(order, (std::vector<std::string>{"Minimize", "Subject To", "Bounds", "General",
                                               "Binary", "End"}));
    EXPECT_EQ(count_lines_in_section(lp, "General"), 128u);
    EXPECT_EQ(count_lines_in_section(lp, "Binary"), 8u);
    EXPECT_NE(lp.find("Binary\n r_1\n r_2\n r_3\n r_4\n r_5\n r_6\n r_7\n r_8\nEnd\n"),
              std::string::npos);
    EXPECT_NE(lp.find(" EQ2_i1: "), std::string::npos);
    EXPECT_LT(lp.find(" EQ2_i1: "), lp.find(" EQ3_i6: "));
    EXPECT_LT(lp.find(" EQ11_i8_j8: "), lp.find(" EQ12_j7: "));
}

TEST(ExportLp, SmallHorizonObjective)
{
    // n=4, delta=2: weight 4 - j - 2 is 1 at j=1 and 0 at j=2, so only j=1 terms appear
    const auto lp = export_lp(build_model(Workload{{1, 0, 0, 0}, {0, 0, 0, 1}}, Config{4, 2, 3}));
    const auto obj = lp.substr(lp.find("obj:"), lp.find("Subject To") - lp.find("obj:"));
    EXPECT_NE(obj.find("1 x_1_1"), std::string::npos);
    EXPECT_NE(obj.find("- 1 y_4_1"), std::string::npos);
    EXPECT_EQ(obj.find("x_1_2"), std::string::npos);
}

TEST(ParseSolution, W1)
{
    const auto model = build_model(reference::t1_workload(), reference::t1_config());
    EXPECT_EQ(parse_solution(kW1Text, model), w1());
    EXPECT_EQ(parse_solution("# optimal\n\nx_1_2 2.0000000001\nx_3_4 1 # ok\ny_5_4 2\nr_2 1\nr_4 1e0\n",
                             model),
              w1());
    EXPECT_EQ(parse_solution("", model), SolutionMatrices(8));
}

TEST(ParseSolution, Errors)
{
    const auto model = build_model(reference::t1_workload(), reference::t1_config());
    EXPECT_THROW(parse_solution("r_2 0.4\n", model), ParseError);
    EXPECT_THROW(parse_solution("z_1_1 1\n", model), ParseError);
    EXPECT_THROW(parse_solution("x_9_1 1\n", model), ParseError);
    EXPECT_THROW(parse_solution("x_01_1 1\n", model), ParseError);
    EXPECT_THROW(parse_solution("r_2 2\n", model), ParseError);
    EXPECT_THROW(parse_solution("x_1_1 -1\n", model), ParseError);
    EXPECT_THROW(parse_solution("x_1_1 1\nx_1_1 1\n", model), ParseError);
    EXPECT_THROW(parse_solution("x_1_1\n", model), ParseError);
    EXPECT_THROW(parse_solution("x_1_1 abc\n", model), ParseError);
}

TEST(ParseSolution, RoundTripThroughText)
{
    const auto model = build_model(reference::t1_workload(), reference::t1_config());
    EXPECT_EQ(parse_solution(format_solution(w1()), model), w1());
}

TEST(ValidateSolution, W1IsFeasible)
{
    EXPECT_TRUE(validate_solution(w1(), reference::t1_workload(), reference::t1_config()).empty());
}

TEST(ValidateSolution, FlagsBrokenVariants)
{
    const auto w = reference::t1_workload();
    const auto cfg = reference::t1_config();

    auto uncovered = w1();
    uncovered.x(1, 2) = 0;
    EXPECT_TRUE(has_tag(validate_solution(uncovered, w, cfg), "EQ2", 1));

    auto unflagged = w1();
    unflagged.r(4) = 0;
    const auto vs = validate_solution(unflagged, w, cfg);
    EXPECT_TRUE(has_tag(vs, "EQ10", 3, 4));
    EXPECT_TRUE(has_tag(vs, "EQ11", 5, 4));

    auto early_release = w1();
    early_release.y(5, 4) = 0;
    early_release.y(5, 2) = 2;  // j = 2 < i - delta
    EXPECT_TRUE(has_tag(validate_solution(early_release, w, cfg), "EQ6", 5));

    auto over_release = w1();
    over_release.y(5, 4) = 3;
    EXPECT_TRUE(has_tag(validate_solution(over_release, w, cfg), "EQ5", 5));

    auto crowded = w1();
    crowded.r(3) = 1;
    EXPECT_TRUE(has_tag(validate_solution(crowded, w, cfg), "EQ9", 2));

    auto tail = w1();
    tail.r(8) = 1;
    EXPECT_TRUE(has_tag(validate_solution(tail, w, cfg), "EQ12", 8));

    auto late = w1();
    late.x(1, 2) = 0;
    late.x(1, 4) = 2;  // after the i + theta - delta = 2 deadline
    const auto late_vs = validate_solution(late, w, cfg);
    EXPECT_TRUE(has_tag(late_vs, "EQ2", 1));
    EXPECT_TRUE(has_tag(late_vs, "EQ8", 4));
    EXPECT_FALSE(has_tag(validate_solution(late, w, cfg, {Family::eq8}), "EQ8", 4));
}

TEST(ObjectiveValue, HandEvaluations)
{
    const auto cfg = reference::t1_config();
    EXPECT_EQ(objective_value(w1(), cfg), 6);
    EXPECT_EQ(objective_value(SolutionMatrices(8), cfg), 0);

    SolutionMatrices ads(8);  // T1 ADS schedule as matrices
    ads.x(1, 2) = 2;
    ads.x(3, 2) = 1;
    ads.y(5, 5) = 2;
    ads.r(2) = ads.r(5) = 1;
    EXPECT_EQ(objective_value(ads, cfg), 10);
    EXPECT_EQ(objective_value(ads, cfg), resource_cost(matrices_to_schedule(ads, cfg), cfg));
}

TEST(MatricesToSchedule, ColumnSums)
{
    const auto cfg = reference::t1_config();
    EXPECT_EQ(matrices_to_schedule(w1(), cfg), (Schedule{{0, 2, 0, -1, 0, 0, 0, 0}}));
    EXPECT_EQ(matrices_to_schedule(SolutionMatrices(8), cfg), Schedule{std::vector<Count>(8, 0)});
    EXPECT_EQ(resource_cost(matrices_to_schedule(w1(), cfg), cfg), 6);
    EXPECT_EQ(schedule_from_solution(w1(), cfg), matrices_to_schedule(w1(), cfg));

    auto broken = w1();
    broken.x(3, 3) = 1;  // nonzero net at slot 3, adjacent to slot 2
    EXPECT_THROW(schedule_from_solution(broken, cfg), std::logic_error);
}

TEST(MatricesToSchedule, CostFormEquivalenceOnArbitraryMatrices)
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 12)(rng);
        const int delta = std::uniform_int_distribution<int>(2, std::max(2, n - 1))(rng);
        const Config cfg{n, delta, std::min(n, delta + 1)};
        SolutionMatrices m(n);
        std::uniform_int_distribution<Count> v(0, 9);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                m.x(i, j) = v(rng);
                m.y(i, j) = v(rng);
            }
        EXPECT_EQ(objective_value(m, cfg), resource_cost(matrices_to_schedule(m, cfg), cfg));
    }
}
