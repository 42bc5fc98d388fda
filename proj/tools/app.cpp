#include "app.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "confscale/compare.hpp"
#include "confscale/ilp.hpp"
#include "confscale/io.hpp"
#include "confscale/schedule.hpp"
#include "confscale/solvers.hpp"
#include "confscale/workload.hpp"

namespace confscale::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TimingFlags {
    std::optional<int> n;
    std::optional<int> delta;
    std::optional<int> theta;

    void add_to(CLI::App& cmd)
    {
        cmd.add_option("--n", n, "Horizon length in slots");
        cmd.add_option("--delta", delta, "Provisioning lag in slots");
        cmd.add_option("--theta", theta, "Acceptable join delay in slots");
    }

    /// Overrides delta/theta; n can only be confirmed since the arrays fix it.
    Config apply(Config c) const
    {
        if (n && *n != c.n)
            throw UsageError("--n " + std::to_string(*n) + " disagrees with the file's n=" +
                             std::to_string(c.n));
        if (delta) c.delta = *delta;
        if (theta) c.theta = *theta;
        validate(c);
        return c;
    }
};

struct ScenarioFlags {
    std::string scenario;
    std::optional<Count> amplitude;
    std::optional<double> plateau_fraction;
    TimingFlags timing;

    void add_to(CLI::App& cmd)
    {
        cmd.add_option("--scenario", scenario, "Preset: mmog or oppd");
        cmd.add_option("--amplitude", amplitude, "Max per-slot joins/leaves");
        cmd.add_option("--plateau-fraction", plateau_fraction, "Share of the horizon at constant size");
        timing.add_to(cmd);
    }

    Preset resolve() const
    {
        Preset p;
        if (!scenario.empty()) {
            p = scenario_preset(scenario);
        } else {
            if (!timing.n || !timing.delta || !timing.theta)
                throw UsageError("without --scenario, --n, --delta and --theta are required");
            p.params.name = "custom";
        }
        if (timing.n) p.config.n = *timing.n;
        if (timing.delta) p.config.delta = *timing.delta;
        if (timing.theta) p.config.theta = *timing.theta;
        if (amplitude) p.params.amplitude = *amplitude;
        if (plateau_fraction) p.params.plateau_fraction = *plateau_fraction;
        validate(p.config);
        validate(p.params);
        return p;
    }
};

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text)
{
    auto to_u64 = [&text](std::string_view s) {
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            throw UsageError("malformed seed range '" + text + "' (expected A..B)");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto v = to_u64(text);
        return {v, v};
    }
    const auto first = to_u64(std::string_view(text).substr(0, dots));
    const auto last = to_u64(std::string_view(text).substr(dots + 2));
    if (first > last) throw UsageError("empty seed range '" + text + "'");
    return {first, last};
}

std::vector<Algorithm> parse_algorithms(const std::string& text)
{
    std::vector<Algorithm> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(parse_algorithm(item));
    if (out.empty()) throw UsageError("no algorithm given");
    return out;
}

void emit(const std::string& path, std::string_view text, std::ostream& out)
{
    if (path.empty() || path == "-")
        out << text;
    else
        write_file(path, text);
}

void print_report(std::ostream& out, const CostReport& r)
{
    out << "resource_cost=" << r.resource_cost << '\n'
        << "qos_cost=" << r.qos_cost << '\n'
        << "max_capacity=" << r.max_capacity << '\n'
        << "num_requests=" << r.num_requests << '\n'
        << "feasible=" << (r.feasible ? "true" : "false") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Elastic scaling schedules for cloud conferencing", "confscale"};
    app.require_subcommand(1);
    int status = kOk;

    // generate
    auto* gen = app.add_subcommand("generate", "Write a synthetic workload file");
    ScenarioFlags gen_flags;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen_flags.add_to(*gen);
    gen->add_option("--seed", gen_seed, "Generator seed");
    gen->add_option("--out", gen_out, "Output path (stdout if omitted)");
    gen->callback([&] {
        auto preset = gen_flags.resolve();
        preset.params.seed = gen_seed;
        const auto w = generate_workload(preset.params, preset.config);
        emit(gen_out, format_workload(preset.config, w), out);
    });

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Compute a schedule for a workload file");
    std::string solve_in, solve_alg = "ads", solve_out;
    TimingFlags solve_timing;
    solve_cmd->add_option("workload", solve_in, "Workload file")->required();
    solve_cmd->add_option("--algorithm", solve_alg, "ads, greedy or oracle");
    solve_cmd->add_option("--out", solve_out, "Schedule output path (stdout if omitted)");
    solve_timing.add_to(*solve_cmd);
    solve_cmd->callback([&] {
        auto [file_config, workload] = parse_workload(read_file(solve_in));
        const Config config = solve_timing.apply(file_config);
        const auto algorithm = parse_algorithm(solve_alg);
        const auto outcome = solve(algorithm, workload, config);
        emit(solve_out, format_schedule(config, outcome.schedule), out);
        const auto report = evaluate(workload, outcome.schedule, config);
        print_report(out, report);
        if (outcome.oracle) out << "objective=" << outcome.oracle->cost << '\n';
        if (!report.feasible) {
            write_report(out, check_feasibility(workload, outcome.schedule, config));
            status = kInfeasible;
        }
    });

    // evaluate
    auto* eval_cmd = app.add_subcommand("evaluate", "Cost and feasibility of a schedule file");
    std::string eval_workload, eval_schedule;
    TimingFlags eval_timing;
    eval_cmd->add_option("workload", eval_workload, "Workload file")->required();
    eval_cmd->add_option("schedule", eval_schedule, "Schedule file")->required();
    eval_timing.add_to(*eval_cmd);
    eval_cmd->callback([&] {
        auto [file_config, workload] = parse_workload(read_file(eval_workload));
        const Config config = eval_timing.apply(file_config);
        const auto sched = parse_schedule(read_file(eval_schedule));
        if (sched.n != config.n || sched.delta != config.delta)
            throw UsageError("schedule file n/delta do not match the workload configuration");
        const auto report = evaluate(workload, sched.schedule, config);
        print_report(out, report);
        write_report(out, check_feasibility(workload, sched.schedule, config));
        if (!report.feasible) status = kInfeasible;
    });

    // validate
    auto* val_cmd = app.add_subcommand("validate", "Check a solver's variable assignment");
    std::string val_workload, val_solution;
    std::optional<Count> val_big_m;
    val_cmd->add_option("workload", val_workload, "Workload file")->required();
    val_cmd->add_option("solution", val_solution, "Lines of `<name> <value>`")->required();
    val_cmd->add_option("--big-m", val_big_m, "Big-M constant");
    val_cmd->callback([&] {
        const auto [config, workload] = parse_workload(read_file(val_workload));
        const auto model = build_model(workload, config, val_big_m);
        const auto m = parse_solution(read_file(val_solution), model);
        const auto violations = validate_solution(m, workload, config);
        out << "objective=" << objective_value(m, config) << '\n';
        out << "feasible=" << (violations.empty() ? "true" : "false") << '\n';
        write_violations(out, violations);
        if (!violations.empty()) status = kInfeasible;
    });

    // export-lp
    auto* lp_cmd = app.add_subcommand("export-lp", "Write the ILP in CPLEX-LP format");
    std::string lp_workload, lp_out;
    std::optional<Count> lp_big_m;
    lp_cmd->add_option("workload", lp_workload, "Workload file")->required();
    lp_cmd->add_option("--big-m", lp_big_m,
                       "Big-M constant (default 1000000, lowered to the total arrivals)");
    lp_cmd->add_option("--out", lp_out, "Output path (stdout if omitted)");
    lp_cmd->callback([&] {
        const auto [config, workload] = parse_workload(read_file(lp_workload));
        emit(lp_out, export_lp(build_model(workload, config, lp_big_m)), out);
    });

    // compare
    auto* cmp = app.add_subcommand("compare", "Multi-seed algorithm comparison as CSV");
    ScenarioFlags cmp_flags;
    std::string cmp_seeds = "0..0", cmp_algorithms = "ads,greedy", cmp_out, cmp_workload;
    std::optional<std::uint64_t> cmp_seed;
    cmp_flags.add_to(*cmp);
    cmp->add_option("--seeds", cmp_seeds, "Inclusive seed range A..B");
    cmp->add_option("--seed", cmp_seed, "Single seed");
    cmp->add_option("--algorithm", cmp_algorithms, "Comma-separated subset of ads,greedy,oracle");
    cmp->add_option("--workload", cmp_workload, "Use this workload file for every seed");
    cmp->add_option("--out", cmp_out, "CSV output path (stdout if omitted)");
    cmp->callback([&] {
        CompareSpec spec;
        if (!cmp_workload.empty()) {
            auto [config, workload] = parse_workload(read_file(cmp_workload));
            spec.config = cmp_flags.timing.apply(config);
            spec.fixed_workload = std::move(workload);
            spec.scenario.name = "file";
        } else {
            const auto preset = cmp_flags.resolve();
            spec.scenario = preset.params;
            spec.config = preset.config;
        }
        std::tie(spec.first_seed, spec.last_seed) =
            cmp_seed ? std::pair{*cmp_seed, *cmp_seed} : parse_seed_range(cmp_seeds);
        spec.algorithms = parse_algorithms(cmp_algorithms);
        const auto result = run_compare(spec);
        for (const auto& note : result.notes) err << "note: " << note << '\n';
        emit(cmp_out, to_csv(result), out);
        for (const auto& s : result.summary)
            if (s.infeasible > 0) status = kInfeasible;
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const OracleRefused& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return status;
}

}  // namespace confscale::cli
