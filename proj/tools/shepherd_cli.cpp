// Command-line front end: plan, simulate, batch.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shepherd/commands.hpp"
#include "shepherd/io.hpp"

namespace {

using namespace shepherd;

constexpr const char* kPaperGrid = "10,20,30,40,50;0.0006,0.0008,0.001,0.0012,0.0014";

struct Common {
    std::string config_path;
    std::vector<std::string> overrides;
    std::optional<std::uint64_t> seed;
    std::string out_dir{"."};

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "key=value configuration file (defaults apply otherwise)");
        cmd->add_option("--set", overrides, "override a configuration key, e.g. --set N=30")->take_all();
        cmd->add_option("--seed", seed, "random seed");
        cmd->add_option("--out", out_dir, "output directory");
    }

    ScenarioConfig resolve() const {
        ScenarioConfig c = config_path.empty() ? ScenarioConfig{} : load_config(config_path);
        for (const std::string& kv : overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw UsageError("override '" + kv + "' is not key=value");
            apply_setting(c, kv.substr(0, eq), kv.substr(eq + 1));
        }
        if (seed) c.seed = *seed;
        try {
            c.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return c;
    }
};

Strategy strategy_or_throw(const std::string& name) {
    if (auto s = parse_strategy(name)) return *s;
    throw UsageError("unknown strategy '" + name + "' (reverse, exchange, jump)");
}

Method method_or_throw(const std::string& name) {
    if (auto m = Method::parse(name)) return *m;
    throw UsageError("unknown method '" + name + "' (fat, proposed:reverse, proposed:exchange, proposed:jump)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sheepdog guidance simulator with TSP-planned sheep tours"};
    app.require_subcommand(1);

    Common plan_opts, sim_opts, batch_opts;
    std::string strategy = "reverse", method = "proposed:reverse", grid = kPaperGrid, methods;
    std::size_t plan_iters = 10000, sim_iters = 10000, batch_iters = 10000, trials = 100;
    unsigned threads = 0;

    CLI::App* plan = app.add_subcommand("plan", "place, warm up and optimise a sheep tour");
    plan_opts.attach(plan);
    plan->add_option("--strategy", strategy, "reverse | exchange | jump");
    plan->add_option("--iterations", plan_iters, "local-search mutations")->check(CLI::PositiveNumber);

    CLI::App* sim = app.add_subcommand("simulate", "run one guidance episode");
    sim_opts.attach(sim);
    sim->add_option("--method", method, "fat | proposed:reverse | proposed:exchange | proposed:jump");
    sim->add_option("--iterations", sim_iters, "local-search mutations for tour planning")
        ->check(CLI::PositiveNumber);

    CLI::App* batch = app.add_subcommand("batch", "Monte-Carlo comparison over an (N, rho) grid");
    batch_opts.attach(batch);
    batch->add_option("--grid", grid, "\"N1,N2,...;rho1,rho2,...\"");
    batch->add_option("--trials", trials, "trials per cell")->check(CLI::PositiveNumber);
    batch->add_option("--method", methods, "comma-separated methods (default: all four)");
    batch->add_option("--iterations", batch_iters, "local-search mutations")->check(CLI::PositiveNumber);
    batch->add_option("--threads", threads, "worker threads, 0 = all cores");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*plan) {
            PlanCommand cmd{plan_opts.resolve(), strategy_or_throw(strategy), plan_iters, plan_opts.out_dir};
            const PlanResult r = run_plan_command(cmd);
            std::cout << "initial cost " << format_number(r.initial_cost) << ", final cost "
                      << format_number(r.rls.best_cost) << '\n';
        } else if (*sim) {
            SimulateCommand cmd{sim_opts.resolve(), method_or_throw(method), sim_iters, sim_opts.out_dir};
            const RunRecord r = run_simulate_command(cmd);
            std::cout << cmd.method.name() << ": " << (r.success ? "success" : "failure") << " at k = " << r.k_end
                      << ", J = " << format_number(r.total_distance) << '\n';
        } else if (*batch) {
            BatchCommand cmd{batch_opts.resolve(), {}, batch_opts.out_dir};
            cmd.options.grid = parse_grid(grid);
            cmd.options.trials = trials;
            cmd.options.iterations = batch_iters;
            cmd.options.threads = threads;
            cmd.options.base_seed = cmd.config.seed;
            if (!methods.empty()) {
                cmd.options.methods.clear();
                std::size_t start = 0;
                while (start <= methods.size()) {
                    const auto comma = methods.find(',', start);
                    cmd.options.methods.push_back(method_or_throw(methods.substr(start, comma - start)));
                    if (comma == std::string::npos) break;
                    start = comma + 1;
                }
            }
            const BatchResult r = run_batch_command(cmd);
            for (const CellSummary& s : r.summaries) {
                std::cout << "N=" << s.num_sheep << " rho=" << format_number(s.density) << ' ' << s.method.name()
                          << ": success " << format_number(s.success_rate) << ", mean J (successes) "
                          << format_number(s.mean_distance_successes) << '\n';
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
