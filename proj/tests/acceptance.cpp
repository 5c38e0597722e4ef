// Acceptance checks. One PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "shepherd/commands.hpp"
#include "shepherd/dog.hpp"
#include "shepherd/experiment.hpp"
#include "shepherd/flock.hpp"
#include "shepherd/guidance.hpp"
#include "shepherd/route.hpp"

using namespace shepherd;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(const char* id, bool ok, const std::string& detail) {
    std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

TourInstance square_instance(Rng& rng, std::size_t n) {
    auto coord = [&] { return 200.0 * rng.uniform() - 100.0; };
    TourInstance inst;
    inst.dog_start = {coord(), coord()};
    inst.goal = {coord(), coord()};
    for (std::size_t i = 0; i < n; ++i) inst.sheep_start.push_back({coord(), coord()});
    return inst;
}

TourInstance flock_instance(std::uint64_t seed, std::size_t n, double rho) {
    ScenarioConfig c;
    c.num_sheep = n;
    c.density = rho;
    c.seed = seed;
    return planning_instance(prepare_start(c), c.goal);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool same_tree(const fs::path& a, const fs::path& b) {
    std::vector<fs::path> names;
    for (const auto& e : fs::directory_iterator(a)) names.push_back(e.path().filename());
    if (names.empty()) return false;
    for (const auto& n : names)
        if (!fs::exists(b / n) || slurp(a / n) != slurp(b / n)) return false;
    return true;
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("shepherd_acceptance_" + name);
    fs::remove_all(dir);
    return dir;
}

double max_dev(Vec2 a, Vec2 b) { return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)); }

constexpr Strategy kStrategies[] = {Strategy::Reverse, Strategy::Exchange, Strategy::Jump};

// ---------------------------------------------------------------------------

void radius_table() {
    const std::size_t ns[] = {10, 20, 30, 40, 50};
    const double rhos[] = {0.0006, 0.0008, 0.0010, 0.0012, 0.0014};
    const double table[5][5] = {
        {72.84, 103.0, 126.2, 145.7, 162.9},
        {63.08, 89.21, 109.3, 126.2, 141.0},
        {56.42, 79.79, 97.72, 112.8, 126.2},
        {51.50, 72.84, 89.21, 103.0, 115.2},
        {47.68, 67.43, 82.59, 95.47, 106.6},
    };
    int bad = 0;
    std::string misses;
    for (int r = 0; r < 5; ++r) {
        for (int c = 0; c < 5; ++c) {
            const double got = placement_radius(ns[c], rhos[r]);
            if (std::abs(got - table[r][c]) > 0.05) {
                ++bad;
                misses += fmt(" [N=%zu rho=%g: %.3f vs %.2f]", ns[c], rhos[r], got, table[r][c]);
            }
        }
    }
    report("1 placement radius table", bad == 0, fmt("%d/25 within 0.05", 25 - bad) + misses);
}

void rls_vs_oracle(std::size_t n, int needed, const char* id) {
    std::string detail;
    bool ok = true;
    for (Strategy s : kStrategies) {
        Rng rng(600 + n * 10 + static_cast<int>(s));
        int hits = 0, below = 0;
        for (int rep = 0; rep < 100; ++rep) {
            const TourInstance inst = square_instance(rng, n);
            const double optimum = brute_force_tour(inst).second;
            const RlsResult r = rls_optimize(inst, {s, 10000, rng.next_u64()}, Tour::random(n, rng));
            const double cost = tour_cost(r.best_tour, inst);
            if (cost < optimum || r.best_cost < optimum) ++below;
            if (r.best_cost == optimum) ++hits;
        }
        ok = ok && hits >= needed && below == 0;
        detail += fmt(" %s %d/100 optimal, %d below;", std::string(to_string(s)).c_str(), hits, below);
    }
    report(id, ok, fmt("need >= %d/100 and none below:", needed) + detail);
}

void convergence() {
    std::string detail;
    bool ok = true;
    for (Strategy s : kStrategies) {
        int close = 0;
        bool monotone = true;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const TourInstance inst = flock_instance(seed, 20, 0.0012);
            const PlanResult p = plan_tour(inst, s, 10000, seed);
            const auto& tr = p.rls.cost_trace;
            monotone = monotone && std::is_sorted(tr.rbegin(), tr.rend()) && tr.front() <= p.initial_cost;
            if (tr[1999] <= 1.05 * tr[9999]) ++close;
        }
        ok = ok && monotone && close >= 80;
        detail += fmt(" %s %d/100 %s;", std::string(to_string(s)).c_str(), close, monotone ? "monotone" : "NOT monotone");
    }
    report("3 monotone convergence", ok, "iteration 2000 within 5% of 10000 in >= 80/100:" + detail);
}

void guidance_and_distance() {
    ScenarioConfig base;
    BatchOptions opt;
    opt.grid = {{10, 0.0012}, {20, 0.0012}};
    opt.trials = 20;
    opt.base_seed = 2024;
    const BatchResult res = run_batch(base, opt);

    bool ok4 = true;
    std::string detail4;
    double fat_all = 0, rev_all = 0, fat_succ = 0, rev_succ = 0;
    for (const CellSummary& s : res.summaries) {
        ok4 = ok4 && s.success_rate >= 0.9;
        detail4 += fmt(" N=%zu %s %zu/%zu;", s.num_sheep, s.method.name().c_str(), s.successes, s.trials);
        if (s.num_sheep == 20 && s.method == Method::fat()) fat_all = s.mean_distance_all, fat_succ = s.mean_distance_successes;
        if (s.num_sheep == 20 && s.method == Method::proposed(Strategy::Reverse))
            rev_all = s.mean_distance_all, rev_succ = s.mean_distance_successes;
    }
    report("4 guidance success", ok4, "need >= 90% each:" + detail4);
    report("5 distance advantage", rev_all < fat_all,
           fmt("N=20 mean J over all paired trials: reverse %.1f vs fat %.1f (successes only: %.1f vs %.1f)",
               rev_all, fat_all, rev_succ, fat_succ));
}

void improvement() {
    int good = 0;
    double mean_gain = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const PlanResult p = plan_tour(flock_instance(seed, 20, 0.0012), Strategy::Reverse, 10000, seed);
        const double gain = 1.0 - p.rls.best_cost / p.initial_cost;
        mean_gain += gain / 100.0;
        if (gain >= 0.5) ++good;
    }
    report("6 reverse improvement", good >= 90,
           fmt("%d/100 seeds improve >= 50%% (mean improvement %.1f%%)", good, 100.0 * mean_gain));
}

void property_suites() {
    // fuzzed mutations
    {
        Rng rng(31337);
        bool ok = true;
        for (Strategy s : kStrategies) {
            for (std::size_t n : {2, 3, 7, 20, 51}) {
                Tour t = Tour::random(n, rng);
                for (int i = 0; i < 20000; ++i) {
                    const Tour next = mutate(t, s, rng);
                    ok = ok && is_permutation_of_range(next.order()) && next != t;
                    t = next;
                }
            }
        }
        report("7a fuzzed mutations", ok, "1e5 mutations per operator stay valid permutations");
    }

    // bitwise determinism of the three commands
    {
        ScenarioConfig c;
        c.num_sheep = 12;
        c.seed = 99;
        c.horizon = 3000;
        bool ok = true;
        const fs::path p1 = scratch("plan1"), p2 = scratch("plan2");
        run_plan_command({c, Strategy::Jump, 5000, p1});
        run_plan_command({c, Strategy::Jump, 5000, p2});
        ok = ok && same_tree(p1, p2);
        for (const Method& m : Method::all()) {
            const fs::path s1 = scratch("sim1"), s2 = scratch("sim2");
            run_simulate_command({c, m, 5000, s1});
            run_simulate_command({c, m, 5000, s2});
            ok = ok && same_tree(s1, s2);
        }
        BatchOptions opt;
        opt.grid = {{6, 0.0012}, {10, 0.001}};
        opt.trials = 2;
        opt.iterations = 2000;
        opt.base_seed = 5;
        const fs::path b1 = scratch("batch1"), b2 = scratch("batch2");
        opt.threads = 1;
        run_batch_command({c, opt, b1});
        opt.threads = 4;
        run_batch_command({c, opt, b2});
        ok = ok && same_tree(b1, b2);
        report("7b determinism", ok, "plan, simulate (all methods) and batch (1 vs 4 threads) byte-identical");
    }

    // isometry equivariance
    {
        Rng rng(4242);
        const SheepParams sp;
        const DogParams dp;
        double worst = 0.0;
        for (int rep = 0; rep < 200; ++rep) {
            std::vector<Vec2> sheep;
            const std::size_t n = 2 + rng.below(30);
            for (std::size_t i = 0; i < n; ++i) sheep.push_back({120 * rng.uniform() - 60, 120 * rng.uniform() - 60});
            FlockState s = testing::flock(sheep, {200 * rng.uniform() - 100, 200 * rng.uniform() - 100});
            for (auto& v : s.sheep_vel_prev) v = {rng.uniform() - 0.5, rng.uniform() - 0.5};
            const testing::Rigid g{2 * std::numbers::pi * rng.uniform(), rng.below(2) == 1,
                                   {100 * rng.uniform() - 50, 100 * rng.uniform() - 50}};
            const FlockState a = step_flock(s, sp);
            const FlockState b = step_flock(g.apply(s), sp);
            for (std::size_t i = 0; i < n; ++i) {
                worst = std::max(worst, max_dev(g.point(a.sheep_pos[i]), b.sheep_pos[i]));
                worst = std::max(worst, max_dev(g.linear(a.sheep_vel_prev[i]), b.sheep_vel_prev[i]));
            }
            const std::size_t tracked = rng.below(n), nearest = rng.below(n);
            const Vec2 repel{50 * rng.uniform(), 50 * rng.uniform()};
            const Vec2 va = dog_velocity(s, dp, tracked, nearest, repel);
            const Vec2 vb = dog_velocity(g.apply(s), dp, tracked, nearest, g.point(repel));
            worst = std::max(worst, max_dev(g.linear(va), vb));
        }
        report("7c isometry equivariance", worst <= 1e-9, fmt("max deviation %.3g (limit 1e-9)", worst));
    }

    // total distance recomputation
    {
        double worst = 0.0;
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            ScenarioConfig c;
            c.num_sheep = 10;
            c.seed = seed;
            c.horizon = 4000;
            const FlockState start = prepare_start(c);
            const PlanResult plan = plan_tour(planning_instance(start, c.goal), Strategy::Reverse, 3000, seed);
            for (const RunRecord& r : {run_fat(start, c), run_proposed(start, c, plan.rls.best_tour)}) {
                const double again = path_length(r.dog_trace);
                worst = std::max(worst, std::abs(again - r.total_distance) / std::max(1.0, again));
            }
        }
        report("7d distance recomputation", worst <= 1e-9, fmt("max relative deviation %.3g (limit 1e-9)", worst));
    }

    // uniform disk sampler
    {
        ScenarioConfig c;
        c.num_sheep = 100000;
        c.density = 0.0012;
        Rng rng(77);
        const FlockState s = initial_placement(c, rng);
        double sum = 0.0;
        for (const Vec2& p : s.sheep_pos) sum += distance(p, c.goal.center);
        const double mean = sum / static_cast<double>(s.size());
        const double expected = 2.0 / 3.0 * placement_radius(c.num_sheep, c.density);
        const double rel = std::abs(mean - expected) / expected;
        report("7e uniform disk", rel <= 0.01, fmt("mean radius %.4f vs %.4f (%.3f%%, limit 1%%)", mean, expected, 100 * rel));
    }
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    radius_table();
    rls_vs_oracle(6, 90, "2 rls vs oracle (N=6)");
    rls_vs_oracle(4, 95, "2b rls vs oracle (N=4)");
    convergence();
    guidance_and_distance();
    improvement();
    property_suites();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d failing, %.1f s\n", failures, secs);
    return failures == 0 ? 0 : 1;
}
