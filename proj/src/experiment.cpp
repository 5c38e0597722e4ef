#include "shepherd/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace shepherd {

void ScenarioConfig::validate() const {
    if (num_sheep == 0) throw std::invalid_argument("N must be at least 1");
    if (!(density > 0.0)) throw std::invalid_argument("rho must be positive");
    if (!(goal.radius > 0.0)) throw std::invalid_argument("g_r must be positive");
    if (horizon < 0) throw std::invalid_argument("T must be non-negative");
    if (warmup_steps < 0) throw std::invalid_argument("warmup_steps must be non-negative");
    if (!goal.center.finite() || !dog_start.finite()) throw std::invalid_argument("non-finite coordinates");
    sheep.validate();
    dog.validate();
}

double placement_radius(std::size_t num_sheep, double density) {
    if (num_sheep == 0) throw std::invalid_argument("N must be at least 1");
    if (!(density > 0.0)) throw std::invalid_argument("rho must be positive");
    return std::sqrt(static_cast<double>(num_sheep) / (std::numbers::pi * density));
}

FlockState initial_placement(const ScenarioConfig& config, Rng& rng) {
    const double radius = placement_radius(config.num_sheep, config.density);
    std::vector<Vec2> sheep(config.num_sheep);
    for (Vec2& p : sheep) {
        const double r = radius * std::sqrt(rng.uniform());
        const double theta = 2.0 * std::numbers::pi * rng.uniform();
        p = config.goal.center + Vec2{r * std::cos(theta), r * std::sin(theta)};
    }
    return FlockState::at_rest(std::move(sheep), config.dog_start);
}

FlockState warmup(const FlockState& state, const SheepParams& params, long steps) {
    if (steps < 0) throw std::invalid_argument("warm-up steps must be non-negative");
    FlockState s = state;
    for (long k = 0; k < steps; ++k) s = step_flock(s, params);
    s.step = 0;
    return s;
}

FlockState prepare_start(const ScenarioConfig& config) {
    config.validate();
    Rng rng(config.seed);
    return warmup(initial_placement(config, rng), config.sheep, config.warmup_steps);
}

TourInstance planning_instance(const FlockState& start, const GoalSpec& goal) {
    return {start.dog_pos, start.sheep_pos, goal.center};
}

PlanResult plan_tour(const TourInstance& instance, Strategy strategy, std::size_t iterations, std::uint64_t seed) {
    PlanResult out;
    Rng init_rng(derive_seed(seed, {1}));
    out.initial_tour = Tour::random(instance.size(), init_rng);
    out.initial_cost = tour_cost(out.initial_tour, instance);
    const RlsConfig cfg{strategy, iterations, derive_seed(seed, {2, static_cast<std::uint64_t>(strategy)})};
    out.rls = rls_optimize(instance, cfg, out.initial_tour);
    return out;
}

std::string Method::name() const {
    if (is_fat()) return "fat";
    return "proposed:" + std::string(to_string(*strategy));
}

std::optional<Method> Method::parse(std::string_view text) {
    if (text == "fat") return fat();
    constexpr std::string_view prefix = "proposed:";
    if (text.starts_with(prefix)) {
        if (auto s = parse_strategy(text.substr(prefix.size()))) return proposed(*s);
    }
    return std::nullopt;
}

std::vector<Method> Method::all() {
    return {fat(), proposed(Strategy::Reverse), proposed(Strategy::Exchange), proposed(Strategy::Jump)};
}

std::uint64_t trial_seed(std::uint64_t base_seed, const GridCell& cell, std::size_t trial) {
    return derive_seed(base_seed, {static_cast<std::uint64_t>(cell.num_sheep), std::bit_cast<std::uint64_t>(cell.density),
                                   static_cast<std::uint64_t>(trial)});
}

std::vector<TrialRecord> run_trial(const ScenarioConfig& base, const GridCell& cell, std::size_t trial,
                                   const std::vector<Method>& methods, std::uint64_t base_seed,
                                   std::size_t iterations) {
    ScenarioConfig config = base;
    config.num_sheep = cell.num_sheep;
    config.density = cell.density;
    config.seed = trial_seed(base_seed, cell, trial);
    const FlockState start = prepare_start(config);
    const TourInstance instance = planning_instance(start, config.goal);
    const RunOptions quiet{.record_traces = false};

    std::vector<TrialRecord> out;
    out.reserve(methods.size());
    for (const Method& m : methods) {
        TrialRecord rec;
        rec.num_sheep = cell.num_sheep;
        rec.density = cell.density;
        rec.trial = trial;
        rec.method = m;
        RunRecord run;
        if (m.is_fat()) {
            run = run_fat(start, config, quiet);
        } else {
            const PlanResult plan = plan_tour(instance, *m.strategy, iterations, config.seed);
            rec.tour_cost_initial = plan.initial_cost;
            rec.tour_cost_final = plan.rls.best_cost;
            run = run_proposed(start, config, plan.rls.best_tour, quiet);
        }
        rec.success = run.success;
        rec.k_end = run.k_end;
        rec.distance = run.total_distance;
        out.push_back(std::move(rec));
    }
    return out;
}

BatchResult run_batch(const ScenarioConfig& base, const BatchOptions& options) {
    if (options.trials == 0) throw std::invalid_argument("trials must be at least 1");
    base.validate();
    const std::size_t jobs = options.grid.size() * options.trials;
    std::vector<std::vector<TrialRecord>> slots(jobs);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < jobs; j = next++) {
            const GridCell& cell = options.grid[j / options.trials];
            slots[j] = run_trial(base, cell, j % options.trials, options.methods, options.base_seed,
                                 options.iterations);
        }
    };
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    BatchResult result;
    for (auto& slot : slots)
        for (auto& r : slot) result.records.push_back(std::move(r));
    result.summaries = summarize(result.records);
    return result;
}

std::vector<CellSummary> summarize(const std::vector<TrialRecord>& records) {
    std::vector<CellSummary> out;
    std::vector<double> success_sums;
    for (const TrialRecord& r : records) {
        auto it = std::find_if(out.begin(), out.end(), [&](const CellSummary& s) {
            return s.num_sheep == r.num_sheep && s.density == r.density && s.method == r.method;
        });
        if (it == out.end()) {
            CellSummary fresh;
            fresh.num_sheep = r.num_sheep;
            fresh.density = r.density;
            fresh.method = r.method;
            out.push_back(std::move(fresh));
            success_sums.push_back(0.0);
            it = std::prev(out.end());
        }
        it->trials += 1;
        it->distance_samples.push_back(r.distance);
        if (r.success) {
            it->successes += 1;
            success_sums[static_cast<std::size_t>(it - out.begin())] += r.distance;
        }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        CellSummary& s = out[i];
        const double n = static_cast<double>(s.trials);
        s.success_rate = static_cast<double>(s.successes) / n;
        double sum_all = 0.0;
        for (double d : s.distance_samples) sum_all += d;
        s.mean_distance_all = sum_all / n;
        s.mean_distance_successes = s.successes ? success_sums[i] / static_cast<double>(s.successes)
                                                : std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

}  // namespace shepherd
