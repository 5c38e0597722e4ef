#pragma once
/**
 * @file experiment.hpp
 * @brief Seeded initial conditions, warm-up, tour planning and batched
 *        FAT-versus-tour comparisons over an (N, rho) grid.
 *
 * Every random quantity of a trial comes from streams derived from one trial
 * seed, which in turn is a pure function of (base seed, N, rho, trial). All
 * methods of a trial start from the same warmed-up flock, so their distances
 * form paired samples.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shepherd/flock.hpp"
#include "shepherd/guidance.hpp"
#include "shepherd/rng.hpp"
#include "shepherd/route.hpp"
#include "shepherd/scenario.hpp"

namespace shepherd {

/// sqrt(N / (pi * rho)). Throws std::invalid_argument for N == 0 or rho <= 0.
double placement_radius(std::size_t num_sheep, double density);

/// Sheep i.i.d. uniform on the closed disk of placement_radius around the goal,
/// dog at config.dog_start, zero previous velocities.
FlockState initial_placement(const ScenarioConfig& config, Rng& rng);

/// Advances the flock `steps` times with the dog held in place. The returned
/// state has its step counter reset to 0.
FlockState warmup(const FlockState& state, const SheepParams& params, long steps);

/// Placement from config.seed followed by warm-up: the episode start state.
FlockState prepare_start(const ScenarioConfig& config);

TourInstance planning_instance(const FlockState& start, const GoalSpec& goal);

struct PlanResult {
    Tour initial_tour;
    double initial_cost{0.0};
    RlsResult rls;
};

/// Random initial tour and RLS, both seeded from `seed`. The initial tour does
/// not depend on the strategy.
PlanResult plan_tour(const TourInstance& instance, Strategy strategy, std::size_t iterations, std::uint64_t seed);

/// "fat" or "proposed:<strategy>".
struct Method {
    std::optional<Strategy> strategy;  ///< empty for FAT

    bool is_fat() const { return !strategy.has_value(); }
    std::string name() const;
    bool operator==(const Method&) const = default;

    static Method fat() { return {}; }
    static Method proposed(Strategy s) { return {s}; }
    static std::optional<Method> parse(std::string_view text);
    static std::vector<Method> all();
};

struct TrialRecord {
    std::size_t num_sheep{0};
    double density{0.0};
    std::size_t trial{0};
    Method method;
    bool success{false};
    long k_end{0};
    double distance{0.0};
    std::optional<double> tour_cost_initial;  ///< proposed methods only
    std::optional<double> tour_cost_final;
};

struct CellSummary {
    std::size_t num_sheep{0};
    double density{0.0};
    Method method;
    std::size_t trials{0};
    std::size_t successes{0};
    double success_rate{0.0};
    double mean_distance_successes{0.0};  ///< NaN when nothing succeeded
    double mean_distance_all{0.0};        ///< failures contribute J at the horizon
    std::vector<double> distance_samples; ///< trial order
};

struct GridCell {
    std::size_t num_sheep{0};
    double density{0.0};
};

struct BatchOptions {
    std::vector<GridCell> grid;
    std::size_t trials{1};
    std::vector<Method> methods{Method::all()};
    std::uint64_t base_seed{0};
    std::size_t iterations{10000};
    unsigned threads{0};  ///< 0 = hardware concurrency
};

struct BatchResult {
    std::vector<TrialRecord> records;   ///< ordered by cell, trial, method
    std::vector<CellSummary> summaries; ///< ordered by cell, method
};

std::uint64_t trial_seed(std::uint64_t base_seed, const GridCell& cell, std::size_t trial);

/// One trial of every requested method from a shared warmed-up start.
std::vector<TrialRecord> run_trial(const ScenarioConfig& base, const GridCell& cell, std::size_t trial,
                                   const std::vector<Method>& methods, std::uint64_t base_seed,
                                   std::size_t iterations);

/// Output is independent of the thread count.
BatchResult run_batch(const ScenarioConfig& base, const BatchOptions& options);

/// Aggregates records per (cell, method) in first-seen order.
std::vector<CellSummary> summarize(const std::vector<TrialRecord>& records);

}  // namespace shepherd
