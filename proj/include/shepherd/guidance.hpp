#pragma once
/**
 * @file guidance.hpp
 * @brief Full guidance episodes.
 *
 * Two controllers are provided. `run_fat` steers with Farthest Agent Targeting
 * toward the goal for the whole episode. `run_proposed` follows a precomputed
 * sheep tour: the dog first approaches the tour's first sheep, then repeatedly
 * herds the already collected sheep onto the live position of the next sheep in
 * the tour, and once every sheep is collected drives the whole flock to the goal.
 *
 * Each step k reads the snapshot x[k]: the goal test runs first, then the sheep
 * and dog velocities are computed from the same snapshot and applied together.
 * Collection checks also read x[k], but their effect on the collected set is
 * visible from step k+1.
 */

#include <cstddef>
#include <string_view>
#include <vector>

#include "shepherd/flock.hpp"
#include "shepherd/route.hpp"
#include "shepherd/scenario.hpp"

namespace shepherd {

enum class Mode { ApproachFirst = 0, ProvisionalGather = 1, FinalDrive = 2, Done = 3 };

std::string_view to_string(Mode m);

struct GuidancePhase {
    Mode mode{Mode::ApproachFirst};
    std::size_t next_position{0};          ///< 0-based position in the tour of the provisional destination
    std::vector<std::size_t> collected;    ///< in collection order
};

struct PhaseEvent {
    long step{0};
    GuidancePhase phase;
};

struct RunRecord {
    bool success{false};
    long k_end{0};
    double total_distance{0.0};
    std::vector<Vec2> dog_trace;                 ///< x_d[0..k_end]
    std::vector<std::vector<Vec2>> sheep_traces; ///< per step, all sheep
    std::vector<PhaseEvent> phase_trace;         ///< initial phase and every change
};

struct RunOptions {
    bool record_traces{true};
};

/// True iff every sheep lies in the closed goal disk.
bool goal_reached(const FlockState& state, const GoalSpec& goal);

/// FAT episode from `start` until the goal test passes or `scenario.horizon` steps elapse.
RunRecord run_fat(const FlockState& start, const ScenarioConfig& scenario, const RunOptions& options = {});

/// Tour-following episode from `start`. Throws std::invalid_argument if the tour
/// does not match the flock size.
RunRecord run_proposed(const FlockState& start, const ScenarioConfig& scenario, const Tour& tour,
                       const RunOptions& options = {});

/// Sum of consecutive dog displacements along a trace.
double path_length(const std::vector<Vec2>& trace);

}  // namespace shepherd
