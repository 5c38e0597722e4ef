#pragma once
/**
 * @file flock.hpp
 * @brief Sheep behaviour: neighbour detection, the four-term velocity law
 *        (separation, alignment, cohesion, flight from the dog) and the
 *        one-step flock update.
 *
 * Sheep are indexed from 0 in code. File formats and the CLI present them
 * 1-based.
 */

#include <cstddef>
#include <vector>

#include "shepherd/vec2.hpp"

namespace shepherd {

struct SheepParams {
    double interaction_radius{20.0};  ///< r_s
    double separation_gain{100.0};    ///< K_s1
    double alignment_gain{0.5};       ///< K_s2
    double cohesion_gain{2.0};        ///< K_s3
    double flight_gain{500.0};        ///< K_s4

    /// Throws std::invalid_argument on a negative gain or non-positive radius.
    void validate() const;
};

struct FlockState {
    long step{0};
    std::vector<Vec2> sheep_pos;
    std::vector<Vec2> sheep_vel_prev;  ///< velocities applied on the previous step
    Vec2 dog_pos;

    std::size_t size() const { return sheep_pos.size(); }

    /// Builds a state at step 0 with zero previous velocities.
    static FlockState at_rest(std::vector<Vec2> sheep, Vec2 dog);

    /// Throws std::invalid_argument if the lists are empty, mismatched or non-finite.
    void validate() const;
};

/// Indices of the sheep within the closed disk of radius `radius` around sheep `i`, excluding `i`.
/// Ascending order. Throws std::out_of_range for a bad index.
std::vector<std::size_t> neighbor_set(std::size_t i, const FlockState& state, double radius);

/// Velocity of sheep `i` for the current step.
Vec2 sheep_velocity(std::size_t i, const FlockState& state, const SheepParams& params);

/// All sheep velocities, computed from the same snapshot.
std::vector<Vec2> flock_velocities(const FlockState& state, const SheepParams& params);

/// Moves every sheep by its velocity; the dog stays where it is.
FlockState step_flock(const FlockState& state, const SheepParams& params);

/// Applies precomputed sheep velocities and a dog velocity, advancing the step counter.
FlockState apply_velocities(const FlockState& state, const std::vector<Vec2>& sheep_vel, const Vec2& dog_vel);

}  // namespace shepherd
