#pragma once
// Sheepdog steering laws: Farthest Agent Targeting and the variants used while
// gathering sheep at a provisional destination.

#include <cstddef>
#include <span>

#include "shepherd/flock.hpp"
#include "shepherd/vec2.hpp"

namespace shepherd {

struct DogParams {
    double attraction_gain{10.0};    ///< K_d1, pull toward the tracked sheep
    double repulsion_gain{1000.0};   ///< K_d2, push away from the nearest sheep
    double destination_gain{4.5};    ///< K_d3, push away from the (provisional) destination
    double contact_radius{30.0};     ///< r_d, first-contact radius

    void validate() const;
};

struct SteeringCommand {
    Vec2 velocity;
    std::size_t target_index{0};
    std::size_t nearest_index{0};
};

/// Candidate farthest from `point`; ties go to the smallest index.
/// Throws std::invalid_argument on an empty candidate set.
std::size_t farthest_from(const Vec2& point, std::span<const std::size_t> candidates, const FlockState& state);

/// Candidate nearest to the dog; ties go to the smallest index.
std::size_t nearest_to_dog(std::span<const std::size_t> candidates, const FlockState& state);

/// K_d1 * unit pull toward `tracked` + K_d2 * inverse-square push from `nearest`
/// + K_d3 * unit push from `repel_point`.
Vec2 dog_velocity(const FlockState& state, const DogParams& params, std::size_t tracked, std::size_t nearest,
                  const Vec2& repel_point);

/// Used before any sheep has been collected: unit pull toward `target` plus the
/// push from the sheep nearest to the dog over the whole flock. No destination term.
Vec2 approach_velocity(const FlockState& state, const DogParams& params, const Vec2& target);

/// Farthest-agent selection and dog velocity over `candidates`, pushing the
/// flock toward `destination`. With all sheep and the goal this is plain FAT.
SteeringCommand steer_toward(const FlockState& state, const DogParams& params,
                             std::span<const std::size_t> candidates, const Vec2& destination);

}  // namespace shepherd
