#include "shepherd/dog.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace shepherd {

void DogParams::validate() const {
    if (attraction_gain < 0.0 || repulsion_gain < 0.0 || destination_gain < 0.0)
        throw std::invalid_argument("dog gains must be non-negative");
    if (!(contact_radius > 0.0)) throw std::invalid_argument("r_d must be positive");
}

namespace {

void check_candidates(std::span<const std::size_t> candidates, const FlockState& state) {
    if (candidates.empty()) throw std::invalid_argument("candidate set is empty");
    for (std::size_t c : candidates) {
        if (c >= state.size()) throw std::out_of_range("candidate index " + std::to_string(c) + " out of range");
    }
}

}  // namespace

std::size_t farthest_from(const Vec2& point, std::span<const std::size_t> candidates, const FlockState& state) {
    check_candidates(candidates, state);
    std::size_t best = candidates.front();
    double best_d = distance(point, state.sheep_pos[best]);
    for (std::size_t c : candidates.subspan(1)) {
        const double d = distance(point, state.sheep_pos[c]);
        if (d > best_d || (d == best_d && c < best)) {
            best = c;
            best_d = d;
        }
    }
    return best;
}

std::size_t nearest_to_dog(std::span<const std::size_t> candidates, const FlockState& state) {
    check_candidates(candidates, state);
    std::size_t best = candidates.front();
    double best_d = distance(state.dog_pos, state.sheep_pos[best]);
    for (std::size_t c : candidates.subspan(1)) {
        const double d = distance(state.dog_pos, state.sheep_pos[c]);
        if (d < best_d || (d == best_d && c < best)) {
            best = c;
            best_d = d;
        }
    }
    return best;
}

Vec2 dog_velocity(const FlockState& state, const DogParams& params, std::size_t tracked, std::size_t nearest,
                  const Vec2& repel_point) {
    if (tracked >= state.size() || nearest >= state.size()) throw std::out_of_range("sheep index out of range");
    const Vec2 xd = state.dog_pos;
    const Vec2 pull = unit_or_x(state.sheep_pos[tracked] - xd);
    const Vec2 push = inverse_square(xd - state.sheep_pos[nearest]);
    const Vec2 away = unit_or_x(xd - repel_point);
    return params.attraction_gain * pull + params.repulsion_gain * push + params.destination_gain * away;
}

Vec2 approach_velocity(const FlockState& state, const DogParams& params, const Vec2& target) {
    std::vector<std::size_t> all(state.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    const std::size_t nearest = nearest_to_dog(all, state);
    const Vec2 xd = state.dog_pos;
    return params.attraction_gain * unit_or_x(target - xd) +
           params.repulsion_gain * inverse_square(xd - state.sheep_pos[nearest]);
}

SteeringCommand steer_toward(const FlockState& state, const DogParams& params,
                             std::span<const std::size_t> candidates, const Vec2& destination) {
    SteeringCommand cmd;
    cmd.target_index = farthest_from(destination, candidates, state);
    cmd.nearest_index = nearest_to_dog(candidates, state);
    cmd.velocity = dog_velocity(state, params, cmd.target_index, cmd.nearest_index, destination);
    return cmd;
}

}  // namespace shepherd
