#include "shepherd/flock.hpp"

#include <stdexcept>
#include <string>

namespace shepherd {

void SheepParams::validate() const {
    if (!(interaction_radius > 0.0)) throw std::invalid_argument("r_s must be positive");
    if (separation_gain < 0.0 || alignment_gain < 0.0 || cohesion_gain < 0.0 || flight_gain < 0.0)
        throw std::invalid_argument("sheep gains must be non-negative");
}

FlockState FlockState::at_rest(std::vector<Vec2> sheep, Vec2 dog) {
    FlockState s;
    s.sheep_vel_prev.assign(sheep.size(), Vec2{});
    s.sheep_pos = std::move(sheep);
    s.dog_pos = dog;
    return s;
}

void FlockState::validate() const {
    if (sheep_pos.empty()) throw std::invalid_argument("flock must contain at least one sheep");
    if (sheep_pos.size() != sheep_vel_prev.size())
        throw std::invalid_argument("position and velocity lists differ in length");
    if (!dog_pos.finite()) throw std::invalid_argument("dog position is not finite");
    for (std::size_t i = 0; i < sheep_pos.size(); ++i) {
        if (!sheep_pos[i].finite() || !sheep_vel_prev[i].finite())
            throw std::invalid_argument("non-finite state for sheep " + std::to_string(i + 1));
    }
}

static void check_index(std::size_t i, const FlockState& state) {
    if (i >= state.size())
        throw std::out_of_range("sheep index " + std::to_string(i) + " out of range for flock of " +
                                std::to_string(state.size()));
}

std::vector<std::size_t> neighbor_set(std::size_t i, const FlockState& state, double radius) {
    check_index(i, state);
    std::vector<std::size_t> out;
    const Vec2 xi = state.sheep_pos[i];
    for (std::size_t j = 0; j < state.size(); ++j) {
        if (j != i && distance(xi, state.sheep_pos[j]) <= radius) out.push_back(j);
    }
    return out;
}

Vec2 sheep_velocity(std::size_t i, const FlockState& state, const SheepParams& params) {
    check_index(i, state);
    const Vec2 xi = state.sheep_pos[i];

    Vec2 separation, alignment, cohesion;
    const auto neighbors = neighbor_set(i, state, params.interaction_radius);
    if (!neighbors.empty()) {
        for (std::size_t j : neighbors) {
            const Vec2 d = state.sheep_pos[j] - xi;
            separation -= inverse_square(d);
            const Vec2 vj = state.sheep_vel_prev[j];
            const double speed = vj.norm();
            // a stationary neighbour still counts in the average
            if (speed >= kDistanceGuard) alignment += vj / speed;
            cohesion += unit_or_x(d);
        }
        const double count = static_cast<double>(neighbors.size());
        separation = separation / count;
        alignment = alignment / count;
        cohesion = cohesion / count;
    }
    const Vec2 flight = -inverse_square(state.dog_pos - xi);

    return params.separation_gain * separation + params.alignment_gain * alignment +
           params.cohesion_gain * cohesion + params.flight_gain * flight;
}

std::vector<Vec2> flock_velocities(const FlockState& state, const SheepParams& params) {
    std::vector<Vec2> v(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) v[i] = sheep_velocity(i, state, params);
    return v;
}

FlockState apply_velocities(const FlockState& state, const std::vector<Vec2>& sheep_vel, const Vec2& dog_vel) {
    if (sheep_vel.size() != state.size())
        throw std::invalid_argument("velocity count does not match flock size");
    FlockState next;
    next.step = state.step + 1;
    next.sheep_pos.resize(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) next.sheep_pos[i] = state.sheep_pos[i] + sheep_vel[i];
    next.sheep_vel_prev = sheep_vel;
    next.dog_pos = state.dog_pos + dog_vel;
    return next;
}

FlockState step_flock(const FlockState& state, const SheepParams& params) {
    return apply_velocities(state, flock_velocities(state, params), Vec2{});
}

}  // namespace shepherd
