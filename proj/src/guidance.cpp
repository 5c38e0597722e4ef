#include "shepherd/guidance.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "shepherd/dog.hpp"

namespace shepherd {

std::string_view to_string(Mode m) {
    switch (m) {
        case Mode::ApproachFirst: return "approach_first";
        case Mode::ProvisionalGather: return "provisional_gather";
        case Mode::FinalDrive: return "final_drive";
        case Mode::Done: return "done";
    }
    return "?";
}

bool goal_reached(const FlockState& state, const GoalSpec& goal) {
    for (const Vec2& p : state.sheep_pos) {
        if (distance(p, goal.center) > goal.radius) return false;
    }
    return true;
}

double path_length(const std::vector<Vec2>& trace) {
    double total = 0.0;
    for (std::size_t k = 1; k < trace.size(); ++k) total += distance(trace[k], trace[k - 1]);
    return total;
}

namespace {

std::vector<std::size_t> all_sheep(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

// Shared episode loop. `dog_command` maps (snapshot, phase) to the dog velocity;
// `advance_phase` returns the phase that governs the next step.
template <class DogCommand, class AdvancePhase>
RunRecord run_episode(const FlockState& start, const ScenarioConfig& scenario, GuidancePhase phase,
                      const RunOptions& options, DogCommand&& dog_command, AdvancePhase&& advance_phase) {
    start.validate();
    FlockState state = start;
    state.step = 0;

    RunRecord rec;
    rec.phase_trace.push_back({0, phase});

    for (long k = 0;; ++k) {
        if (options.record_traces) {
            rec.dog_trace.push_back(state.dog_pos);
            rec.sheep_traces.push_back(state.sheep_pos);
        }
        if (goal_reached(state, scenario.goal)) {
            rec.success = true;
            rec.k_end = k;
            phase.mode = Mode::Done;
            rec.phase_trace.push_back({k, phase});
            break;
        }
        if (k >= scenario.horizon) {
            rec.k_end = k;
            break;
        }

        const std::vector<Vec2> sheep_vel = flock_velocities(state, scenario.sheep);
        const Vec2 dog_vel = dog_command(state, phase);
        GuidancePhase next_phase = advance_phase(state, phase);

        FlockState next = apply_velocities(state, sheep_vel, dog_vel);
        rec.total_distance += distance(next.dog_pos, state.dog_pos);
        state = std::move(next);

        if (next_phase.mode != phase.mode || next_phase.next_position != phase.next_position) {
            phase = std::move(next_phase);
            rec.phase_trace.push_back({k + 1, phase});
        }
    }
    return rec;
}

}  // namespace

RunRecord run_fat(const FlockState& start, const ScenarioConfig& scenario, const RunOptions& options) {
    const std::vector<std::size_t> everyone = all_sheep(start.size());
    GuidancePhase phase{Mode::FinalDrive, start.size(), everyone};
    return run_episode(
        start, scenario, std::move(phase), options,
        [&](const FlockState& s, const GuidancePhase&) {
            return steer_toward(s, scenario.dog, everyone, scenario.goal.center).velocity;
        },
        [](const FlockState&, const GuidancePhase& p) { return p; });
}

RunRecord run_proposed(const FlockState& start, const ScenarioConfig& scenario, const Tour& tour,
                       const RunOptions& options) {
    const std::size_t n = start.size();
    if (tour.size() != n)
        throw std::invalid_argument("tour of length " + std::to_string(tour.size()) + " for a flock of " +
                                    std::to_string(n));
    const std::vector<std::size_t> everyone = all_sheep(n);

    auto dog_command = [&](const FlockState& s, const GuidancePhase& p) -> Vec2 {
        switch (p.mode) {
            case Mode::ApproachFirst:
                return approach_velocity(s, scenario.dog, s.sheep_pos[tour[0]]);
            case Mode::ProvisionalGather:
                return steer_toward(s, scenario.dog, p.collected, s.sheep_pos[tour[p.next_position]]).velocity;
            case Mode::FinalDrive:
            case Mode::Done:
                break;
        }
        return steer_toward(s, scenario.dog, everyone, scenario.goal.center).velocity;
    };

    auto advance_phase = [&](const FlockState& s, const GuidancePhase& p) -> GuidancePhase {
        GuidancePhase next = p;
        if (p.mode == Mode::ApproachFirst) {
            if (distance(s.sheep_pos[tour[0]], s.dog_pos) <= scenario.dog.contact_radius) {
                next.collected.push_back(tour[0]);
                next.next_position = 1;
                next.mode = Mode::ProvisionalGather;
            }
        } else if (p.mode == Mode::ProvisionalGather) {
            const Vec2 destination = s.sheep_pos[tour[p.next_position]];
            bool gathered = true;
            for (std::size_t i : p.collected) {
                if (distance(s.sheep_pos[i], destination) > scenario.goal.radius) {
                    gathered = false;
                    break;
                }
            }
            if (gathered) {
                next.collected.push_back(tour[p.next_position]);
                ++next.next_position;
            }
        }
        if (next.mode == Mode::ProvisionalGather && next.collected.size() == n) next.mode = Mode::FinalDrive;
        return next;
    };

    return run_episode(start, scenario, GuidancePhase{}, options, dog_command, advance_phase);
}

}  // namespace shepherd
