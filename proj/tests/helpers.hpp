#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "shepherd/flock.hpp"
#include "shepherd/vec2.hpp"

namespace testing {

inline shepherd::FlockState flock(std::vector<shepherd::Vec2> sheep, shepherd::Vec2 dog = {0.0, 1e6}) {
    return shepherd::FlockState::at_rest(std::move(sheep), dog);
}

// Rigid motion: rotate by `angle`, optionally mirror about the x axis first, then translate.
struct Rigid {
    double angle{0.0};
    bool mirror{false};
    shepherd::Vec2 shift;

    shepherd::Vec2 linear(shepherd::Vec2 v) const {
        if (mirror) v.y = -v.y;
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * v.x - s * v.y, s * v.x + c * v.y};
    }
    shepherd::Vec2 point(shepherd::Vec2 p) const { return linear(p) + shift; }

    shepherd::FlockState apply(const shepherd::FlockState& s) const {
        shepherd::FlockState out = s;
        for (auto& p : out.sheep_pos) p = point(p);
        for (auto& v : out.sheep_vel_prev) v = linear(v);
        out.dog_pos = point(s.dog_pos);
        return out;
    }
};

}  // namespace testing
