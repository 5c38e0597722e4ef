#pragma once
// Scenario parameters. Defaults are the reference configuration: destination at
// the origin with radius 20, r_d = 30, horizon 10000, dog starting at (-30, 50),
// and the sheep/dog gains listed in SheepParams and DogParams.

#include <cstddef>
#include <cstdint>

#include "shepherd/dog.hpp"
#include "shepherd/flock.hpp"
#include "shepherd/vec2.hpp"

namespace shepherd {

struct GoalSpec {
    Vec2 center{0.0, 0.0};
    double radius{20.0};
};

struct ScenarioConfig {
    std::size_t num_sheep{20};
    double density{0.0012};  ///< rho, sheep per unit area of the placement disk
    GoalSpec goal;
    long horizon{10000};     ///< T
    Vec2 dog_start{-30.0, 50.0};
    SheepParams sheep;
    DogParams dog;
    long warmup_steps{50};
    std::uint64_t seed{0};

    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
};

}  // namespace shepherd
