#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "shepherd/flock.hpp"
#include "shepherd/rng.hpp"

using namespace shepherd;
using testing::flock;

TEST_CASE("neighbor_set uses a closed disk and excludes the sheep itself") {
    CHECK(neighbor_set(0, flock({{0, 0}, {0, 30}}), 20.0).empty());
    CHECK(neighbor_set(0, flock({{0, 0}, {0, 10}, {0, 19}, {0, 21}}), 20.0) == std::vector<std::size_t>{1, 2});
    CHECK(neighbor_set(1, flock({{0, 0}, {0, 20}}), 20.0) == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(neighbor_set(2, flock({{0, 0}, {0, 20}}), 20.0), std::out_of_range);
}

TEST_CASE("sheep_velocity hand-evaluated cases") {
    const SheepParams p;  // reference gains

    SUBCASE("lone sheep flees the dog") {
        const Vec2 v = sheep_velocity(0, flock({{0, 0}}, {0, 10}), p);
        CHECK(v.x == doctest::Approx(0.0));
        CHECK(v.y == doctest::Approx(-5.0));
    }
    SUBCASE("no dog gain, no neighbours: exactly zero") {
        SheepParams q = p;
        q.flight_gain = 0.0;
        CHECK(sheep_velocity(0, flock({{0, 0}}, {3, 4}), q) == Vec2{0.0, 0.0});
    }
    SUBCASE("separation plus cohesion for a resting pair") {
        const FlockState s = flock({{0, 0}, {10, 0}}, {0, 1000});
        const Vec2 v = sheep_velocity(0, s, p);
        // 100 * (-0.01, 0) + 2 * (1, 0) + 500 * (0, -1e-6)
        CHECK(v.x == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(v.y == doctest::Approx(-5e-4).epsilon(1e-12));
    }
    SUBCASE("alignment averages unit headings and counts resting neighbours") {
        SheepParams q{20.0, 0.0, 1.0, 0.0, 0.0};
        FlockState s = flock({{0, 0}, {5, 0}, {0, 5}});
        s.sheep_vel_prev = {{0, 0}, {3, 0}, {0, 0}};
        const Vec2 v = sheep_velocity(0, s, q);
        CHECK(v.x == doctest::Approx(0.5));
        CHECK(v.y == doctest::Approx(0.0));
    }
}

TEST_CASE("coincident sheep stay finite") {
    const SheepParams p;
    const FlockState s = flock({{1, 1}, {1, 1}, {1, 1}}, {1, 1});
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(sheep_velocity(i, s, p).finite());
    const FlockState next = step_flock(s, p);
    for (const Vec2& x : next.sheep_pos) CHECK(x.finite());
}

TEST_CASE("step_flock applies the velocity and keeps the dog") {
    const SheepParams p;
    const FlockState s = flock({{0, 0}}, {0, 10});
    const FlockState n = step_flock(s, p);
    CHECK(n.step == 1);
    CHECK(n.sheep_pos[0].x == doctest::Approx(0.0));
    CHECK(n.sheep_pos[0].y == doctest::Approx(-5.0));
    CHECK(n.sheep_vel_prev[0] == sheep_velocity(0, s, p));
    CHECK(n.dog_pos == s.dog_pos);

    SheepParams still = p;
    still.flight_gain = 0.0;
    FlockState lone = flock({{7, -3}}, {0, 0});
    for (int k = 0; k < 25; ++k) lone = step_flock(lone, still);
    CHECK(lone.sheep_pos[0] == Vec2{7, -3});
}

namespace {

FlockState random_flock(Rng& rng, std::size_t n) {
    std::vector<Vec2> pos(n);
    for (Vec2& p : pos) p = {80.0 * rng.uniform() - 40.0, 80.0 * rng.uniform() - 40.0};
    FlockState s = FlockState::at_rest(pos, {60.0 * rng.uniform() - 30.0, 60.0 * rng.uniform() + 45.0});
    for (Vec2& v : s.sheep_vel_prev) v = {2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
    return s;
}

}  // namespace

TEST_CASE("step_flock is deterministic") {
    Rng rng(11);
    const FlockState s = random_flock(rng, 15);
    const SheepParams p;
    FlockState a = s, b = s;
    for (int k = 0; k < 40; ++k) {
        a = step_flock(a, p);
        b = step_flock(b, p);
    }
    CHECK(a.sheep_pos == b.sheep_pos);
    CHECK(a.sheep_vel_prev == b.sheep_vel_prev);
}

TEST_CASE("step_flock commutes with relabelling the sheep") {
    Rng rng(5);
    const SheepParams p;
    for (int trial = 0; trial < 20; ++trial) {
        const FlockState s = random_flock(rng, 12);
        std::vector<std::size_t> perm(s.size());
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);

        FlockState relabelled = s;
        for (std::size_t i = 0; i < s.size(); ++i) {
            relabelled.sheep_pos[i] = s.sheep_pos[perm[i]];
            relabelled.sheep_vel_prev[i] = s.sheep_vel_prev[perm[i]];
        }
        const FlockState a = step_flock(s, p);
        const FlockState b = step_flock(relabelled, p);
        for (std::size_t i = 0; i < s.size(); ++i) {
            // the neighbour sums run in a different order, so allow rounding
            CHECK(std::abs(b.sheep_pos[i].x - a.sheep_pos[perm[i]].x) < 1e-9);
            CHECK(std::abs(b.sheep_pos[i].y - a.sheep_pos[perm[i]].y) < 1e-9);
        }
    }
}

TEST_CASE("step_flock commutes with rigid motions") {
    Rng rng(99);
    const SheepParams p;
    for (int trial = 0; trial < 30; ++trial) {
        const FlockState s = random_flock(rng, 10);
        const testing::Rigid g{6.283 * rng.uniform(), trial % 2 == 1, {50 * rng.uniform(), -50 * rng.uniform()}};
        const FlockState moved_then_stepped = step_flock(g.apply(s), p);
        const FlockState stepped_then_moved = g.apply(step_flock(s, p));
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(std::abs(moved_then_stepped.sheep_pos[i].x - stepped_then_moved.sheep_pos[i].x) <= 1e-9);
            CHECK(std::abs(moved_then_stepped.sheep_pos[i].y - stepped_then_moved.sheep_pos[i].y) <= 1e-9);
        }
    }
}

TEST_CASE("state validation") {
    FlockState s = flock({{0, 0}});
    CHECK_NOTHROW(s.validate());
    s.sheep_vel_prev.clear();
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    CHECK_THROWS_AS(flock({}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(flock({{NAN, 0}}).validate(), std::invalid_argument);

    SheepParams p;
    p.interaction_radius = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = SheepParams{};
    p.alignment_gain = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
