#pragma once
/**
 * @file route.hpp
 * @brief Sheep-tour planning.
 *
 * A tour is the order in which the dog visits the sheep. Its guidance cost is
 * the length of the open path dog start -> first sheep -> ... -> last sheep ->
 * goal, measured at the planning-time positions. Randomized Local Search
 * reduces that cost by repeatedly applying one permutation operator and
 * keeping the result whenever it is no worse.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "shepherd/rng.hpp"
#include "shepherd/vec2.hpp"

namespace shepherd {

/// Permutation of sheep indices 0..N-1. The invariant is checked on construction.
class Tour {
public:
    Tour() = default;
    explicit Tour(std::vector<std::size_t> order);

    static Tour identity(std::size_t n);
    static Tour random(std::size_t n, Rng& rng);

    std::size_t size() const { return order_.size(); }
    std::size_t operator[](std::size_t pos) const { return order_[pos]; }
    const std::vector<std::size_t>& order() const { return order_; }

    bool operator==(const Tour&) const = default;

private:
    std::vector<std::size_t> order_;
};

/// True iff `order` holds each of 0..order.size()-1 exactly once.
bool is_permutation_of_range(const std::vector<std::size_t>& order);

struct TourInstance {
    Vec2 dog_start;
    std::vector<Vec2> sheep_start;
    Vec2 goal;

    std::size_t size() const { return sheep_start.size(); }
};

enum class Strategy { Reverse, Exchange, Jump };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

struct RlsConfig {
    Strategy strategy{Strategy::Reverse};
    std::size_t iterations{10000};
    std::uint64_t seed{0};
};

struct RlsResult {
    Tour best_tour;
    double best_cost{0.0};
    std::vector<double> cost_trace;  ///< incumbent cost after each iteration
};

/// Open-path length over all N+1 legs. Throws std::invalid_argument on a size mismatch.
double tour_cost(const Tour& tour, const TourInstance& instance);

/// Applies `strategy` at positions a < b (0-based). Reverse flips [a, b]; Exchange
/// swaps a and b; Jump moves the element at a to position b.
Tour apply_move(const Tour& tour, Strategy strategy, std::size_t a, std::size_t b);

/// Draws two distinct positions uniformly and applies `strategy`. Tours shorter
/// than two are returned unchanged.
Tour mutate(const Tour& tour, Strategy strategy, Rng& rng);

/// Accept-if-not-worse local search for exactly config.iterations mutations.
RlsResult rls_optimize(const TourInstance& instance, const RlsConfig& config, const Tour& initial);

inline constexpr std::size_t kBruteForceLimit = 10;

/// Exhaustive minimum over all N! tours; the lexicographically smallest wins ties.
/// Throws std::length_error when N exceeds kBruteForceLimit.
std::pair<Tour, double> brute_force_tour(const TourInstance& instance);

}  // namespace shepherd
