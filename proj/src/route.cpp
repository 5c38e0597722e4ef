#include "shepherd/route.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace shepherd {

bool is_permutation_of_range(const std::vector<std::size_t>& order) {
    std::vector<bool> seen(order.size(), false);
    for (std::size_t v : order) {
        if (v >= order.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Tour::Tour(std::vector<std::size_t> order) : order_(std::move(order)) {
    if (!is_permutation_of_range(order_)) throw std::invalid_argument("tour is not a permutation");
}

Tour Tour::identity(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return Tour(std::move(order));
}

Tour Tour::random(std::size_t n, Rng& rng) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Fisher-Yates
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    return Tour(std::move(order));
}

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::Reverse: return "reverse";
        case Strategy::Exchange: return "exchange";
        case Strategy::Jump: return "jump";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
    if (name == "reverse") return Strategy::Reverse;
    if (name == "exchange") return Strategy::Exchange;
    if (name == "jump") return Strategy::Jump;
    return std::nullopt;
}

namespace {

// Caller guarantees order is a permutation matching the instance.
double path_length(const std::vector<std::size_t>& order, const TourInstance& instance) {
    const auto& x = instance.sheep_start;
    const std::size_t n = order.size();
    double cost = distance(instance.dog_start, x[order[0]]);
    for (std::size_t i = 0; i + 1 < n; ++i) cost += distance(x[order[i]], x[order[i + 1]]);
    cost += distance(x[order[n - 1]], instance.goal);
    return cost;
}

}  // namespace

double tour_cost(const Tour& tour, const TourInstance& instance) {
    const std::size_t n = instance.size();
    if (tour.size() != n || n == 0)
        throw std::invalid_argument("tour of length " + std::to_string(tour.size()) +
                                    " does not match instance of " + std::to_string(n) + " sheep");
    return path_length(tour.order(), instance);
}

Tour apply_move(const Tour& tour, Strategy strategy, std::size_t a, std::size_t b) {
    if (!(a < b && b < tour.size())) throw std::invalid_argument("move positions must satisfy a < b < N");
    std::vector<std::size_t> order = tour.order();
    const auto first = order.begin() + static_cast<std::ptrdiff_t>(a);
    const auto last = order.begin() + static_cast<std::ptrdiff_t>(b);
    switch (strategy) {
        case Strategy::Reverse: std::reverse(first, last + 1); break;
        case Strategy::Exchange: std::iter_swap(first, last); break;
        case Strategy::Jump: std::rotate(first, first + 1, last + 1); break;
    }
    return Tour(std::move(order));
}

Tour mutate(const Tour& tour, Strategy strategy, Rng& rng) {
    const std::size_t n = tour.size();
    if (n < 2) return tour;
    std::size_t a = rng.below(n);
    std::size_t b = rng.below(n - 1);
    if (b >= a) ++b;
    if (a > b) std::swap(a, b);
    return apply_move(tour, strategy, a, b);
}

RlsResult rls_optimize(const TourInstance& instance, const RlsConfig& config, const Tour& initial) {
    if (config.iterations == 0) throw std::invalid_argument("iterations must be positive");
    Rng rng(config.seed);
    RlsResult result;
    result.best_tour = initial;
    result.best_cost = tour_cost(initial, instance);
    result.cost_trace.reserve(config.iterations);
    for (std::size_t it = 0; it < config.iterations; ++it) {
        Tour candidate = mutate(result.best_tour, config.strategy, rng);
        const double cost = tour_cost(candidate, instance);
        if (cost <= result.best_cost) {
            result.best_tour = std::move(candidate);
            result.best_cost = cost;
        }
        result.cost_trace.push_back(result.best_cost);
    }
    return result;
}

std::pair<Tour, double> brute_force_tour(const TourInstance& instance) {
    const std::size_t n = instance.size();
    if (n > kBruteForceLimit)
        throw std::length_error("brute force refused for " + std::to_string(n) + " sheep (limit " +
                                std::to_string(kBruteForceLimit) + ")");
    Tour first = Tour::identity(n);
    double best_cost = tour_cost(first, instance);
    std::vector<std::size_t> order = first.order();
    std::vector<std::size_t> best = order;
    // next_permutation walks in lexicographic order, so strict < keeps the smallest tie
    while (std::next_permutation(order.begin(), order.end())) {
        const double c = path_length(order, instance);
        if (c < best_cost) {
            best = order;
            best_cost = c;
        }
    }
    return {Tour(std::move(best)), best_cost};
}

}  // namespace shepherd
