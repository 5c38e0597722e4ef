#pragma once
/**
 * @file vec2.hpp
 * @brief Plain 2-D vector used for every position and velocity in the simulator.
 *
 * Distances that appear in denominators go through the guarded helpers at the
 * bottom of this file so that coincident points never produce NaN.
 */

#include <cmath>

namespace shepherd {

struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    friend constexpr Vec2 operator*(double s, const Vec2& v) { return {v.x * s, v.y * s}; }

    Vec2& operator+=(const Vec2& r) { x += r.x; y += r.y; return *this; }
    Vec2& operator-=(const Vec2& r) { x -= r.x; y -= r.y; return *this; }
    Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

    constexpr bool operator==(const Vec2&) const = default;

    constexpr double dot(const Vec2& r) const { return x * r.x + y * r.y; }
    double norm() const { return std::hypot(x, y); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

/// Lower clamp applied to every distance used as a divisor.
inline constexpr double kDistanceGuard = 1e-9;

/// Unit vector along `d`; the +x axis when `d` is exactly zero.
inline Vec2 unit_or_x(const Vec2& d) {
    const double n = d.norm();
    if (n == 0.0) return {1.0, 0.0};
    return d / n;
}

/// d / ||d||^3 with the norm clamped below by kDistanceGuard.
inline Vec2 inverse_square(const Vec2& d) {
    const double n = d.norm();
    const double c = n < kDistanceGuard ? kDistanceGuard : n;
    return unit_or_x(d) / (c * c);
}

}  // namespace shepherd
