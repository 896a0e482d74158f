#pragma once

#include <cmath>

namespace hierosa {

/// 2D point/vector in normalized glyph coordinates (x right, y down).
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
    friend Vec2 operator/(Vec2 v, double s) { return {v.x / s, v.y / s}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }

    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm() const { return std::sqrt(x * x + y * y); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

} // namespace hierosa
