#pragma once

#include <cmath>
#include <ostream>

namespace toro {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend Vec2 operator*(Vec2 v, double s) { return s * v; }
    friend Vec2 operator/(Vec2 v, double s) { return {v.x / s, v.y / s}; }
    Vec2 operator-() const { return {-x, -y}; }

    friend std::ostream& operator<<(std::ostream& out, Vec2 v) {
        return out << "(" << v.x << ", " << v.y << ")";
    }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
    friend Vec3 operator*(Vec3 v, double s) { return s * v; }
    friend Vec3 operator/(Vec3 v, double s) { return {v.x / s, v.y / s, v.z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    friend std::ostream& operator<<(std::ostream& out, Vec3 v) {
        return out << "(" << v.x << ", " << v.y << ", " << v.z << ")";
    }
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }

inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Scalar triple product det[a b c].
inline double triple(Vec3 a, Vec3 b, Vec3 c) { return dot(cross(a, b), c); }

/// Embed a planar vector into the base plane z = 0.
inline Vec3 embed(Vec2 v, double z = 0.0) { return {v.x, v.y, z}; }

} // namespace toro
