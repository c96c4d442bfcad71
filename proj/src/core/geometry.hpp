#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace ccs {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const { return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x}; }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        double n = norm();
        return n > 0 ? Vec3{x / n, y / n, z / n} : Vec3{};
    }
};

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

// Solution set of a partially constrained point: intersections of spheres.
struct Locus {
    enum class Kind { Whole, Sphere, Circle, Pair, Point, Empty };
    Kind kind = Kind::Whole;
    Vec3 center;         // Sphere / Circle
    Vec3 axis;           // Circle normal (unit)
    double radius = 0.0; // Sphere / Circle
    Vec3 a, b;           // Pair: both; Point: a

    static Locus whole() { return {}; }
    static Locus empty() {
        Locus l;
        l.kind = Kind::Empty;
        return l;
    }
    static Locus point(Vec3 p) {
        Locus l;
        l.kind = Kind::Point;
        l.a = p;
        return l;
    }
    static Locus pair(Vec3 p, Vec3 q) {
        Locus l;
        l.kind = Kind::Pair;
        l.a = p;
        l.b = q;
        return l;
    }
    static Locus sphere(Vec3 c, double r) {
        Locus l;
        l.kind = Kind::Sphere;
        l.center = c;
        l.radius = r;
        return l;
    }
    static Locus circle(Vec3 c, Vec3 n, double r) {
        Locus l;
        l.kind = Kind::Circle;
        l.center = c;
        l.axis = n;
        l.radius = r;
        return l;
    }

    int dimension() const {
        switch (kind) {
            case Kind::Whole: return 3;
            case Kind::Sphere: return 2;
            case Kind::Circle: return 1;
            default: return 0;
        }
    }
};

// Intersects the locus with the sphere |x - anchor| = dist. `dim` = 2 keeps
// everything in the z = 0 plane (the first constraint yields a planar circle).
Locus refine_locus(const Locus& locus, const Vec3& anchor, double dist, int dim, double tol);

// Distance range from a fixed point to the locus (for conditional sweeping).
std::pair<double, double> locus_distance_range(const Locus& locus, const Vec3& point);

// Two-circle intersection in the plane; 0, 1 or 2 points. Coincident centers
// with equal positive radii raise Degenerate.
std::vector<Vec3> circle_intersection(const Vec3& c1, double r1, const Vec3& c2, double r2, double tol = 1e-9);

struct CmReport {
    bool feasible;
    double measure; // area (d = 2) or volume (d = 3)
};

// Cayley-Menger feasibility of a (d+1)-point simplex from squared distances in
// lexicographic pair order: d = 2 -> (01),(02),(12); d = 3 adds faces.
CmReport cm_feasible(const std::vector<double>& squared, int d, double rel_tol = 1e-12);

} // namespace ccs
