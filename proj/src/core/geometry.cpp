#include "geometry.hpp"

#include <algorithm>

namespace ccs {

namespace {

// unit vector perpendicular to n, chosen deterministically
Vec3 perpendicular_of(const Vec3& n) {
    Vec3 candidate = std::abs(n.x) <= 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    Vec3 u = candidate - n * candidate.dot(n);
    if (u.norm() < 1e-12) u = Vec3{0, 0, 1} - n * n.z;
    return u.normalized();
}

Locus sphere_sphere(const Vec3& c1, double r1, const Vec3& c2, double r2, double tol) {
    Vec3 d = c2 - c1;
    double dist = d.norm();
    if (dist <= tol) {
        if (std::abs(r1 - r2) <= tol) return Locus::sphere(c1, r1); // no new information
        return Locus::empty();
    }
    double a = (dist * dist + r1 * r1 - r2 * r2) / (2.0 * dist);
    double h2 = r1 * r1 - a * a;
    double scale = std::max({1.0, r1 * r1, r2 * r2, dist * dist});
    if (h2 < -tol * scale) return Locus::empty();
    Vec3 u = d * (1.0 / dist);
    Vec3 center = c1 + u * a;
    if (h2 <= tol * scale) return Locus::point(center);
    return Locus::circle(center, u, std::sqrt(h2));
}

Locus circle_sphere(const Locus& circ, const Vec3& c2, double r2, double tol) {
    Vec3 w = c2 - circ.center;
    double z = w.dot(circ.axis);
    Vec3 w_perp = w - circ.axis * z;
    double rho = w_perp.norm();
    double r = circ.radius;
    double scale = std::max({1.0, r * r, r2 * r2, w.dot(w)});
    if (rho <= tol) {
        // sphere centered on the axis: either the whole circle satisfies it or nothing
        double want = r2 * r2 - z * z;
        if (std::abs(want - r * r) <= tol * scale * 4.0) return circ;
        return Locus::empty();
    }
    // |x - c2|^2 = r^2 + |w|^2 - 2 r rho cos(phi) = r2^2
    double cosphi = (r * r + w.dot(w) - r2 * r2) / (2.0 * r * rho);
    if (cosphi > 1.0 + tol || cosphi < -1.0 - tol) return Locus::empty();
    cosphi = std::clamp(cosphi, -1.0, 1.0);
    Vec3 u = w_perp * (1.0 / rho);
    Vec3 v = circ.axis.cross(u);
    double s = std::sqrt(std::max(0.0, 1.0 - cosphi * cosphi));
    Vec3 p1 = circ.center + (u * cosphi + v * s) * r;
    Vec3 p2 = circ.center + (u * cosphi - v * s) * r;
    if (distance(p1, p2) <= tol) return Locus::point(p1);
    return Locus::pair(p1, p2);
}

bool satisfies(const Vec3& p, const Vec3& anchor, double dist, double tol) {
    double scale = std::max(1.0, dist);
    return std::abs(distance(p, anchor) - dist) <= tol * scale * 4.0;
}

} // namespace

Locus refine_locus(const Locus& locus, const Vec3& anchor, double dist, int dim, double tol) {
    switch (locus.kind) {
        case Locus::Kind::Whole: {
            if (dist <= tol) return Locus::point(anchor);
            if (dim == 2) return Locus::circle(anchor, Vec3{0, 0, 1}, dist);
            return Locus::sphere(anchor, dist);
        }
        case Locus::Kind::Sphere: {
            Locus out = sphere_sphere(locus.center, locus.radius, anchor, dist, tol);
            return out;
        }
        case Locus::Kind::Circle:
            return circle_sphere(locus, anchor, dist, tol);
        case Locus::Kind::Pair: {
            bool ok1 = satisfies(locus.a, anchor, dist, tol);
            bool ok2 = satisfies(locus.b, anchor, dist, tol);
            if (ok1 && ok2) return locus;
            if (ok1) return Locus::point(locus.a);
            if (ok2) return Locus::point(locus.b);
            return Locus::empty();
        }
        case Locus::Kind::Point:
            return satisfies(locus.a, anchor, dist, tol) ? locus : Locus::empty();
        case Locus::Kind::Empty:
            return locus;
    }
    return Locus::empty();
}

std::pair<double, double> locus_distance_range(const Locus& locus, const Vec3& point) {
    switch (locus.kind) {
        case Locus::Kind::Sphere: {
            double d = distance(locus.center, point);
            return {std::abs(d - locus.radius), d + locus.radius};
        }
        case Locus::Kind::Circle: {
            Vec3 w = point - locus.center;
            double z = w.dot(locus.axis);
            double rho = (w - locus.axis * z).norm();
            double lo = std::sqrt(z * z + (rho - locus.radius) * (rho - locus.radius));
            double hi = std::sqrt(z * z + (rho + locus.radius) * (rho + locus.radius));
            return {lo, hi};
        }
        case Locus::Kind::Pair: {
            double d1 = distance(locus.a, point), d2 = distance(locus.b, point);
            return {std::min(d1, d2), std::max(d1, d2)};
        }
        case Locus::Kind::Point: {
            double d = distance(locus.a, point);
            return {d, d};
        }
        default:
            return {0.0, -1.0}; // unbounded / undefined
    }
}

std::vector<Vec3> circle_intersection(const Vec3& c1, double r1, const Vec3& c2, double r2, double tol) {
    if (r1 < 0 || r2 < 0) fail(ErrorCode::BadParameter, "circle radii must be nonnegative");
    double d = distance(c1, c2);
    if (d <= tol && std::abs(r1 - r2) <= tol) {
        if (r1 <= tol) return {c1};
        fail(ErrorCode::Degenerate, "coincident circles with equal radius intersect in a continuum");
    }
    Locus l = refine_locus(Locus::whole(), c1, r1, 2, tol);
    l = refine_locus(l, c2, r2, 2, tol);
    switch (l.kind) {
        case Locus::Kind::Point: return {l.a};
        case Locus::Kind::Pair: return {l.a, l.b};
        default: return {};
    }
}

namespace {

double det(std::vector<std::vector<double>> m) {
    int n = static_cast<int>(m.size());
    double result = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        double best = 0.0;
        for (int r = col; r < n; ++r)
            if (std::abs(m[static_cast<size_t>(r)][static_cast<size_t>(col)]) > best) {
                best = std::abs(m[static_cast<size_t>(r)][static_cast<size_t>(col)]);
                pivot = r;
            }
        if (pivot < 0 || best == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(col)]);
            result = -result;
        }
        result *= m[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int r = col + 1; r < n; ++r) {
            double factor = m[static_cast<size_t>(r)][static_cast<size_t>(col)] / m[static_cast<size_t>(col)][static_cast<size_t>(col)];
            for (int c = col; c < n; ++c)
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] -= factor * m[static_cast<size_t>(col)][static_cast<size_t>(c)];
        }
    }
    return result;
}

double cm_det(const std::vector<double>& sq, int points) {
    // bordered matrix: row/col 0 of ones (0 at corner), then squared distances
    std::vector<std::vector<double>> m(static_cast<size_t>(points + 1),
                                       std::vector<double>(static_cast<size_t>(points + 1), 1.0));
    m[0][0] = 0.0;
    size_t idx = 0;
    for (int i = 0; i < points; ++i) {
        m[static_cast<size_t>(i + 1)][static_cast<size_t>(i + 1)] = 0.0;
        for (int j = i + 1; j < points; ++j) {
            m[static_cast<size_t>(i + 1)][static_cast<size_t>(j + 1)] = sq[idx];
            m[static_cast<size_t>(j + 1)][static_cast<size_t>(i + 1)] = sq[idx];
            ++idx;
        }
    }
    return det(std::move(m));
}

} // namespace

CmReport cm_feasible(const std::vector<double>& squared, int d, double rel_tol) {
    if (d != 2 && d != 3) fail(ErrorCode::UnsupportedDimension, "Cayley-Menger test supports d = 2 or 3");
    size_t expected = d == 2 ? 3 : 6;
    if (squared.size() != expected) fail(ErrorCode::BadParameter, "wrong number of squared distances");
    for (double s : squared)
        if (s < 0.0 || !std::isfinite(s)) fail(ErrorCode::BadParameter, "squared distances must be nonnegative");

    double scale = 1.0;
    for (double s : squared) scale = std::max(scale, s);

    if (d == 2) {
        double dd = cm_det(squared, 3);
        double tol = rel_tol * scale * scale * scale;
        bool ok = dd <= tol;
        double area2 = std::max(0.0, -dd / 16.0);
        return {ok, std::sqrt(area2)};
    }
    // d == 3: the top determinant must be nonnegative and every face must span
    double dd = cm_det(squared, 4);
    double tol = rel_tol * scale * scale * scale * scale;
    bool ok = dd >= -tol;
    static const int faces[4][3] = {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}};
    for (const auto& face : faces) {
        std::vector<double> tri{squared[static_cast<size_t>(face[0])], squared[static_cast<size_t>(face[1])],
                                squared[static_cast<size_t>(face[2])]};
        if (!cm_feasible(tri, 2, rel_tol).feasible) ok = false;
    }
    double vol2 = std::max(0.0, dd / 288.0);
    return {ok, std::sqrt(vol2)};
}

} // namespace ccs
