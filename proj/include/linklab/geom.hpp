#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "linklab/common.hpp"

namespace linklab {

/// Exact rational point/vector in 3-space. Every predicate downstream of this
/// type is exact; floating point never decides anything.
struct Point3 {
    Rational x, y, z;

    bool operator==(const Point3&) const = default;
};

using Vec3 = Point3;

inline Vec3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator+(const Point3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator*(const Rational& s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

inline Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline bool is_zero(const Vec3& v) { return v.x == 0 && v.y == 0 && v.z == 0; }

/// Signed volume (x6) of the tetrahedron (a,b,c,d). Zero iff coplanar.
inline Rational orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    return dot(b - a, cross(c - a, d - a));
}

struct Point2 {
    Rational x, y;

    bool operator==(const Point2&) const = default;
};

using Vec2 = Point2;

inline Vec2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Rational cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// Closed polyline; pts[i] -> pts[i+1] with a final segment back to pts[0].
using Polyline3 = std::vector<Point3>;

/// How two closed segments meet.
enum class SegMeet {
    kDisjoint,
    kPoint,    // a single common point (endpoint touch or transverse crossing)
    kOverlap,  // collinear with a shared sub-segment of positive length
};

struct SegMeetResult {
    SegMeet kind = SegMeet::kDisjoint;
    Point3 point;  // set when kind == kPoint
};

namespace detail {

inline bool on_segment_1d(const Rational& a, const Rational& b, const Rational& x) {
    return (a <= x && x <= b) || (b <= x && x <= a);
}

inline bool point_on_segment_collinear(const Point3& p, const Point3& a, const Point3& b) {
    return on_segment_1d(a.x, b.x, p.x) && on_segment_1d(a.y, b.y, p.y) && on_segment_1d(a.z, b.z, p.z);
}

}  // namespace detail

/// True iff p lies on the closed segment [a,b].
inline bool point_on_segment(const Point3& p, const Point3& a, const Point3& b) {
    if (!is_zero(cross(b - a, p - a))) return false;
    return detail::point_on_segment_collinear(p, a, b);
}

/// Exact intersection of closed segments [a,b] and [c,d] in 3-space.
inline SegMeetResult segment_meet(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    const Vec3 u = b - a;
    const Vec3 v = d - c;
    const Vec3 w = c - a;

    // Degenerate inputs (zero-length segments) reduce to point membership.
    if (is_zero(u)) {
        if (is_zero(v)) {
            if (a == c) return {SegMeet::kPoint, a};
            return {};
        }
        if (point_on_segment(a, c, d)) return {SegMeet::kPoint, a};
        return {};
    }
    if (is_zero(v)) {
        if (point_on_segment(c, a, b)) return {SegMeet::kPoint, c};
        return {};
    }

    const Vec3 n = cross(u, v);
    if (is_zero(n)) {
        // Parallel. Either collinear or strictly apart.
        if (!is_zero(cross(u, w))) return {};
        // Collinear: solve on the line through a with direction u.
        const Rational uu = dot(u, u);
        Rational tc = dot(c - a, u) / uu;
        Rational td = dot(d - a, u) / uu;
        if (tc > td) std::swap(tc, td);
        const Rational lo = tc > 0 ? tc : Rational(0);
        const Rational hi = td < 1 ? td : Rational(1);
        if (lo > hi) return {};
        if (lo == hi) return {SegMeet::kPoint, a + lo * u};
        return {SegMeet::kOverlap, a + lo * u};
    }

    // Skew unless coplanar.
    if (dot(w, n) != 0) return {};

    // Coplanar, non-parallel lines: a unique line-line intersection point.
    const Rational nn = dot(n, n);
    const Rational s = dot(cross(w, v), n) / nn;  // along [a,b]
    const Rational t = dot(cross(w, u), n) / nn;  // along [c,d]
    if (s < 0 || s > 1 || t < 0 || t > 1) return {};
    return {SegMeet::kPoint, a + s * u};
}

/// Axis-aligned box prefilter for segment pairs.
struct Box3 {
    Rational lo[3], hi[3];

    static Box3 of_segment(const Point3& a, const Point3& b) {
        Box3 box;
        const Rational* pa[3] = {&a.x, &a.y, &a.z};
        const Rational* pb[3] = {&b.x, &b.y, &b.z};
        for (int i = 0; i < 3; ++i) {
            box.lo[i] = *pa[i] < *pb[i] ? *pa[i] : *pb[i];
            box.hi[i] = *pa[i] < *pb[i] ? *pb[i] : *pa[i];
        }
        return box;
    }

    bool touches(const Box3& o) const {
        for (int i = 0; i < 3; ++i) {
            if (hi[i] < o.lo[i] || o.hi[i] < lo[i]) return false;
        }
        return true;
    }
};

}  // namespace linklab
