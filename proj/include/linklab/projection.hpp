#pragma once

#include <algorithm>
#include <optional>
#include <tuple>
#include <vector>

#include "linklab/embedding.hpp"
#include "linklab/geom.hpp"

namespace linklab {

inline constexpr int kProjectionRetryBudget = 64;
inline constexpr std::uint64_t kDirectionSeed = 0x51c6e5u;

/// Deterministic stream of integer projection directions. Non-generic
/// directions are measure-zero; consumers skip them and draw the next one,
/// up to kProjectionRetryBudget.
class DirectionSequence {
public:
    explicit DirectionSequence(std::uint64_t seed = kDirectionSeed) : rng_(seed) {}

    Vec3 next() {
        for (;;) {
            const auto pick = [&] { return Rational(rng_.range(-997, 997)); };
            Vec3 d{pick(), pick(), pick()};
            if (!is_zero(d)) return d;
        }
    }

private:
    Rng rng_;
};

struct ProjectionBasis {
    Vec3 dir, u, v;  // (u, v, dir) right-handed; image coords are (u.P, v.P)
};

inline ProjectionBasis make_projection_basis(const Vec3& dir) {
    if (is_zero(dir)) throw InvalidArgument("projection: zero direction");
    const Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const Vec3& e : axes) {
        const Vec3 u = cross(dir, e);
        if (!is_zero(u)) return {dir, u, cross(dir, u)};
    }
    throw InvalidArgument("projection: zero direction");
}

// ---------------------------------------------------------------------------
// 2D closed-segment intersection, exact.

enum class Meet2D { kNone, kPoint, kOverlap };

struct Meet2DResult {
    Meet2D kind = Meet2D::kNone;
    Point2 point;  // set when kind == kPoint
};

inline bool on_segment_2d_collinear(const Point2& p, const Point2& a, const Point2& b) {
    return detail::on_segment_1d(a.x, b.x, p.x) && detail::on_segment_1d(a.y, b.y, p.y);
}

inline Meet2DResult segment_meet_2d(const Point2& a, const Point2& b, const Point2& c,
                                    const Point2& d) {
    const Vec2 u = b - a;
    const Vec2 v = d - c;
    const bool u0 = (u.x == 0 && u.y == 0), v0 = (v.x == 0 && v.y == 0);
    if (u0 && v0) {
        if (a == c) return {Meet2D::kPoint, a};
        return {};
    }
    if (u0) {
        if (cross2(v, a - c) == 0 && on_segment_2d_collinear(a, c, d)) return {Meet2D::kPoint, a};
        return {};
    }
    if (v0) {
        if (cross2(u, c - a) == 0 && on_segment_2d_collinear(c, a, b)) return {Meet2D::kPoint, c};
        return {};
    }

    const Rational denom = cross2(u, v);
    if (denom == 0) {
        if (cross2(u, c - a) != 0) return {};  // parallel, apart
        // Collinear: interval arithmetic along u.
        const Rational uu = u.x * u.x + u.y * u.y;
        Rational tc = ((c.x - a.x) * u.x + (c.y - a.y) * u.y) / uu;
        Rational td = ((d.x - a.x) * u.x + (d.y - a.y) * u.y) / uu;
        if (tc > td) std::swap(tc, td);
        const Rational lo = tc > 0 ? tc : Rational(0);
        const Rational hi = td < 1 ? td : Rational(1);
        if (lo > hi) return {};
        const Point2 p{a.x + lo * u.x, a.y + lo * u.y};
        if (lo == hi) return {Meet2D::kPoint, p};
        return {Meet2D::kOverlap, p};
    }

    const Rational s = cross2(c - a, v) / denom;
    const Rational t = cross2(c - a, u) / denom;
    if (s < 0 || s > 1 || t < 0 || t > 1) return {};
    return {Meet2D::kPoint, {a.x + s * u.x, a.y + s * u.y}};
}

/// Parameter of p along [a,b], assuming p is on the segment and a != b.
inline Rational param_on_segment_2d(const Point2& p, const Point2& a, const Point2& b) {
    if (a.x != b.x) return (p.x - a.x) / (b.x - a.x);
    return (p.y - a.y) / (b.y - a.y);
}

// ---------------------------------------------------------------------------
// Diagrams

struct DiagramEnd {
    int component = 0;
    int segment = 0;  // index i: segment pts[i] -> pts[(i+1) % size]
    Rational param;   // position along the segment, in (0,1)
};

struct DiagramCrossing {
    DiagramEnd over, under;
    int sign = 0;
    Point2 point;
};

/// Generic planar projection of disjoint closed polylines: projected
/// components plus every transverse double point with over/under and sign.
struct Diagram {
    Vec3 direction;
    std::vector<std::vector<Point2>> components;  // closed; last->first implicit
    std::vector<DiagramCrossing> crossings;

    int crossing_count() const { return static_cast<int>(crossings.size()); }

    int inter_component_crossings(int c1, int c2) const {
        int n = 0;
        for (const auto& cr : crossings) {
            const int x = cr.over.component, y = cr.under.component;
            if ((x == c1 && y == c2) || (x == c2 && y == c1)) ++n;
        }
        return n;
    }
};

namespace detail {

struct ProjectedComponent {
    std::vector<Point2> pts;
    std::vector<Rational> depth;
};

inline ProjectedComponent project_component(const Polyline3& pl, const ProjectionBasis& basis) {
    ProjectedComponent out;
    out.pts.reserve(pl.size());
    out.depth.reserve(pl.size());
    for (const Point3& p : pl) {
        out.pts.push_back({dot(basis.u, p), dot(basis.v, p)});
        out.depth.push_back(dot(basis.dir, p));
    }
    return out;
}

/// Crossing sign per the right-handed convention: +1 when the over-strand
/// direction rotated by -90 degrees aligns with the under-strand direction.
inline int crossing_sign(const Vec2& over_dir, const Vec2& under_dir) {
    const Rational aligned = over_dir.y * under_dir.x - over_dir.x * under_dir.y;
    if (aligned == 0) throw InternalError("crossing_sign: strands not transverse");
    return aligned > 0 ? 1 : -1;
}

}  // namespace detail

/// Projects closed polylines along `dir` and records every crossing. Throws
/// NonGenericDirection on any degeneracy: a segment parallel to the
/// direction, endpoint incidences, overlaps, coincident vertices, or triple
/// points.
inline Diagram project_polylines(const std::vector<Polyline3>& polys, const Vec3& dir) {
    const ProjectionBasis basis = make_projection_basis(dir);
    Diagram dg;
    dg.direction = dir;

    std::vector<detail::ProjectedComponent> comps;
    comps.reserve(polys.size());
    for (const auto& pl : polys) {
        if (pl.size() < 3) throw InvalidArgument("project: component with fewer than 3 points");
        comps.push_back(detail::project_component(pl, basis));
    }

    // Degenerate segments (parallel to dir).
    for (const auto& c : comps) {
        const size_t n = c.pts.size();
        for (size_t i = 0; i < n; ++i)
            if (c.pts[i] == c.pts[(i + 1) % n])
                throw NonGenericDirection("segment parallel to projection direction");
    }

    // Vertex-over-vertex.
    std::vector<Point2> all_pts;
    for (const auto& c : comps) all_pts.insert(all_pts.end(), c.pts.begin(), c.pts.end());
    {
        std::vector<Point2> sorted = all_pts;
        std::sort(sorted.begin(), sorted.end(), [](const Point2& a, const Point2& b) {
            return a.x < b.x || (a.x == b.x && a.y < b.y);
        });
        for (size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i] == sorted[i + 1])
                throw NonGenericDirection("two vertices project to the same point");
    }

    // Segment pairs.
    const int ncomp = static_cast<int>(comps.size());
    for (int ci = 0; ci < ncomp; ++ci) {
        const auto& A = comps[ci];
        const size_t an = A.pts.size();
        for (int cj = ci; cj < ncomp; ++cj) {
            const auto& B = comps[cj];
            const size_t bn = B.pts.size();
            for (size_t i = 0; i < an; ++i) {
                const size_t j0 = (ci == cj) ? i + 1 : 0;
                for (size_t j = j0; j < bn; ++j) {
                    const bool adjacent =
                        ci == cj && (j == (i + 1) % an || i == (j + 1) % bn);
                    const Point2 &p1 = A.pts[i], &q1 = A.pts[(i + 1) % an];
                    const Point2 &p2 = B.pts[j], &q2 = B.pts[(j + 1) % bn];
                    const Meet2DResult m = segment_meet_2d(p1, q1, p2, q2);
                    if (m.kind == Meet2D::kNone) continue;
                    if (m.kind == Meet2D::kOverlap)
                        throw NonGenericDirection("projected segments overlap");
                    if (adjacent) {
                        // Segments sharing a 3D endpoint may only share its image.
                        const Point2& shared = (j == (i + 1) % an) ? q1 : p1;
                        if (m.point == shared) continue;
                        throw NonGenericDirection("adjacent segments touch away from their joint");
                    }
                    if (m.point == p1 || m.point == q1 || m.point == p2 || m.point == q2)
                        throw NonGenericDirection("projected vertex lies on another strand");

                    // Transverse interior double point: resolve depth order.
                    const Rational s = param_on_segment_2d(m.point, p1, q1);
                    const Rational t = param_on_segment_2d(m.point, p2, q2);
                    const Rational da =
                        A.depth[i] + s * (A.depth[(i + 1) % an] - A.depth[i]);
                    const Rational db =
                        B.depth[j] + t * (B.depth[(j + 1) % bn] - B.depth[j]);
                    if (da == db) throw InternalError("project: strands intersect in 3-space");

                    DiagramEnd ea{ci, static_cast<int>(i), s};
                    DiagramEnd eb{cj, static_cast<int>(j), t};
                    const Vec2 dira = q1 - p1, dirb = q2 - p2;
                    DiagramCrossing cr;
                    if (da > db) {
                        cr.over = ea;
                        cr.under = eb;
                        cr.sign = detail::crossing_sign(dira, dirb);
                    } else {
                        cr.over = eb;
                        cr.under = ea;
                        cr.sign = detail::crossing_sign(dirb, dira);
                    }
                    cr.point = m.point;
                    dg.crossings.push_back(cr);
                }
            }
        }
    }

    // Triple points: two distinct crossings sharing an image point.
    for (size_t i = 0; i < dg.crossings.size(); ++i)
        for (size_t j = i + 1; j < dg.crossings.size(); ++j)
            if (dg.crossings[i].point == dg.crossings[j].point)
                throw NonGenericDirection("triple point in projection");

    const auto key = [](const DiagramEnd& e) {
        return std::make_tuple(e.component, e.segment, e.param);
    };
    std::sort(dg.crossings.begin(), dg.crossings.end(),
              [&](const DiagramCrossing& a, const DiagramCrossing& b) {
                  return std::min(key(a.over), key(a.under)) < std::min(key(b.over), key(b.under));
              });

    for (const auto& c : comps) dg.components.push_back(c.pts);
    return dg;
}

/// Diagram of the given cycles of an embedding (pairwise vertex-disjoint).
inline Diagram project(const Embedding& e, const std::vector<Cycle>& cycles, const Vec3& dir) {
    for (size_t i = 0; i < cycles.size(); ++i)
        for (size_t j = i + 1; j < cycles.size(); ++j)
            if (!cycles[i].vertex_disjoint(cycles[j]))
                throw InvalidArgument("project: cycles must be vertex-disjoint");
    std::vector<Polyline3> polys;
    polys.reserve(cycles.size());
    for (const auto& c : cycles) polys.push_back(e.cycle_polyline(c));
    return project_polylines(polys, dir);
}

// ---------------------------------------------------------------------------
// Linking number

/// Signed inter-component crossing sum for one fixed direction, halved.
/// Only inter-component degeneracies reject the direction: self-crossings of
/// either curve never contribute to the sum, so their genericity is
/// irrelevant here. Exact; throws NonGenericDirection when the count is not
/// well defined.
inline BigInt linking_number_directed(const Polyline3& c1, const Polyline3& c2, const Vec3& dir) {
    const ProjectionBasis basis = make_projection_basis(dir);
    const detail::ProjectedComponent A = detail::project_component(c1, basis);
    const detail::ProjectedComponent B = detail::project_component(c2, basis);
    const size_t an = A.pts.size(), bn = B.pts.size();

    BigInt sum = 0;
    int count = 0;
    for (size_t i = 0; i < an; ++i) {
        const Point2 &p1 = A.pts[i], &q1 = A.pts[(i + 1) % an];
        for (size_t j = 0; j < bn; ++j) {
            const Point2 &p2 = B.pts[j], &q2 = B.pts[(j + 1) % bn];
            const Meet2DResult m = segment_meet_2d(p1, q1, p2, q2);
            if (m.kind == Meet2D::kNone) continue;
            if (m.kind == Meet2D::kOverlap)
                throw NonGenericDirection("projected strands overlap");
            if (m.point == p1 || m.point == q1 || m.point == p2 || m.point == q2)
                throw NonGenericDirection("projected vertex touches the other strand");
            const Rational s = param_on_segment_2d(m.point, p1, q1);
            const Rational t = param_on_segment_2d(m.point, p2, q2);
            const Rational da = A.depth[i] + s * (A.depth[(i + 1) % an] - A.depth[i]);
            const Rational db = B.depth[j] + t * (B.depth[(j + 1) % bn] - B.depth[j]);
            if (da == db) throw InternalError("linking_number: curves intersect in 3-space");
            const Vec2 dira = q1 - p1, dirb = q2 - p2;
            const int sign = da > db ? detail::crossing_sign(dira, dirb)
                                     : detail::crossing_sign(dirb, dira);
            sum += sign;
            ++count;
        }
    }
    if (count % 2 != 0)
        throw InternalError("linking_number: odd inter-component crossing count");
    if (sum % 2 != 0) throw InternalError("linking_number: odd signed crossing sum");
    return sum / 2;
}

/// Linking number of two disjoint closed polylines: retries deterministic
/// directions until one is generic.
inline BigInt linking_number(const Polyline3& c1, const Polyline3& c2,
                             std::uint64_t dir_seed = kDirectionSeed) {
    DirectionSequence seq(dir_seed);
    for (int attempt = 0; attempt < kProjectionRetryBudget; ++attempt) {
        try {
            return linking_number_directed(c1, c2, seq.next());
        } catch (const NonGenericDirection&) {
        }
    }
    throw NonGenericDirection("linking_number: no generic direction within budget");
}

/// Linking number of two vertex-disjoint cycles of an embedding.
inline BigInt linking_number(const Embedding& e, const Cycle& c1, const Cycle& c2) {
    if (!c1.vertex_disjoint(c2))
        throw InvalidArgument("linking_number: cycles share a vertex");
    return linking_number(e.cycle_polyline(c1), e.cycle_polyline(c2));
}

// ---------------------------------------------------------------------------
// Single-component diagrams (input to the knot certificates)

/// Projection of one closed polyline with internal direction retries.
inline Diagram gauss_data(const Polyline3& c, std::uint64_t dir_seed = kDirectionSeed) {
    DirectionSequence seq(dir_seed);
    for (int attempt = 0; attempt < kProjectionRetryBudget; ++attempt) {
        try {
            return project_polylines({c}, seq.next());
        } catch (const NonGenericDirection&) {
        }
    }
    throw NonGenericDirection("gauss_data: no generic direction within budget");
}

/// Projection of one cycle of an embedding, crossings in traversal order.
inline Diagram gauss_data(const Embedding& e, const Cycle& c,
                          std::uint64_t dir_seed = kDirectionSeed) {
    return gauss_data(e.cycle_polyline(c), dir_seed);
}

}  // namespace linklab
