#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "linklab/geom.hpp"
#include "linklab/graph.hpp"

namespace linklab {

/// Piecewise-linear embedding: vertices at exact rational points, edges as
/// straight segments, optionally subdivided into polylines (used to host the
/// knot fixtures).
struct Embedding {
    Graph graph;
    std::vector<Point3> position;                              // by vertex id
    std::map<std::pair<int, int>, std::vector<Point3>> subdivisions;  // key u<v, points u->v

    /// Polyline realizing edge u-v, oriented u -> v, endpoints included.
    Polyline3 edge_polyline(int u, int v) const {
        if (!graph.has_edge(u, v)) throw InvalidArgument("edge_polyline: no such edge");
        Polyline3 pl{position[u]};
        const auto key = std::minmax(u, v);
        const auto it = subdivisions.find({key.first, key.second});
        if (it != subdivisions.end()) {
            if (u < v)
                pl.insert(pl.end(), it->second.begin(), it->second.end());
            else
                pl.insert(pl.end(), it->second.rbegin(), it->second.rend());
        }
        pl.push_back(position[v]);
        return pl;
    }

    /// Closed polyline tracing the cycle in its stored orientation. The last
    /// point is NOT repeated; the closing segment is implicit.
    Polyline3 cycle_polyline(const Cycle& c) const {
        if (!c.valid_in(graph)) throw InvalidArgument("cycle_polyline: not a cycle of the host");
        Polyline3 out;
        const int n = c.length();
        for (int i = 0; i < n; ++i) {
            Polyline3 e = edge_polyline(c.verts[i], c.verts[(i + 1) % n]);
            out.insert(out.end(), e.begin(), e.end() - 1);
        }
        return out;
    }
};

struct GeneralPositionViolation {
    std::string what;
};

namespace detail {

struct EmbeddedSegment {
    Point3 a, b;
    int edge_u, edge_v;  // host edge (u < v)
    Box3 box;
};

inline std::vector<EmbeddedSegment> all_segments(const Embedding& e) {
    std::vector<EmbeddedSegment> segs;
    for (const auto& [u, v] : e.graph.edges()) {
        const Polyline3 pl = e.edge_polyline(u, v);
        for (size_t i = 0; i + 1 < pl.size(); ++i)
            segs.push_back({pl[i], pl[i + 1], u, v, Box3::of_segment(pl[i], pl[i + 1])});
    }
    return segs;
}

}  // namespace detail

/// Exact general-position audit: distinct vertex positions, no two edge
/// polylines meeting anywhere except at shared graph vertices, no vertex in
/// the interior of a non-incident segment. Violations are data, not errors.
inline std::vector<GeneralPositionViolation> validate_general_position(const Embedding& e) {
    std::vector<GeneralPositionViolation> out;
    const int n = e.graph.vertex_count();
    if (static_cast<int>(e.position.size()) != n) {
        out.push_back({"position table size does not match vertex count"});
        return out;
    }

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (e.position[u] == e.position[v])
                out.push_back({"vertices " + std::to_string(u) + " and " + std::to_string(v) +
                               " share a position"});

    const auto segs = detail::all_segments(e);

    // Segment pairs: within one edge polyline, consecutive segments share an
    // interior subdivision point (fine); across edges, only a shared graph
    // vertex position may be touched.
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            const auto& s = segs[i];
            const auto& t = segs[j];
            if (!s.box.touches(t.box)) continue;
            const SegMeetResult m = segment_meet(s.a, s.b, t.a, t.b);
            if (m.kind == SegMeet::kDisjoint) continue;
            if (m.kind == SegMeet::kOverlap) {
                out.push_back({"overlapping segments on edges " + std::to_string(s.edge_u) + "-" +
                               std::to_string(s.edge_v) + " and " + std::to_string(t.edge_u) + "-" +
                               std::to_string(t.edge_v)});
                continue;
            }
            const bool same_edge = s.edge_u == t.edge_u && s.edge_v == t.edge_v;
            bool allowed = false;
            if (same_edge) {
                // Consecutive pieces of one polyline may share one endpoint.
                allowed = (m.point == s.b && m.point == t.a) || (m.point == s.a && m.point == t.b);
            } else {
                for (int w : {s.edge_u, s.edge_v})
                    for (int x : {t.edge_u, t.edge_v})
                        if (w == x && m.point == e.position[w]) allowed = true;
            }
            if (!allowed)
                out.push_back({"edges " + std::to_string(s.edge_u) + "-" + std::to_string(s.edge_v) +
                               " and " + std::to_string(t.edge_u) + "-" + std::to_string(t.edge_v) +
                               " intersect away from a shared vertex"});
        }
    }

    // Vertices against non-incident segments (interior incidences).
    for (int v = 0; v < n; ++v) {
        for (const auto& s : segs) {
            if (v == s.edge_u || v == s.edge_v) continue;
            if (point_on_segment(e.position[v], s.a, s.b))
                out.push_back({"vertex " + std::to_string(v) + " lies on edge " +
                               std::to_string(s.edge_u) + "-" + std::to_string(s.edge_v)});
        }
    }
    return out;
}

inline constexpr int kEmbeddingRetryBudget = 64;

/// Deterministic random straight-line embedding: integer positions drawn
/// uniformly from [0, span]^3, whole draws rejected until the embedding is in
/// general position.
inline Embedding random_embedding(const Graph& g, std::uint64_t seed, int span) {
    if (span < 1) throw InvalidArgument("random_embedding: span must be positive");
    Rng rng(seed);
    for (int attempt = 0; attempt < kEmbeddingRetryBudget; ++attempt) {
        Embedding e;
        e.graph = g;
        e.position.reserve(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            const auto draw = [&] { return Rational(static_cast<long long>(rng.below(span + 1))); };
            const Rational x = draw(), y = draw(), z = draw();
            e.position.push_back({x, y, z});
        }
        if (validate_general_position(e).empty()) return e;
    }
    throw ResourceExhausted("random_embedding: no general-position draw within budget (span " +
                            std::to_string(span) + ")");
}

}  // namespace linklab
