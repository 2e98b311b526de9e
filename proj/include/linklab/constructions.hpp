#pragma once

#include <array>
#include <string>
#include <vector>

#include "linklab/graph.hpp"

namespace linklab {

/// Graph with three distinguished vertices a, b, c such that the edges a-b
/// and b-c exist. The marked path is what the gluings below identify.
struct MarkedGraph {
    Graph graph;
    int a = -1, b = -1, c = -1;

    MarkedGraph() = default;
    MarkedGraph(Graph g, int a_, int b_, int c_) : graph(std::move(g)), a(a_), b(b_), c(c_) {
        validate();
    }

    void validate() const {
        if (a == b || b == c || a == c) throw InvalidArgument("marked graph: marks must be distinct");
        if (!graph.has_vertex(a) || !graph.has_vertex(b) || !graph.has_vertex(c))
            throw InvalidArgument("marked graph: mark id out of range");
        if (!graph.has_edge(a, b) || !graph.has_edge(b, c))
            throw InvalidArgument("marked graph: edges a-b and b-c must exist");
    }
};

// ---------------------------------------------------------------------------
// The graph F: two disjoint K_{3,3,1} copies, an apex vertex b joined to the
// two cone vertices, and a configurable set of middle edges bridging the
// copies. Vertex layout:
//   copy 1: parts {0,1,2}, {3,4,5}, cone 6          (a = 6)
//   copy 2: parts {7,8,9}, {10,11,12}, cone 13      (c = 13)
//   apex b = 14
// The middle-edge set is figure-only in the source construction, so it is a
// parameter here; default_f_middle_edges() is a documented reconstruction.

inline constexpr int kFCopy1Cone = 6;
inline constexpr int kFCopy2Cone = 13;
inline constexpr int kFApex = 14;

/// Reconstruction of the bridging edges: the triangle through a in copy 1 is
/// joined to the square linked with the triangle through c in copy 2, and
/// symmetrically, so that the contraction of F puts those cycles adjacent.
inline std::vector<std::pair<int, int>> default_f_middle_edges() {
    return {{0, 8}, {3, 11}, {1, 7}, {4, 10}};
}

inline MarkedGraph build_F(const std::vector<std::pair<int, int>>& middle_edges) {
    const Graph copy = k331();
    GlueResult two = glue(copy, copy, {});
    Graph g = two.graph;
    const int a = two.map1[kK331Cone];
    const int c = two.map2[kK331Cone];
    const int b = g.add_vertex();
    g.add_edge(a, b);
    g.add_edge(b, c);
    for (const auto& [u, v] : middle_edges) {
        const bool u1 = u >= 0 && u <= 6, v1 = v >= 0 && v <= 6;
        const bool u2 = u >= 7 && u <= 13, v2 = v >= 7 && v <= 13;
        if (!((u1 && v2) || (u2 && v1)))
            throw InvalidArgument("build_F: middle edge must join the two copies");
        g.add_edge(u, v);
    }
    return MarkedGraph(std::move(g), a, b, c);
}

inline MarkedGraph build_F() { return build_F(default_f_middle_edges()); }

// ---------------------------------------------------------------------------
// Glued towers F(126) and F(115)

/// One glued-in copy: where its vertices landed and where its marks landed.
struct CopyImage {
    std::vector<int> vertex_ids;  // image of every vertex of the copy, in copy order
    int a = -1, b = -1, c = -1;   // images of the marks
};

struct F126 {
    Graph graph;
    int a = -1, b = -1;
    std::array<int, 4> c{};  // c1..c4
    std::vector<CopyImage> copies;

    std::vector<int> labeled_vertices() const { return {a, b, c[0], c[1], c[2], c[3]}; }
};

/// Ten copies of f glued along the marked paths: copies 1-4 share the a-b
/// edge; copies 5-10 have their a-b-c path identified onto c_i-b-c_j for the
/// six pairs i<j. For |V(f)| = 15 the result has 10*15 - 24 = 126 vertices.
inline F126 build_F126(const MarkedGraph& f) {
    F126 out;
    auto record = [&](const std::vector<int>& map) {
        CopyImage ci;
        ci.vertex_ids = map;
        ci.a = map[f.a];
        ci.b = map[f.b];
        ci.c = map[f.c];
        out.copies.push_back(std::move(ci));
    };

    Graph acc = f.graph;
    std::vector<int> identity(acc.vertex_count());
    std::iota(identity.begin(), identity.end(), 0);
    record(identity);
    out.a = f.a;
    out.b = f.b;
    out.c[0] = f.c;

    for (int i = 1; i < 4; ++i) {
        GlueResult r = glue(acc, f.graph, {{out.a, f.a}, {out.b, f.b}});
        acc = std::move(r.graph);
        record(r.map2);
        out.c[i] = out.copies.back().c;
    }

    const std::array<std::pair<int, int>, 6> targets{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    for (const auto& [i, j] : targets) {
        GlueResult r = glue(acc, f.graph, {{out.c[i], f.a}, {out.b, f.b}, {out.c[j], f.c}});
        acc = std::move(r.graph);
        record(r.map2);
    }

    out.graph = std::move(acc);
    out.graph.set_label(out.a, "a");
    out.graph.set_label(out.b, "b");
    for (int i = 0; i < 4; ++i) out.graph.set_label(out.c[i], "c" + std::to_string(i + 1));
    return out;
}

struct F115 {
    Graph graph;
    std::array<int, 3> a{};
    int B = -1;
    std::array<int, 3> c{};
    std::vector<CopyImage> copies;

    std::vector<int> labeled_vertices() const { return {a[0], a[1], a[2], B, c[0], c[1], c[2]}; }
};

/// Nine copies of f: the first three share only their b vertex (called B);
/// the remaining six are glued onto the paths a_i-B-c_j with i != j. For
/// |V(f)| = 15 the result has 9*15 - 20 = 115 vertices.
inline F115 build_F115(const MarkedGraph& f) {
    F115 out;
    auto record = [&](const std::vector<int>& map) {
        CopyImage ci;
        ci.vertex_ids = map;
        ci.a = map[f.a];
        ci.b = map[f.b];
        ci.c = map[f.c];
        out.copies.push_back(std::move(ci));
    };

    Graph acc = f.graph;
    std::vector<int> identity(acc.vertex_count());
    std::iota(identity.begin(), identity.end(), 0);
    record(identity);
    out.a[0] = f.a;
    out.B = f.b;
    out.c[0] = f.c;

    for (int i = 1; i < 3; ++i) {
        GlueResult r = glue(acc, f.graph, {{out.B, f.b}});
        acc = std::move(r.graph);
        record(r.map2);
        out.a[i] = out.copies.back().a;
        out.c[i] = out.copies.back().c;
    }

    const std::array<std::pair<int, int>, 6> targets{{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}};
    for (const auto& [i, j] : targets) {
        GlueResult r = glue(acc, f.graph, {{out.a[i], f.a}, {out.B, f.b}, {out.c[j], f.c}});
        acc = std::move(r.graph);
        record(r.map2);
    }

    out.graph = std::move(acc);
    for (int i = 0; i < 3; ++i) {
        out.graph.set_label(out.a[i], "a" + std::to_string(i + 1));
        out.graph.set_label(out.c[i], "c" + std::to_string(i + 1));
    }
    out.graph.set_label(out.B, "B");
    return out;
}

// ---------------------------------------------------------------------------
// Contraction of the towers down to their labeled quotients.
//
// Each copy's designated cycle runs a_i -> b_i -> c_i -> (arc back to a_i).
// Collapsing the off-path arc to a single edge turns the cycle into the
// triangle (a_i, b_i, c_i); doing this for every copy and restricting to the
// labeled vertices yields K6 (for F(126)) or K_{3,3,1} (for F(115)).
// Note the cycles all share the vertex b, so contracting each cycle to a
// *point* would merge the labels; collapsing the arcs is the operation that
// realizes the picture.

/// Rotates/flips cyc so it reads (a, b, c, arc...). Throws if the cycle does
/// not traverse the marked path contiguously.
inline std::vector<int> align_cycle_to_path(const Cycle& cyc, int a, int b, int c) {
    const int n = cyc.length();
    for (int dir = 0; dir < 2; ++dir) {
        const Cycle& cc = dir == 0 ? cyc : cyc.reversed();
        for (int i = 0; i < n; ++i) {
            if (cc.verts[i] == a && cc.verts[(i + 1) % n] == b && cc.verts[(i + 2) % n] == c) {
                std::vector<int> out(n);
                for (int k = 0; k < n; ++k) out[k] = cc.verts[(i + k) % n];
                return out;
            }
        }
    }
    throw InvalidArgument("cycle does not contain the marked a-b-c path");
}

/// Collapses the arc of cyc running from c back to a (the side avoiding b)
/// into the vertex c, so the cycle becomes the triangle a-b-c. Graph ids are
/// re-densified; the returned map sends old ids to new ones.
inline ContractionResult contract_cycle_to_marked_triangle(const Graph& g, const Cycle& cyc, int a,
                                                           int b, int c) {
    const std::vector<int> aligned = align_cycle_to_path(cyc, a, b, c);
    std::vector<int> merge{c};
    for (size_t k = 3; k < aligned.size(); ++k) merge.push_back(aligned[k]);
    if (merge.size() == 1) {
        // Already a triangle; nothing to collapse.
        ContractionResult r;
        r.graph = g;
        r.map.image.resize(g.vertex_count());
        std::iota(r.map.image.begin(), r.map.image.end(), 0);
        return r;
    }
    return contract_vertex_set(g, merge);
}

/// Collapses one designated cycle per copy (cycles[i] belongs to copy i with
/// marks (a_i, b, c_i)) and returns the induced subgraph on the labeled
/// vertices. `marks` supplies the per-copy mark triples; `labels` the final
/// restriction set.
inline Graph contract_copies_and_restrict(const Graph& g, const std::vector<Cycle>& cycles,
                                          const std::vector<std::array<int, 3>>& marks,
                                          const std::vector<int>& labels) {
    if (cycles.size() != marks.size())
        throw InvalidArgument("contract_copies_and_restrict: one cycle per copy required");
    Graph cur = g;
    std::vector<int> where(g.vertex_count());
    std::iota(where.begin(), where.end(), 0);

    for (size_t i = 0; i < cycles.size(); ++i) {
        Cycle moved;
        moved.verts.reserve(cycles[i].verts.size());
        for (int v : cycles[i].verts) moved.verts.push_back(where[v]);
        if (!moved.valid_in(cur))
            throw InvalidArgument("contract_copies_and_restrict: designated cycle invalid");
        ContractionResult r = contract_cycle_to_marked_triangle(
            cur, moved, where[marks[i][0]], where[marks[i][1]], where[marks[i][2]]);
        cur = std::move(r.graph);
        for (int v = 0; v < g.vertex_count(); ++v) where[v] = r.map.image[where[v]];
    }

    std::vector<int> restricted;
    restricted.reserve(labels.size());
    for (int v : labels) restricted.push_back(where[v]);
    return induced_subgraph(cur, restricted);
}

// ---------------------------------------------------------------------------
// The four-cycle chain graph (the contraction of F).
//
// Four designated cycles in a row -- triangle 1 through a, squares 2 and 3,
// triangle 4 through c -- joined by single edges 1-2, 2-3, 3-4, plus the apex
// path a-b-c bridging the end cycles. The attachment pattern of cycles 2 and
// 3 is a reconstruction (the source picture is figure-only).

struct D4 {
    MarkedGraph marked;
    std::array<Cycle, 4> cycles;
};

inline D4 build_D4() {
    Graph g(15);
    const int a = 0, b = 14, c = 11;
    auto triangle = [&](int u, int v, int w) {
        g.add_edge(u, v);
        g.add_edge(v, w);
        g.add_edge(w, u);
    };
    triangle(0, 1, 2);  // cycle 1 (contains a)
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(6, 3);  // cycle 2
    g.add_edge(7, 8);
    g.add_edge(8, 9);
    g.add_edge(9, 10);
    g.add_edge(10, 7);  // cycle 3
    triangle(11, 12, 13);  // cycle 4 (contains c)
    g.add_edge(a, b);
    g.add_edge(b, c);
    g.add_edge(2, 3);   // 1 - 2
    g.add_edge(5, 7);   // 2 - 3
    g.add_edge(9, 12);  // 3 - 4

    D4 d;
    d.marked = MarkedGraph(std::move(g), a, b, c);
    d.cycles = {Cycle({0, 1, 2}), Cycle({3, 4, 5, 6}), Cycle({7, 8, 9, 10}), Cycle({11, 12, 13})};
    return d;
}

}  // namespace linklab
