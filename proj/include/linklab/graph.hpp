#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "linklab/common.hpp"

namespace linklab {

/// Finite simple graph. Vertex ids are dense 0..n-1; labels are a side table,
/// so gluing and contraction are pure index surgery. No loops, no parallel
/// edges; operations that would create them merge/delete on the spot.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    int add_vertex(std::string label = "") {
        adj_.emplace_back();
        if (!label.empty()) labels_[vertex_count() - 1] = std::move(label);
        return vertex_count() - 1;
    }

    bool has_vertex(int v) const { return v >= 0 && v < vertex_count(); }

    bool has_edge(int u, int v) const {
        if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
        const auto& nu = adj_[u];
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    void add_edge(int u, int v) {
        if (!has_vertex(u) || !has_vertex(v)) throw InvalidArgument("add_edge: no such vertex");
        if (u == v) throw InvalidArgument("add_edge: self-loops are not representable");
        if (has_edge(u, v)) return;
        adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
        adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
        ++edge_count_;
    }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    std::string label(int v) const {
        const auto it = labels_.find(v);
        return it == labels_.end() ? std::string() : it->second;
    }
    void set_label(int v, std::string label) {
        if (!has_vertex(v)) throw InvalidArgument("set_label: no such vertex");
        if (label.empty())
            labels_.erase(v);
        else
            labels_[v] = std::move(label);
    }
    const std::map<int, std::string>& labels() const { return labels_; }

    /// Returns the vertex carrying the given label, or -1.
    int vertex_with_label(const std::string& label) const {
        for (const auto& [v, l] : labels_)
            if (l == label) return v;
        return -1;
    }

    /// Normalized (u < v), lexicographically sorted edge list.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count_);
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& o) const {
        return adj_ == o.adj_ && labels_ == o.labels_;
    }

    int connected_components() const {
        const int n = vertex_count();
        std::vector<int> comp(n, -1);
        int count = 0;
        for (int s = 0; s < n; ++s) {
            if (comp[s] != -1) continue;
            std::vector<int> stack{s};
            comp[s] = count;
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                for (int w : adj_[v]) {
                    if (comp[w] == -1) {
                        comp[w] = count;
                        stack.push_back(w);
                    }
                }
            }
            ++count;
        }
        return count;
    }

private:
    std::vector<std::vector<int>> adj_;  // each list kept sorted
    std::map<int, std::string> labels_;
    int edge_count_ = 0;
};

/// Oriented simple cycle, stored as the vertex sequence. Reversal of the
/// sequence is the same cycle with the opposite orientation.
struct Cycle {
    std::vector<int> verts;

    Cycle() = default;
    explicit Cycle(std::vector<int> v) : verts(std::move(v)) {}

    int length() const { return static_cast<int>(verts.size()); }

    bool contains(int v) const { return std::find(verts.begin(), verts.end(), v) != verts.end(); }

    bool vertex_disjoint(const Cycle& o) const {
        for (int v : verts)
            if (o.contains(v)) return false;
        return true;
    }

    Cycle reversed() const {
        Cycle r = *this;
        std::reverse(r.verts.begin(), r.verts.end());
        return r;
    }

    /// True iff the sequence is a simple cycle of g (length >= 3, distinct
    /// vertices, consecutive pairs adjacent, closing edge present).
    bool valid_in(const Graph& g) const {
        const int n = length();
        if (n < 3) return false;
        std::set<int> seen(verts.begin(), verts.end());
        if (static_cast<int>(seen.size()) != n) return false;
        for (int i = 0; i < n; ++i)
            if (!g.has_edge(verts[i], verts[(i + 1) % n])) return false;
        return true;
    }

    /// Canonical key: lexicographically minimal rotation, orientation chosen
    /// by the smaller successor of the minimal vertex. Identifies the cycle
    /// up to rotation and reflection, for deduplication.
    std::vector<int> canonical_key() const {
        const int n = length();
        const auto min_it = std::min_element(verts.begin(), verts.end());
        const int at = static_cast<int>(min_it - verts.begin());
        std::vector<int> fwd(n), bwd(n);
        for (int i = 0; i < n; ++i) {
            fwd[i] = verts[(at + i) % n];
            bwd[i] = verts[(at - i % n + n) % n];
        }
        return fwd <= bwd ? fwd : bwd;
    }

    bool operator==(const Cycle& o) const { return canonical_key() == o.canonical_key(); }
    bool operator<(const Cycle& o) const { return canonical_key() < o.canonical_key(); }
};

// ---------------------------------------------------------------------------
// Builders

inline Graph complete_graph(int n) {
    if (n < 1) throw InvalidArgument("complete_graph: n must be >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph complete_multipartite(const std::vector<int>& part_sizes) {
    int n = 0;
    for (int s : part_sizes) {
        if (s < 1) throw InvalidArgument("complete_multipartite: part sizes must be >= 1");
        n += s;
    }
    Graph g(n);
    std::vector<int> part_of(n);
    int v = 0;
    for (int p = 0; p < static_cast<int>(part_sizes.size()); ++p)
        for (int i = 0; i < part_sizes[p]; ++i) part_of[v++] = p;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part_of[u] != part_of[w]) g.add_edge(u, w);
    return g;
}

/// K_{3,3,1}: parts {0,1,2}, {3,4,5} and the cone vertex 6.
inline Graph k331() { return complete_multipartite({3, 3, 1}); }
inline constexpr int kK331Cone = 6;

// ---------------------------------------------------------------------------
// Gluing

struct GlueResult {
    Graph graph;
    std::vector<int> map1;  // vertex of g1 -> vertex of result
    std::vector<int> map2;  // vertex of g2 -> vertex of result
};

/// Disjoint union of g1 and g2 with each (v1, v2) pair identified to one
/// vertex. Parallel edges produced by the identification are merged. Labels
/// of g1 win on identified vertices.
inline GlueResult glue(const Graph& g1, const Graph& g2,
                       const std::vector<std::pair<int, int>>& ident) {
    std::set<int> left, right;
    for (const auto& [v1, v2] : ident) {
        if (!g1.has_vertex(v1) || !g2.has_vertex(v2)) throw InvalidArgument("glue: id out of range");
        if (!left.insert(v1).second || !right.insert(v2).second)
            throw InvalidArgument("glue: identification list must be injective on both sides");
    }

    GlueResult r;
    r.map1.resize(g1.vertex_count());
    std::iota(r.map1.begin(), r.map1.end(), 0);
    r.map2.assign(g2.vertex_count(), -1);
    for (const auto& [v1, v2] : ident) r.map2[v2] = v1;

    Graph g(g1.vertex_count());
    for (const auto& [v, l] : g1.labels()) g.set_label(v, l);
    for (int v2 = 0; v2 < g2.vertex_count(); ++v2) {
        if (r.map2[v2] != -1) continue;
        r.map2[v2] = g.add_vertex(g2.label(v2));
    }
    for (const auto& [u, v] : g1.edges()) g.add_edge(u, v);
    for (const auto& [u, v] : g2.edges()) g.add_edge(r.map2[u], r.map2[v]);
    r.graph = std::move(g);
    return r;
}

// ---------------------------------------------------------------------------
// Contraction

/// Map from each original vertex to its image in the contracted graph.
struct ContractionMap {
    std::vector<int> image;

    int operator()(int v) const { return image.at(v); }
};

struct ContractionResult {
    Graph graph;
    ContractionMap map;
};

/// Merges a connected vertex set to a single vertex; self-loops and parallel
/// edges are deleted. The merged vertex keeps the label of the lowest labeled
/// member, and remaining ids are re-densified in order.
inline ContractionResult contract_vertex_set(const Graph& g, const std::vector<int>& merge) {
    if (merge.empty()) throw InvalidArgument("contract_vertex_set: empty set");
    std::set<int> mset(merge.begin(), merge.end());
    for (int v : mset)
        if (!g.has_vertex(v)) throw InvalidArgument("contract_vertex_set: id out of range");

    // Connectivity of the induced subgraph keeps ContractionMap preimages
    // connected, which is what makes the quotient a minor.
    std::set<int> seen;
    std::vector<int> stack{*mset.begin()};
    seen.insert(*mset.begin());
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (mset.count(w) && !seen.count(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        }
    }
    if (seen.size() != mset.size())
        throw InvalidArgument("contract_vertex_set: set does not induce a connected subgraph");

    ContractionResult r;
    r.map.image.assign(g.vertex_count(), -1);
    int next = 0;
    const int merged_id = [&] {
        int id = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (mset.count(v)) {
                if (id == -1) id = next++;
                r.map.image[v] = id;
            } else {
                r.map.image[v] = next++;
            }
        }
        for (int v : mset) return r.map.image[v];
        return id;
    }();

    Graph out(next);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const std::string l = g.label(v);
        if (!l.empty() && out.label(r.map.image[v]).empty()) out.set_label(r.map.image[v], l);
    }
    for (const auto& [u, v] : g.edges()) {
        const int iu = r.map.image[u], iv = r.map.image[v];
        if (iu != iv) out.add_edge(iu, iv);
    }
    (void)merged_id;
    r.graph = std::move(out);
    return r;
}

/// Contracts a whole cycle to a single vertex.
inline ContractionResult contract_cycle(const Graph& g, const Cycle& cyc) {
    if (!cyc.valid_in(g)) throw InvalidArgument("contract_cycle: not a cycle of the graph");
    return contract_vertex_set(g, cyc.verts);
}

/// Induced subgraph on the given vertices (order preserved; ids re-densified).
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::map<int, int> idx;
    Graph out;
    for (int v : verts) {
        if (!g.has_vertex(v)) throw InvalidArgument("induced_subgraph: id out of range");
        if (idx.count(v)) throw InvalidArgument("induced_subgraph: duplicate vertex");
        idx[v] = out.add_vertex(g.label(v));
    }
    for (const auto& [u, v] : g.edges()) {
        const auto iu = idx.find(u), iv = idx.find(v);
        if (iu != idx.end() && iv != idx.end()) out.add_edge(iu->second, iv->second);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cycle enumeration

/// Visits every simple cycle of length <= max_len containing `path` as a
/// contiguous subsequence, each exactly once, in a deterministic DFS order
/// (ascending neighbor ids). Visitor returns false to stop the search.
inline void for_each_cycle_through_path(const Graph& g, const std::vector<int>& path, int max_len,
                                        const std::function<bool(const Cycle&)>& visit) {
    if (path.size() < 2) throw InvalidArgument("cycle search: path needs at least 2 vertices");
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1]))
            throw InvalidArgument("cycle search: path edge missing from graph");
    {
        std::set<int> distinct(path.begin(), path.end());
        if (distinct.size() != path.size())
            throw InvalidArgument("cycle search: path repeats a vertex");
    }
    if (max_len < static_cast<int>(path.size())) return;

    const int start = path.front();
    const int tail = path.back();
    std::vector<char> used(g.vertex_count(), 0);
    for (int v : path) used[v] = 1;

    std::vector<int> walk(path);
    bool stop = false;

    std::function<void(int)> dfs = [&](int v) {
        if (stop) return;
        if (v != tail && g.has_edge(v, start) && static_cast<int>(walk.size()) >= 3) {
            if (!visit(Cycle(walk))) {
                stop = true;
                return;
            }
        }
        if (static_cast<int>(walk.size()) == max_len) return;
        for (int w : g.neighbors(v)) {
            if (used[w]) continue;
            used[w] = 1;
            walk.push_back(w);
            dfs(w);
            walk.pop_back();
            used[w] = 0;
            if (stop) return;
        }
    };

    // Special case: the path itself already closes into a cycle.
    if (path.size() >= 3 && g.has_edge(tail, start)) {
        if (!visit(Cycle(walk))) return;
    }
    dfs(tail);
}

/// All simple cycles of length <= max_len containing `path` contiguously,
/// deduplicated up to rotation/reflection, in canonical order.
inline std::vector<Cycle> enumerate_cycles_through_path(const Graph& g, const std::vector<int>& path,
                                                        int max_len) {
    std::set<std::vector<int>> seen;
    std::vector<Cycle> out;
    for_each_cycle_through_path(g, path, max_len, [&](const Cycle& c) {
        if (seen.insert(c.canonical_key()).second) out.push_back(c);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// All simple cycles of exactly the given length, canonical order.
inline std::vector<Cycle> simple_cycles_of_length(const Graph& g, int len) {
    if (len < 3) return {};
    std::set<std::vector<int>> seen;
    std::vector<Cycle> out;
    std::vector<int> walk;
    std::vector<char> used(g.vertex_count(), 0);

    std::function<void(int, int)> dfs = [&](int start, int v) {
        if (static_cast<int>(walk.size()) == len) {
            if (g.has_edge(v, start)) {
                Cycle c(walk);
                if (seen.insert(c.canonical_key()).second) out.push_back(c);
            }
            return;
        }
        for (int w : g.neighbors(v)) {
            if (used[w] || w < start) continue;  // start stays the minimum: kills rotations
            used[w] = 1;
            walk.push_back(w);
            dfs(start, w);
            walk.pop_back();
            used[w] = 0;
        }
    };

    for (int s = 0; s < g.vertex_count(); ++s) {
        used[s] = 1;
        walk.assign(1, s);
        dfs(s, s);
        used[s] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All unordered pairs of vertex-disjoint simple cycles with lengths
/// (len_a, len_b), in canonical order.
inline std::vector<std::pair<Cycle, Cycle>> disjoint_cycle_pairs(const Graph& g, int len_a, int len_b) {
    const std::vector<Cycle> as = simple_cycles_of_length(g, len_a);
    const std::vector<Cycle> bs = (len_a == len_b) ? as : simple_cycles_of_length(g, len_b);
    std::vector<std::pair<Cycle, Cycle>> out;
    for (size_t i = 0; i < as.size(); ++i) {
        const size_t j0 = (len_a == len_b) ? i + 1 : 0;
        for (size_t j = j0; j < bs.size(); ++j) {
            if (as[i].vertex_disjoint(bs[j])) out.emplace_back(as[i], bs[j]);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism (small graphs only; permutation search with a degree prefilter)

inline bool isomorphic(const Graph& a, const Graph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto degs = [](const Graph& g) {
        std::vector<int> d(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return false;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (a.degree(u) != b.degree(perm[u])) ok = false;
            for (int v = u + 1; v < n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace linklab
