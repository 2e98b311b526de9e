#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "linklab/constructions.hpp"
#include "linklab/knots.hpp"
#include "linklab/projection.hpp"

namespace linklab {

/// A measured value contradicts a classical theorem. Always a bug in the
/// geometry stack; surfaced loudly and mapped to its own exit code by the CLI.
struct TheoremContradiction : InternalError {
    using InternalError::InternalError;
};

inline bool is_complete(const Graph& g, int n) {
    return g.vertex_count() == n && g.edge_count() == n * (n - 1) / 2;
}

// ---------------------------------------------------------------------------
// Classical checksums on sampled embeddings

/// Sum of lk mod 2 over the 10 disjoint triangle pairs of K6, reduced mod 2.
/// Equals 1 for every embedding; any 0 is a geometry-stack bug.
inline int cg_k6_checksum(const Embedding& e) {
    if (!is_complete(e.graph, 6)) throw InvalidArgument("cg_k6_checksum: host must be K6");
    const auto pairs = disjoint_cycle_pairs(e.graph, 3, 3);
    if (pairs.size() != 10) throw InternalError("cg_k6_checksum: expected 10 disjoint triangle pairs");
    BigInt sum = 0;
    for (const auto& [t1, t2] : pairs) sum += linking_number(e, t1, t2) % 2;
    return static_cast<int>(sum % 2 == 0 ? 0 : 1);
}

struct LinkedTrianglePair {
    Cycle first, second;  // first contains the required vertex when one was given
    BigInt lk;            // odd
};

/// A disjoint triangle pair of K6 with odd linking number; existence is
/// theorem-backed, so exhaustive search cannot fail on correct geometry.
inline LinkedTrianglePair find_linked_triangles_k6(const Embedding& e,
                                                   std::optional<int> required_vertex = {}) {
    if (!is_complete(e.graph, 6))
        throw InvalidArgument("find_linked_triangles_k6: host must be K6");
    for (const auto& [t1, t2] : disjoint_cycle_pairs(e.graph, 3, 3)) {
        const BigInt lk = linking_number(e, t1, t2);
        if (lk % 2 == 0) continue;
        LinkedTrianglePair out{t1, t2, lk};
        if (required_vertex && !out.first.contains(*required_vertex)) std::swap(out.first, out.second);
        return out;
    }
    throw TheoremContradiction("find_linked_triangles_k6: no odd pair in an embedding of K6");
}

struct TriangleSquarePair {
    Cycle triangle, square;
    BigInt lk;  // nonzero
    bool triangle_contains_cone = false;
};

/// A vertex-disjoint triangle/square pair of K_{3,3,1} with nonzero linking
/// number (exhaustive over all pairs; existence is theorem-backed).
inline TriangleSquarePair find_triangle_square_k331(const Embedding& e) {
    if (!isomorphic(e.graph, k331()))
        throw InvalidArgument("find_triangle_square_k331: host must be K_{3,3,1}");
    int cone = -1;
    for (int v = 0; v < e.graph.vertex_count(); ++v)
        if (e.graph.degree(v) == 6) cone = v;
    for (const auto& [t, s] : disjoint_cycle_pairs(e.graph, 3, 4)) {
        const BigInt lk = linking_number(e, t, s);
        if (lk == 0) continue;
        return {t, s, lk, cone >= 0 && t.contains(cone)};
    }
    throw TheoremContradiction("find_triangle_square_k331: no linked pair in an embedding of K_{3,3,1}");
}

/// Sum of the Arf invariant over all 360 Hamiltonian cycles of K7, mod 2.
/// Equals 1 for every embedding. Candidate cycles may be evaluated on up to
/// max_threads workers; results are merged by cycle index, so the value is
/// independent of scheduling.
inline int k7_arf_checksum(const Embedding& e, int max_threads = 1) {
    if (!is_complete(e.graph, 7)) throw InvalidArgument("k7_arf_checksum: host must be K7");
    const std::vector<Cycle> hams = simple_cycles_of_length(e.graph, 7);
    if (hams.size() != 360) throw InternalError("k7_arf_checksum: expected 360 Hamiltonian cycles");

    std::vector<int> arf(hams.size(), 0);
    const auto work = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) arf[i] = arf_invariant(gauss_data(e, hams[i]));
    };
    const int threads = std::max(1, std::min<int>(max_threads, static_cast<int>(hams.size())));
    if (threads == 1) {
        work(0, hams.size());
    } else {
        std::vector<std::thread> pool;
        const size_t chunk = (hams.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const size_t lo = t * chunk;
            const size_t hi = std::min(hams.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    int sum = 0;
    for (int a : arf) sum ^= a;
    return sum;
}

// ---------------------------------------------------------------------------
// Knotted-cycle search

struct KnottedCycleSearch {
    bool found = false;
    Cycle cycle;
    KnotCertificate certificate;
    int certificates_computed = 0;
    std::vector<BigInt> determinants_seen;  // one per candidate examined
};

/// First enumerated cycle through the path whose certificate comes back
/// certified-knotted, or not-found once the certificate budget is exhausted.
/// Detection is one-sided: not-found is never evidence of unknottedness.
inline KnottedCycleSearch find_knotted_cycle_through_path(const Embedding& e,
                                                          const std::vector<int>& path, int max_len,
                                                          int budget) {
    KnottedCycleSearch out;
    for_each_cycle_through_path(e.graph, path, max_len, [&](const Cycle& c) {
        if (out.certificates_computed >= budget) return false;
        const KnotCertificate cert = certify_knotted(gauss_data(e, c));
        ++out.certificates_computed;
        out.determinants_seen.push_back(cert.determinant);
        if (cert.knotted()) {
            out.found = true;
            out.cycle = c;
            out.certificate = cert;
            return false;
        }
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// The ten-copy pipeline

struct Theorem1Report {
    struct CopySearch {
        int copy = 0;
        bool found = false;
        Cycle cycle;  // in host ids
        KnotCertificate certificate;
        int certificates_computed = 0;
        std::vector<BigInt> determinants_seen;
    };

    std::vector<CopySearch> copies;
    bool all_copies_found = false;
    bool contraction_ran = false;
    bool quotient_is_k6 = false;
    int expanded_checksum = -1;  // CG checksum over expanded pairs; -1 when not run
    bool found_link = false;
    Cycle knotted_cycle, partner_cycle;
    BigInt lk;
    KnotCertificate certificate;
    bool contradiction = false;
    std::string status;  // "complete" or "inconclusive:<stage>"
};

namespace detail {

/// The designated cycle of a copy, aligned (a, b, c, arc...), as host ids.
inline std::vector<int> aligned_found_cycle(const Theorem1Report::CopySearch& cs, const CopyImage& ci) {
    return align_cycle_to_path(cs.cycle, ci.a, ci.b, ci.c);
}

/// Path from x to y across a copy's found cycle, avoiding b (the off-path
/// arc, possibly reversed).
inline std::vector<int> copy_arc(const std::vector<int>& aligned, int x, int y) {
    // aligned = (a, b, c, arc...); the off-path arc is c, arc..., a.
    std::vector<int> arc;
    arc.push_back(aligned[2]);
    for (size_t k = 3; k < aligned.size(); ++k) arc.push_back(aligned[k]);
    arc.push_back(aligned[0]);
    if (arc.front() == x && arc.back() == y) return arc;
    std::reverse(arc.begin(), arc.end());
    if (arc.front() == x && arc.back() == y) return arc;
    throw InternalError("copy_arc: endpoints do not match the label edge");
}

}  // namespace detail

/// Best-effort desk-scale replay of the ten-copy argument on an embedding of
/// F(126): per copy, search for a certified-knotted cycle through a_i-b-c_i;
/// contract every found cycle onto its marked triangle and check the labeled
/// quotient is K6; then expand each disjoint label-triangle pair back into
/// the embedding, locate an odd pair through b, and report that link with the
/// knotted component's certificate. Every stage records its status; budget 0
/// leaves all stages inconclusive.
inline Theorem1Report theorem1_pipeline(const Embedding& e, const F126& structure,
                                        int budget_per_copy, int max_len = 15) {
    Theorem1Report rep;
    if (!(e.graph == structure.graph))
        throw InvalidArgument("theorem1_pipeline: embedding host does not match the construction");

    // Stage 1: per-copy knotted-cycle search, restricted to the copy.
    for (size_t i = 0; i < structure.copies.size(); ++i) {
        const CopyImage& ci = structure.copies[i];
        const Graph sub = induced_subgraph(e.graph, ci.vertex_ids);
        std::map<int, int> to_local;
        for (size_t k = 0; k < ci.vertex_ids.size(); ++k)
            to_local[ci.vertex_ids[k]] = static_cast<int>(k);

        Theorem1Report::CopySearch cs;
        cs.copy = static_cast<int>(i);
        for_each_cycle_through_path(
            sub, {to_local.at(ci.a), to_local.at(ci.b), to_local.at(ci.c)}, max_len,
            [&](const Cycle& local) {
                if (cs.certificates_computed >= budget_per_copy) return false;
                Cycle host;
                for (int v : local.verts) host.verts.push_back(ci.vertex_ids[v]);
                const KnotCertificate cert = certify_knotted(gauss_data(e, host));
                ++cs.certificates_computed;
                cs.determinants_seen.push_back(cert.determinant);
                if (cert.knotted()) {
                    cs.found = true;
                    cs.cycle = host;
                    cs.certificate = cert;
                    return false;
                }
                return true;
            });
        rep.copies.push_back(std::move(cs));
    }
    rep.all_copies_found =
        std::all_of(rep.copies.begin(), rep.copies.end(), [](const auto& c) { return c.found; });
    if (!rep.all_copies_found) {
        rep.status = "inconclusive:copy-search";
        return rep;
    }

    // Stage 2: contract each found cycle onto its marked triangle; the
    // labeled quotient must be K6.
    std::vector<Cycle> cycles;
    std::vector<std::array<int, 3>> marks;
    for (size_t i = 0; i < structure.copies.size(); ++i) {
        cycles.push_back(rep.copies[i].cycle);
        marks.push_back({structure.copies[i].a, structure.copies[i].b, structure.copies[i].c});
    }
    const Graph quotient =
        contract_copies_and_restrict(structure.graph, cycles, marks, structure.labeled_vertices());
    rep.contraction_ran = true;
    rep.quotient_is_k6 = is_complete(quotient, 6);
    if (!rep.quotient_is_k6) {
        rep.status = "inconclusive:contraction";
        return rep;
    }

    // Stage 3: expand the 10 disjoint label-triangle pairs of the quotient
    // K6 into the original embedding; their lk parities are those of a K6
    // embedding, so the checksum must be 1 and an odd pair through b exists.
    struct ExpandedPair {
        size_t copy;  // whose cycle realizes the b-triangle
        Cycle partner;
        BigInt lk;
    };
    std::vector<ExpandedPair> expanded;

    const auto copy_for_labels = [&](int x, int y) -> size_t {
        for (size_t i = 0; i < structure.copies.size(); ++i) {
            const auto& ci = structure.copies[i];
            if ((ci.a == x && ci.c == y) || (ci.a == y && ci.c == x)) return i;
        }
        throw InternalError("theorem1_pipeline: no copy realizes a label edge");
    };

    const std::vector<int> labels = structure.labeled_vertices();
    for (size_t p = 0; p < labels.size(); ++p) {
        for (size_t q = p + 1; q < labels.size(); ++q) {
            const int x = labels[p], y = labels[q];
            if (x == structure.b || y == structure.b) continue;
            // b-triangle {b, x, y} expands to the copy's found cycle; the
            // partner triangle is the complementary label set.
            std::vector<int> rest;
            for (int l : labels)
                if (l != structure.b && l != x && l != y) rest.push_back(l);
            if (rest.size() != 3) throw InternalError("theorem1_pipeline: label bookkeeping");

            const size_t kcopy = copy_for_labels(x, y);
            Cycle partner;
            for (int side = 0; side < 3; ++side) {
                const int u = rest[side], v = rest[(side + 1) % 3];
                const auto aligned = detail::aligned_found_cycle(rep.copies[copy_for_labels(u, v)],
                                                                structure.copies[copy_for_labels(u, v)]);
                std::vector<int> arc = detail::copy_arc(aligned, u, v);
                partner.verts.insert(partner.verts.end(), arc.begin(), arc.end() - 1);
            }
            const BigInt lk = linking_number(e, rep.copies[kcopy].cycle, partner);
            expanded.push_back({kcopy, std::move(partner), lk});
        }
    }
    if (expanded.size() != 10) throw InternalError("theorem1_pipeline: expected 10 expanded pairs");

    BigInt checksum = 0;
    for (const auto& ep : expanded) checksum += ep.lk % 2;
    rep.expanded_checksum = (checksum % 2 == 0) ? 0 : 1;
    if (rep.expanded_checksum != 1) {
        rep.contradiction = true;
        rep.status = "contradiction:expanded-checksum";
        return rep;
    }

    for (const auto& ep : expanded) {
        if (ep.lk % 2 == 0) continue;
        rep.found_link = true;
        rep.knotted_cycle = rep.copies[ep.copy].cycle;
        rep.partner_cycle = ep.partner;
        rep.lk = ep.lk;
        rep.certificate = rep.copies[ep.copy].certificate;
        break;
    }
    rep.status = "complete";
    return rep;
}

}  // namespace linklab
