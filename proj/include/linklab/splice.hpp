#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "linklab/projection.hpp"
#include "linklab/sequences.hpp"

namespace linklab {

// ---------------------------------------------------------------------------
// Pigeonhole selection

struct ZeroSumSelection {
    std::vector<int> indices;  // 0-based, ascending
    BigInt sum;                // > 0 and == 0 mod n
    enum class Kind { kPrefix, kWindow } kind = Kind::kPrefix;
    int j1 = 0, j2 = 0;  // window case: S_{j1} == S_{j2}, indices are [j1, j2)
};

/// Among the prefix sums S_1..S_n of n positive values, either some S_j is
/// 0 mod n (take the prefix) or two are equal mod n (take the window between
/// them, whose sum is 0 mod n and positive).
inline ZeroSumSelection select_zero_sum_window(const std::vector<BigInt>& values, int n) {
    if (static_cast<int>(values.size()) != n)
        throw InvalidArgument("select_zero_sum_window: need exactly n values");
    if (n < 1) throw InvalidArgument("select_zero_sum_window: n must be positive");
    for (const auto& v : values)
        if (v <= 0) throw InvalidArgument("select_zero_sum_window: values must be positive");

    std::vector<BigInt> prefix(n + 1, 0);
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + values[i];

    ZeroSumSelection sel;
    for (int j = 1; j <= n; ++j) {
        if (prefix[j] % n == 0) {
            sel.kind = ZeroSumSelection::Kind::kPrefix;
            sel.j1 = 0;
            sel.j2 = j;
            for (int i = 0; i < j; ++i) sel.indices.push_back(i);
            sel.sum = prefix[j];
            return sel;
        }
    }
    for (int j2 = 2; j2 <= n; ++j2) {
        for (int j1 = 1; j1 < j2; ++j1) {
            if ((prefix[j2] - prefix[j1]) % n == 0) {
                sel.kind = ZeroSumSelection::Kind::kWindow;
                sel.j1 = j1;
                sel.j2 = j2;
                for (int i = j1; i < j2; ++i) sel.indices.push_back(i);
                sel.sum = prefix[j2] - prefix[j1];
                return sel;
            }
        }
    }
    throw InternalError("select_zero_sum_window: pigeonhole failed");
}

/// Indices floor(k * size / count) for k = 0..count-1; distinct when
/// size >= count, spaced at least floor(size / count) apart.
inline std::vector<int> evenly_spaced_marks(int cycle_size, int count) {
    if (count < 1) throw InvalidArgument("evenly_spaced_marks: count must be positive");
    if (cycle_size < count)
        throw InvalidArgument("evenly_spaced_marks: cycle shorter than mark count");
    std::vector<int> out(count);
    for (int k = 0; k < count; ++k)
        out[k] = static_cast<int>((static_cast<long long>(k) * cycle_size) / count);
    return out;
}

inline std::vector<int> evenly_spaced_marks(const Cycle& c, int count) {
    return evenly_spaced_marks(c.length(), count);
}

// ---------------------------------------------------------------------------
// Scenes

struct SceneCycle {
    int id = 0;
    Polyline3 pts;  // closed, orientation = traversal order
    BigInt lk;      // measured lk(base, cycle) under the stored orientation
    int pairings_used = 0;

    int size() const { return static_cast<int>(pts.size()); }
};

/// An embedding fragment: the base cycle L, disjoint companion cycles, and
/// the routing state for connector edges synthesized between them.
struct SpliceScene {
    Polyline3 base;  // L
    std::vector<SceneCycle> cycles;
    int next_cycle_id = 0;
    Rational clearance_z;  // everything placed so far has z < clearance_z
    std::uint64_t jitter_seed = 1;
};

namespace detail {

inline Rational max_z(const Polyline3& pl) {
    Rational m = pl.empty() ? Rational(0) : pl.front().z;
    for (const auto& p : pl)
        if (p.z > m) m = p.z;
    return m;
}

struct SegmentPool {
    std::vector<std::pair<Point3, Point3>> segs;
    std::vector<Box3> boxes;

    void add(const Polyline3& pl) {
        const size_t n = pl.size();
        for (size_t i = 0; i < n; ++i) {
            const Point3 &a = pl[i], &b = pl[(i + 1) % n];
            segs.emplace_back(a, b);
            boxes.push_back(Box3::of_segment(a, b));
        }
    }

    void add_open(const std::vector<Point3>& pts) {
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            segs.emplace_back(pts[i], pts[i + 1]);
            boxes.push_back(Box3::of_segment(pts[i], pts[i + 1]));
        }
    }

    /// True iff segment [a,b] touches the pool anywhere except the allowed
    /// points (each allowed point may be met only exactly at itself).
    bool collides(const Point3& a, const Point3& b, const std::vector<Point3>& allowed) const {
        const Box3 box = Box3::of_segment(a, b);
        for (size_t i = 0; i < segs.size(); ++i) {
            if (!box.touches(boxes[i])) continue;
            const SegMeetResult m = segment_meet(a, b, segs[i].first, segs[i].second);
            if (m.kind == SegMeet::kDisjoint) continue;
            if (m.kind == SegMeet::kOverlap) return true;
            bool ok = false;
            for (const auto& p : allowed)
                if (m.point == p) ok = true;
            if (!ok) return true;
        }
        return false;
    }
};

}  // namespace detail

inline constexpr int kConnectorRetryBudget = 64;

/// Routes a connector from p to q: straight first, then over the top of the
/// scene through two waypoints at a fresh altitude, with deterministic
/// jitter. Returns the interior waypoints (empty for a straight connector).
inline std::vector<Point3> route_connector(const detail::SegmentPool& obstacles, const Point3& p,
                                           const Point3& q, const Rational& altitude,
                                           std::uint64_t jitter_key) {
    const std::vector<Point3> endpoints{p, q};
    if (!obstacles.collides(p, q, endpoints)) return {};

    Rng rng(jitter_key);
    for (int attempt = 0; attempt < kConnectorRetryBudget; ++attempt) {
        const auto jitter = [&] { return Rational(rng.range(-3 - attempt, 3 + attempt)); };
        const Point3 w1{p.x + jitter(), p.y + jitter(), altitude + Rational(attempt)};
        const Point3 w2{q.x + jitter(), q.y + jitter(), altitude + Rational(attempt)};
        if (w1.x == w2.x && w1.y == w2.y) continue;
        if (obstacles.collides(p, w1, {p}) || obstacles.collides(w1, w2, {}) ||
            obstacles.collides(w2, q, {q}))
            continue;
        // The three legs must not touch each other beyond shared waypoints.
        if (segment_meet(p, w1, w2, q).kind != SegMeet::kDisjoint) continue;
        return {w1, w2};
    }
    throw ResourceExhausted("route_connector: no collision-free route within budget");
}

// ---------------------------------------------------------------------------
// The A_i construction

/// The n+1 hybrid cycles spliced from a pair (z1, z2), plus the bookkeeping
/// needed to assemble unions of consecutive ones. Mark t on z1 is joined to
/// mark t on z2 by connector t; A_i runs
///   z1: mark i -> mark i+1, connector i+1, z2: mark i+1 -> mark i
/// (z2 marks are labeled counter to its orientation, so the z2 legs run with
/// the orientation and the total class is [z1] + [z2]).
struct ACycleFamily {
    int n = 0;                                 // modulus; n+1 cycles
    const SceneCycle* z1 = nullptr;
    const SceneCycle* z2 = nullptr;
    std::vector<int> marks1;                   // ascending indices on z1
    std::vector<int> marks2_at_label;          // z2 index for label t
    std::vector<std::vector<Point3>> connectors;  // interior waypoints per label
    std::vector<Polyline3> a;                  // A_0..A_n
    std::vector<BigInt> a_lk;                  // measured lk(A_i, L)

    /// Closed polyline of the union of the consecutive block [s, e) of A
    /// cycles (cyclic indices, 1 <= size <= n).
    Polyline3 union_block(int s, int e) const {
        const int m = n + 1;
        const int size = ((e - s) % m + m) % m;
        if (size < 1 || size > n) throw InvalidArgument("union_block: block must be proper");
        Polyline3 out;
        const auto& P = z1->pts;
        const auto& Q = z2->pts;
        const int np = static_cast<int>(P.size());
        const int nq = static_cast<int>(Q.size());
        const int i1 = marks1[s % m], i2 = marks1[e % m];
        for (int i = i1;; i = (i + 1) % np) {
            out.push_back(P[i]);
            if (i == i2) break;
        }
        const auto& ce = connectors[e % m];
        out.insert(out.end(), ce.begin(), ce.end());
        const int j1 = marks2_at_label[e % m], j2 = marks2_at_label[s % m];
        for (int j = j1;; j = (j + 1) % nq) {
            out.push_back(Q[j]);
            if (j == j2) break;
        }
        const auto& cs = connectors[s % m];
        out.insert(out.end(), cs.rbegin(), cs.rend());
        return out;
    }
};

/// Edge multiset symmetric difference of the block's A cycles, checked to
/// form one simple closed walk matching `expected`. Guards the step that
/// replaces two cycles by a union.
inline bool union_is_single_cycle(const ACycleFamily& fam, int s, int e, const Polyline3& expected) {
    const int m = fam.n + 1;
    const int size = ((e - s) % m + m) % m;
    using Key = std::pair<std::vector<std::string>, std::vector<std::string>>;
    const auto key_of = [](const Point3& a, const Point3& b) {
        std::vector<std::string> ka{format_rational(a.x), format_rational(a.y), format_rational(a.z)};
        std::vector<std::string> kb{format_rational(b.x), format_rational(b.y), format_rational(b.z)};
        return ka < kb ? Key(ka, kb) : Key(kb, ka);
    };
    std::map<Key, int> count;
    for (int t = 0; t < size; ++t) {
        const Polyline3 ai = fam.union_block((s + t) % m, (s + t + 1) % m);
        const size_t an = ai.size();
        for (size_t i = 0; i < an; ++i) count[key_of(ai[i], ai[(i + 1) % an])] ^= 1;
    }
    std::map<Key, int> expect;
    const size_t en = expected.size();
    for (size_t i = 0; i < en; ++i) expect[key_of(expected[i], expected[(i + 1) % en])] ^= 1;
    std::erase_if(count, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(expect, [](const auto& kv) { return kv.second == 0; });
    return count == expect;
}

/// Builds the n+1 A cycles for the pair (z1, z2) in the scene. Connectors are
/// validated against the base cycle, every cycle in the scene, and each
/// other; the homology identity sum lk(A_i, L) = lk(z1, L) + lk(z2, L) is
/// verified exactly before returning.
inline ACycleFamily build_a_cycles(SpliceScene& scene, const SceneCycle& z1, const SceneCycle& z2,
                                   int n) {
    if (n < 1) throw InvalidArgument("build_a_cycles: modulus must be >= 1");
    if (z1.size() < n + 1 || z2.size() < n + 1)
        throw InvalidArgument("build_a_cycles: cycles must carry at least n+1 vertices");

    ACycleFamily fam;
    fam.n = n;
    fam.z1 = &z1;
    fam.z2 = &z2;
    fam.marks1 = evenly_spaced_marks(z1.size(), n + 1);
    const std::vector<int> m2 = evenly_spaced_marks(z2.size(), n + 1);
    fam.marks2_at_label.resize(n + 1);
    fam.marks2_at_label[0] = m2[0];
    for (int t = 1; t <= n; ++t) fam.marks2_at_label[t] = m2[n + 1 - t];

    detail::SegmentPool pool;
    pool.add(scene.base);
    pool.add(z1.pts);
    pool.add(z2.pts);
    for (const auto& c : scene.cycles)
        if (c.id != z1.id && c.id != z2.id) pool.add(c.pts);

    Rational altitude = scene.clearance_z;
    fam.connectors.resize(n + 1);
    for (int t = 0; t <= n; ++t) {
        const Point3& p = z1.pts[fam.marks1[t]];
        const Point3& q = z2.pts[fam.marks2_at_label[t]];
        altitude += 8;
        fam.connectors[t] =
            route_connector(pool, p, q, altitude, scene.jitter_seed ^ (0x9e3779b97f4a7c15ull * (t + 1)));
        std::vector<Point3> route{p};
        route.insert(route.end(), fam.connectors[t].begin(), fam.connectors[t].end());
        route.push_back(q);
        pool.add_open(route);
        for (const auto& w : fam.connectors[t])
            if (w.z >= altitude) altitude = w.z;
    }
    scene.clearance_z = altitude + 8;

    BigInt total = 0;
    for (int i = 0; i <= n; ++i) {
        fam.a.push_back(fam.union_block(i, (i + 1) % (n + 1)));
        fam.a_lk.push_back(linking_number(fam.a.back(), scene.base));
        total += fam.a_lk.back();
    }
    if (total != z1.lk + z2.lk)
        throw InternalError("build_a_cycles: homology identity violated (sum lk(A_i) != lk(z1)+lk(z2))");
    return fam;
}

// ---------------------------------------------------------------------------
// The reduction

struct SpliceStepRecord {
    int step = 0;
    int id1 = 0, id2 = 0;
    int size1 = 0, size2 = 0;
    BigInt lk1, lk2;
    std::vector<BigInt> a_lk;
    std::string outcome;  // prefix-replace | prefix-exit | window-exit | window-replace
    int block_start = 0, block_end = 0;  // A-index block [s, e) that was kept
    BigInt new_lk;
    int new_id = -1;
    int new_size = 0;
    int pairings_used = 0;
    BigInt j_sum_after;
};

struct JState {
    int n = 0;
    BigInt expected_sum;  // constant across non-exit steps; kn with k != 0
    std::vector<SpliceStepRecord> history;
};

struct SpliceStepOutcome {
    bool early_exit = false;
    SceneCycle exit_cycle;  // valid when early_exit
};

namespace detail {

/// Pairing order: fewest pairings first (round structure, which is what
/// caps every lineage at ceil(log2 n) pairings), then largest vertex count,
/// ties by lowest id.
inline std::pair<int, int> pick_pair(const std::vector<SceneCycle>& cycles) {
    const auto better = [](const SceneCycle& a, const SceneCycle& b) {
        if (a.pairings_used != b.pairings_used) return a.pairings_used < b.pairings_used;
        if (a.size() != b.size()) return a.size() > b.size();
        return a.id < b.id;
    };
    int best = 0;
    for (int i = 1; i < static_cast<int>(cycles.size()); ++i)
        if (better(cycles[i], cycles[best])) best = i;
    int second = best == 0 ? 1 : 0;
    for (int i = 0; i < static_cast<int>(cycles.size()); ++i) {
        if (i == best) continue;
        if (better(cycles[i], cycles[second])) second = i;
    }
    return {std::min(best, second), std::max(best, second)};
}

}  // namespace detail

/// One pairing step: splice the two largest cycles into n+1 hybrids, examine
/// partial sums, and either early-exit with a cycle whose class is a nonzero
/// multiple of n or replace the pair, keeping the integer J-sum unchanged.
inline SpliceStepOutcome splice_step(SpliceScene& scene, JState& state) {
    if (scene.cycles.size() < 2) throw InvalidArgument("splice_step: need at least two cycles in J");
    const int n = state.n;
    const auto [ia, ib] = detail::pick_pair(scene.cycles);

    // Move the pair out of the scene: their arcs are building material, not
    // obstacles (connector endpoints lie on them).
    SceneCycle z1 = scene.cycles[ia];
    SceneCycle z2 = scene.cycles[ib];
    scene.cycles.erase(scene.cycles.begin() + ib);
    scene.cycles.erase(scene.cycles.begin() + ia);

    SpliceStepRecord rec;
    rec.step = static_cast<int>(state.history.size());
    rec.id1 = z1.id;
    rec.id2 = z2.id;
    rec.size1 = z1.size();
    rec.size2 = z2.size();
    rec.lk1 = z1.lk;
    rec.lk2 = z2.lk;

    const ACycleFamily fam = build_a_cycles(scene, z1, z2, n);
    rec.a_lk = fam.a_lk;

    const BigInt pair_sum = z1.lk + z2.lk;
    std::vector<BigInt> T(n + 2, 0);
    for (int j = 1; j <= n + 1; ++j) T[j] = T[j - 1] + fam.a_lk[j - 1];

    const auto mod_n = [&](const BigInt& x) {
        BigInt r = x % n;
        if (r < 0) r += n;
        return r;
    };

    // Vertex growth bound: with both inputs of size >= (n+1) m, every hybrid
    // and every union carries at least 2m+2 points.
    const int m_bound = std::min(z1.size(), z2.size()) / (n + 1);
    for (const auto& a : fam.a)
        if (static_cast<int>(a.size()) < 2 * m_bound + 2)
            throw InternalError("splice_step: hybrid cycle below the 2m+2 vertex bound");

    const auto finish_block = [&](int s, int e, const char* outcome, bool exit_with_it,
                                  const BigInt& predicted) -> SpliceStepOutcome {
        Polyline3 u = fam.union_block(s, e);
        if (!union_is_single_cycle(fam, s, e, u))
            throw InternalError("splice_step: block union is not a single cycle");
        if (static_cast<int>(u.size()) < 2 * m_bound + 2)
            throw InternalError("splice_step: replacement cycle below the 2m+2 vertex bound");
        const BigInt measured = linking_number(u, scene.base);
        if (measured != predicted)
            throw InternalError("splice_step: union lk disagrees with partial-sum bookkeeping");

        SceneCycle made;
        made.id = scene.next_cycle_id++;
        made.pts = std::move(u);
        made.lk = measured;
        made.pairings_used = std::max(z1.pairings_used, z2.pairings_used) + 1;

        rec.outcome = outcome;
        rec.block_start = s;
        rec.block_end = e;
        rec.new_lk = made.lk;
        rec.new_id = made.id;
        rec.new_size = made.size();
        rec.pairings_used = made.pairings_used;

        SpliceStepOutcome out;
        if (exit_with_it) {
            out.early_exit = true;
            out.exit_cycle = std::move(made);
            rec.j_sum_after = out.exit_cycle.lk;
        } else {
            scene.cycles.push_back(std::move(made));
            BigInt sum = 0;
            for (const auto& c : scene.cycles) sum += c.lk;
            rec.j_sum_after = sum;
            if (sum != state.expected_sum)
                throw InternalError("splice_step: J-sum invariant violated");
        }
        state.history.push_back(rec);
        return out;
    };

    // Case 1: some partial sum matches [z1]+[z2] mod n. If it matches
    // exactly, the prefix union replaces the pair with the J-sum unchanged;
    // otherwise the complementary block is itself a nonzero multiple of n
    // and certifies an early exit.
    for (int j = 1; j <= n; ++j) {
        if (mod_n(T[j]) != mod_n(pair_sum)) continue;
        if (T[j] == pair_sum) return finish_block(0, j, "prefix-replace", false, T[j]);
        return finish_block(j, 0, "prefix-exit", true, pair_sum - T[j]);
    }

    // Case 2: two partial sums are equal mod n. The window between them is a
    // multiple of n: nonzero means early exit; zero means the complement is a
    // single cycle with class exactly [z1]+[z2].
    for (int j2 = 2; j2 <= n; ++j2) {
        for (int j1 = 1; j1 < j2; ++j1) {
            if (mod_n(T[j1]) != mod_n(T[j2])) continue;
            if (T[j2] != T[j1]) return finish_block(j1, j2, "window-exit", true, T[j2] - T[j1]);
            return finish_block(j2, j1, "window-replace", false, pair_sum);
        }
    }
    throw InternalError("splice_step: pigeonhole found neither case");
}

struct SpliceResult {
    Polyline3 base;
    SceneCycle component;  // Z with lk(L, Z) = k n
    BigInt lk;
    BigInt k;
    bool early_exit = false;
    ZeroSumSelection selection;
    std::vector<BigInt> initial_lks;
    JState state;
};

/// Minimum initial vertex count per cycle for the full pairing depth.
inline BigInt required_initial_cycle_size(int n) {
    const BigInt z = zeta(n);
    return z < n + 1 ? BigInt(n + 1) : z;
}

/// Runs the pigeonhole selection and then splice steps until one cycle
/// remains or an early exit fires; the result links the base with linking
/// number a nonzero multiple of n, verified geometrically.
inline SpliceResult reduce_to_multiple_of_n(SpliceScene scene, int n) {
    if (n < 2) throw InvalidArgument("reduce_to_multiple_of_n: modulus must be >= 2");
    if (static_cast<int>(scene.cycles.size()) != n)
        throw InvalidArgument("reduce_to_multiple_of_n: scene must hold exactly n cycles");
    const BigInt need = required_initial_cycle_size(n);
    for (const auto& c : scene.cycles) {
        if (c.lk <= 0)
            throw InvalidArgument("reduce_to_multiple_of_n: cycle orientations must make lk positive");
        if (c.size() < need)
            throw InvalidArgument("reduce_to_multiple_of_n: cycle with fewer than " + need.str() +
                                  " vertices");
    }

    SpliceResult result;
    result.base = scene.base;
    for (const auto& c : scene.cycles) result.initial_lks.push_back(c.lk);

    std::vector<BigInt> values = result.initial_lks;
    result.selection = select_zero_sum_window(values, n);
    std::vector<SceneCycle> kept;
    for (int i : result.selection.indices) kept.push_back(scene.cycles[i]);
    scene.cycles = std::move(kept);

    result.state.n = n;
    result.state.expected_sum = result.selection.sum;

    const int depth_cap = ceil_log2(n);
    while (scene.cycles.size() > 1) {
        SpliceStepOutcome out = splice_step(scene, result.state);
        if (!result.state.history.empty() &&
            result.state.history.back().pairings_used > depth_cap)
            throw InternalError("reduce_to_multiple_of_n: pairing depth exceeded ceil(log2 n)");
        if (out.early_exit) {
            result.component = std::move(out.exit_cycle);
            result.early_exit = true;
            break;
        }
    }
    if (!result.early_exit) result.component = scene.cycles.front();

    result.lk = linking_number(result.component.pts, result.base);
    if (result.lk != result.component.lk)
        throw InternalError("reduce_to_multiple_of_n: final lk remeasurement mismatch");
    if (result.lk == 0 || result.lk % n != 0)
        throw InternalError("reduce_to_multiple_of_n: final lk is not a nonzero multiple of n");
    result.k = result.lk / n;
    return result;
}

// ---------------------------------------------------------------------------
// Synthetic scenes
//
// The base L is a large rectangle whose lower strand runs along the x axis.
// Each companion cycle is a square-profile helix winding target-many times
// around that strand (a (1, v) curve on a square tube: unknotted), closed by
// a return path just outside its tube. Tubes occupy disjoint x intervals, so
// the cycles are disjoint by construction; every lk is measured and the
// orientation flipped if needed so it comes out positive.

/// Builds a scene with lk(L, Z_i) = lk_targets[i] exactly, each cycle
/// carrying at least min_cycle_size vertices. Deterministic in all inputs.
inline SpliceScene synthetic_scene(const std::vector<long long>& lk_targets, std::uint64_t seed,
                                   int min_cycle_size) {
    if (lk_targets.empty()) throw InvalidArgument("synthetic_scene: need at least one target");
    for (long long t : lk_targets)
        if (t < 1) throw InvalidArgument("synthetic_scene: targets must be positive");
    if (min_cycle_size < 4) min_cycle_size = 4;

    Rng rng(seed);
    SpliceScene scene;
    scene.jitter_seed = seed * 0x9e3779b97f4a7c15ull + 1;

    long long cursor = 0;
    Rational max_r(0);
    for (long long v : lk_targets) {
        // Stride per corner step; side length 2r with r = stride keeps every
        // interpolated coordinate integral.
        const long long stride =
            std::max<long long>(1, (min_cycle_size - 3 + 4 * v - 1) / (4 * v));
        const long long r = stride;
        const long long T = 4 * v * stride;
        const int phase = static_cast<int>(rng.below(4));
        const long long gap = 12 + static_cast<long long>(rng.below(8));
        const long long x0 = cursor + gap;

        const long long corners[4][2] = {{r, r}, {-r, r}, {-r, -r}, {r, -r}};
        Polyline3 pts;
        pts.reserve(T + 3);
        for (long long t = 0; t <= T; ++t) {
            const long long step = t + phase * stride;
            const long long side = (step / stride) % 4;
            const long long frac = step % stride;
            const long long next = (side + 1) % 4;
            const long long y = corners[side][0] + (corners[next][0] - corners[side][0]) * frac / stride;
            const long long z = corners[side][1] + (corners[next][1] - corners[side][1]) * frac / stride;
            pts.push_back({Rational(x0 + t), Rational(y), Rational(z)});
        }
        // Return path bumped diagonally outward from the start corner.
        const long long sy = corners[phase % 4][0], sz = corners[phase % 4][1];
        const long long wy = sy + (sy > 0 ? 3 : -3), wz = sz + (sz > 0 ? 3 : -3);
        pts.push_back({Rational(x0 + T), Rational(wy), Rational(wz)});
        pts.push_back({Rational(x0), Rational(wy), Rational(wz)});

        SceneCycle c;
        c.id = scene.next_cycle_id++;
        c.pts = std::move(pts);
        scene.cycles.push_back(std::move(c));
        cursor = x0 + T;
        if (Rational(r + 3) > max_r) max_r = Rational(r + 3);
    }

    const long long X0 = -24, X1 = cursor + 24;
    const Rational H = max_r * 4 + 48;
    scene.base = {{Rational(X0), 0, 0}, {Rational(X1), 0, 0}, {Rational(X1), H, 0},
                  {Rational(X0), H, 0}};

    for (size_t i = 0; i < scene.cycles.size(); ++i) {
        SceneCycle& c = scene.cycles[i];
        c.lk = linking_number(c.pts, scene.base);
        if (c.lk < 0) {
            std::reverse(c.pts.begin(), c.pts.end());
            c.lk = -c.lk;
        }
        if (c.lk != lk_targets[i])
            throw InternalError("synthetic_scene: measured lk does not match target");
    }

    scene.clearance_z = max_r + 16;
    return scene;
}

}  // namespace linklab
