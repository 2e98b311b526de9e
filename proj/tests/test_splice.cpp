#include <catch2/catch_amalgamated.hpp>

#include "linklab/splice.hpp"

using namespace linklab;

namespace {

/// Brute-force subset oracle: confirms a returned index set truly sums to a
/// positive multiple of n, and that some qualifying subset exists at all.
bool subset_oracle_confirms(const std::vector<BigInt>& values, int n,
                            const std::vector<int>& indices) {
    BigInt sum = 0;
    std::set<int> distinct(indices.begin(), indices.end());
    if (distinct.size() != indices.size() || indices.empty()) return false;
    for (int i : indices) {
        if (i < 0 || i >= static_cast<int>(values.size())) return false;
        sum += values[i];
    }
    if (sum <= 0 || sum % n != 0) return false;
    // Existence cross-check by enumeration of all nonempty subsets.
    const int m = static_cast<int>(values.size());
    bool exists = false;
    for (int mask = 1; mask < (1 << m); ++mask) {
        BigInt s = 0;
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i)) s += values[i];
        if (s > 0 && s % n == 0) exists = true;
    }
    return exists;
}

}  // namespace

TEST_CASE("evenly spaced marks") {
    REQUIRE(evenly_spaced_marks(6, 3) == std::vector<int>{0, 2, 4});
    REQUIRE(evenly_spaced_marks(7, 3) == std::vector<int>{0, 2, 4});
    REQUIRE_THROWS_AS(evenly_spaced_marks(3, 4), InvalidArgument);
    REQUIRE(evenly_spaced_marks(Cycle({5, 6, 7, 8, 9, 10}), 3) == std::vector<int>{0, 2, 4});
    // Consecutive marks are at least floor(size/count) apart, cyclically.
    for (int size = 6; size <= 40; ++size) {
        for (int count = 2; count <= size; ++count) {
            const auto marks = evenly_spaced_marks(size, count);
            const int m = size / count;
            for (int k = 0; k + 1 < count; ++k) REQUIRE(marks[k + 1] - marks[k] >= m);
            REQUIRE(size - marks.back() >= m);
            REQUIRE(std::set<int>(marks.begin(), marks.end()).size() == marks.size());
        }
    }
}

TEST_CASE("zero-sum window selection on the worked examples") {
    SECTION("all ones: the full prefix") {
        const auto sel = select_zero_sum_window({1, 1, 1, 1, 1}, 5);
        REQUIRE(sel.indices == std::vector<int>{0, 1, 2, 3, 4});
        REQUIRE(sel.sum == 5);
        REQUIRE(sel.kind == ZeroSumSelection::Kind::kPrefix);
    }
    SECTION("prefix found early") {
        const auto sel = select_zero_sum_window({2, 3, 4, 4, 4}, 5);
        REQUIRE(sel.indices == std::vector<int>{0, 1});
        REQUIRE(sel.sum == 5);
    }
    SECTION("window case") {
        const auto sel = select_zero_sum_window({1, 2, 3, 4, 2}, 5);
        REQUIRE(sel.sum > 0);
        REQUIRE(sel.sum % 5 == 0);
    }
    SECTION("errors") {
        REQUIRE_THROWS_AS(select_zero_sum_window({1, 1}, 5), InvalidArgument);
        REQUIRE_THROWS_AS(select_zero_sum_window({1, -1, 1, 1, 1}, 5), InvalidArgument);
    }
}

TEST_CASE("zero-sum window selection: exhaustive small oracle") {
    // Unit-test sized sweep; the acceptance suite runs the full n in 2..8.
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> v(n, 1);
        for (;;) {
            std::vector<BigInt> values(v.begin(), v.end());
            const auto sel = select_zero_sum_window(values, n);
            REQUIRE(subset_oracle_confirms(values, n, sel.indices));
            int i = 0;
            while (i < n && ++v[i] > n) v[i++] = 1;
            if (i == n) break;
        }
    }
}

TEST_CASE("synthetic scenes") {
    SECTION("deterministic") {
        const SpliceScene a = synthetic_scene({1, 2}, 9, 12);
        const SpliceScene b = synthetic_scene({1, 2}, 9, 12);
        REQUIRE(a.base == b.base);
        REQUIRE(a.cycles.size() == b.cycles.size());
        for (size_t i = 0; i < a.cycles.size(); ++i) REQUIRE(a.cycles[i].pts == b.cycles[i].pts);
    }
    SECTION("seeds vary the geometry") {
        const SpliceScene a = synthetic_scene({1, 1}, 1, 12);
        const SpliceScene b = synthetic_scene({1, 1}, 2, 12);
        REQUIRE(a.cycles[0].pts != b.cycles[0].pts);
    }
    SECTION("lk targets realized exactly") {
        const SpliceScene s = synthetic_scene({3}, 5, 16);
        REQUIRE(s.cycles[0].lk == 3);
        REQUIRE(linking_number(s.cycles[0].pts, s.base) == 3);
    }
    SECTION("hopf-style pair") {
        const SpliceScene s = synthetic_scene({1, 1}, 4, 8);
        REQUIRE(s.cycles[0].lk == 1);
        REQUIRE(s.cycles[1].lk == 1);
    }
    SECTION("vertex-count floor honored") {
        const SpliceScene s = synthetic_scene({2, 5}, 3, 60);
        for (const auto& c : s.cycles) REQUIRE(c.size() >= 60);
    }
    SECTION("cycles are pairwise disjoint point sets") {
        const SpliceScene s = synthetic_scene({1, 2, 3}, 7, 20);
        for (size_t i = 0; i < s.cycles.size(); ++i)
            for (size_t j = i + 1; j < s.cycles.size(); ++j)
                for (const auto& p : s.cycles[i].pts)
                    for (const auto& q : s.cycles[j].pts) REQUIRE(p != q);
    }
    SECTION("rejects bad targets") {
        REQUIRE_THROWS_AS(synthetic_scene({0}, 1, 8), InvalidArgument);
        REQUIRE_THROWS_AS(synthetic_scene({}, 1, 8), InvalidArgument);
    }
}

TEST_CASE("A-cycle construction") {
    SECTION("split case sums to zero") {
        SpliceScene s = synthetic_scene({1, 1}, 11, 10);
        for (auto& c : s.cycles) {
            for (auto& p : c.pts) p.y += 2000;  // slide both off the base
            c.lk = linking_number(c.pts, s.base);
            REQUIRE(c.lk == 0);
        }
        const ACycleFamily fam = build_a_cycles(s, s.cycles[0], s.cycles[1], 3);
        BigInt total = 0;
        for (const auto& v : fam.a_lk) total += v;
        REQUIRE(total == 0);
    }
    SECTION("homology identity for lk 2 and 3 with n = 4") {
        SpliceScene s = synthetic_scene({2, 3}, 13, 25);
        const ACycleFamily fam = build_a_cycles(s, s.cycles[0], s.cycles[1], 4);
        REQUIRE(fam.a.size() == 5);
        BigInt total = 0;
        for (const auto& v : fam.a_lk) total += v;
        REQUIRE(total == 5);
    }
    SECTION("n = 2 produces three hybrid cycles") {
        SpliceScene s = synthetic_scene({1, 1}, 17, 9);
        const ACycleFamily fam = build_a_cycles(s, s.cycles[0], s.cycles[1], 2);
        REQUIRE(fam.a.size() == 3);
        BigInt total = 0;
        for (const auto& v : fam.a_lk) total += v;
        REQUIRE(total == 2);
    }
    SECTION("rejects cycles that cannot host the marks") {
        SpliceScene s = synthetic_scene({1, 1}, 19, 8);
        REQUIRE_THROWS_AS(build_a_cycles(s, s.cycles[0], s.cycles[1], 50), InvalidArgument);
    }
    SECTION("homology identity over many seeded scenes") {
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            const long long t1 = 1 + static_cast<long long>(seed % 3);
            const long long t2 = 1 + static_cast<long long>((seed / 3) % 4);
            SpliceScene s = synthetic_scene({t1, t2}, 100 + seed, 18);
            const int n = 2 + static_cast<int>(seed % 4);
            const ACycleFamily fam = build_a_cycles(s, s.cycles[0], s.cycles[1], n);
            BigInt total = 0;
            for (const auto& v : fam.a_lk) total += v;
            REQUIRE(total == t1 + t2);
        }
    }
    SECTION("block unions verify as single cycles") {
        SpliceScene s = synthetic_scene({2, 2}, 23, 20);
        const ACycleFamily fam = build_a_cycles(s, s.cycles[0], s.cycles[1], 3);
        for (int sdx = 0; sdx <= 3; ++sdx) {
            for (int len = 1; len <= 3; ++len) {
                const int e = (sdx + len) % 4;
                const Polyline3 u = fam.union_block(sdx, e);
                REQUIRE(union_is_single_cycle(fam, sdx, e, u));
            }
        }
    }
}

TEST_CASE("splice_step on a two-cycle J") {
    // J = {2, 3} with n = 5: the step either exits with lk a nonzero
    // multiple of 5 or replaces the pair by one cycle of lk exactly 5.
    SpliceScene s = synthetic_scene({2, 3}, 31, 30);
    JState state;
    state.n = 5;
    state.expected_sum = 5;
    const SpliceStepOutcome out = splice_step(s, state);
    REQUIRE(state.history.size() == 1);
    const auto& rec = state.history.back();
    if (out.early_exit) {
        REQUIRE(out.exit_cycle.lk != 0);
        REQUIRE(out.exit_cycle.lk % 5 == 0);
    } else {
        REQUIRE(s.cycles.size() == 1);
        REQUIRE(s.cycles[0].lk == 5);
        REQUIRE(rec.j_sum_after == 5);
    }
    REQUIRE(rec.a_lk.size() == 6);
}

TEST_CASE("splice_step invariants across a full run") {
    SpliceScene s = synthetic_scene({1, 2, 3, 4, 2}, 41, 60);
    const SpliceResult r = reduce_to_multiple_of_n(std::move(s), 5);
    REQUIRE(r.lk % 5 == 0);
    REQUIRE(r.lk != 0);
    REQUIRE(r.k != 0);
    for (const auto& rec : r.state.history) {
        if (rec.outcome == "prefix-replace" || rec.outcome == "window-replace")
            REQUIRE(rec.j_sum_after == r.selection.sum);
        BigInt t = 0;
        for (const auto& v : rec.a_lk) t += v;
        REQUIRE(t == rec.lk1 + rec.lk2);
    }
    for (const auto& rec : r.state.history) {
        const int m = std::min(rec.size1, rec.size2) / 6;
        REQUIRE(rec.new_size >= 2 * m + 2);
    }
    for (const auto& rec : r.state.history) REQUIRE(rec.pairings_used <= ceil_log2(5));
}

TEST_CASE("reduce_to_multiple_of_n end to end") {
    SECTION("n=5, all-ones targets") {
        SpliceScene s = synthetic_scene({1, 1, 1, 1, 1}, 51,
                                        static_cast<int>(required_initial_cycle_size(5)));
        const SpliceResult r = reduce_to_multiple_of_n(std::move(s), 5);
        REQUIRE(r.lk % 5 == 0);
        REQUIRE(r.lk != 0);
        REQUIRE(linking_number(r.component.pts, r.base) == r.lk);
    }
    SECTION("n=6, staircase targets") {
        SpliceScene s = synthetic_scene({1, 2, 3, 4, 5, 6}, 52,
                                        static_cast<int>(required_initial_cycle_size(6)));
        const SpliceResult r = reduce_to_multiple_of_n(std::move(s), 6);
        REQUIRE(r.lk % 6 == 0);
        REQUIRE(r.lk != 0);
    }
    SECTION("terminates within n-1 steps") {
        SpliceScene s = synthetic_scene({2, 2, 3, 1, 4}, 53,
                                        static_cast<int>(required_initial_cycle_size(5)));
        const SpliceResult r = reduce_to_multiple_of_n(std::move(s), 5);
        REQUIRE(r.state.history.size() <= 4);
    }
    SECTION("rejects wrong cycle count") {
        SpliceScene s = synthetic_scene({1, 1}, 54, 60);
        REQUIRE_THROWS_AS(reduce_to_multiple_of_n(std::move(s), 5), InvalidArgument);
    }
    SECTION("rejects undersized cycles before any geometry runs") {
        SpliceScene s = synthetic_scene({1, 1, 1, 1, 1}, 55, 8);
        REQUIRE_THROWS_AS(reduce_to_multiple_of_n(std::move(s), 5), InvalidArgument);
    }
    SECTION("rejects trivial modulus") {
        SpliceScene s = synthetic_scene({1, 1}, 56, 8);
        REQUIRE_THROWS_AS(reduce_to_multiple_of_n(std::move(s), 1), InvalidArgument);
    }
}

TEST_CASE("required initial size follows the growth bound") {
    REQUIRE(required_initial_cycle_size(5) == 54);
    REQUIRE(required_initial_cycle_size(8) == 180);
    REQUIRE(required_initial_cycle_size(2) >= 3);
}
