#include <catch2/catch_amalgamated.hpp>

#include "linklab/embedding.hpp"
#include "linklab/geom.hpp"

using namespace linklab;

namespace {
Point3 pt(long long x, long long y, long long z) { return {Rational(x), Rational(y), Rational(z)}; }
}  // namespace

TEST_CASE("orient3d") {
    REQUIRE(orient3d(pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)) == 1);
    REQUIRE(orient3d(pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)) == 0);
}

TEST_CASE("segment_meet cases") {
    SECTION("skew segments miss") {
        const auto m = segment_meet(pt(0, 0, 0), pt(2, 0, 0), pt(1, -1, 1), pt(1, 1, 1));
        REQUIRE(m.kind == SegMeet::kDisjoint);
    }
    SECTION("transverse crossing in a plane") {
        const auto m = segment_meet(pt(0, 0, 0), pt(2, 2, 0), pt(0, 2, 0), pt(2, 0, 0));
        REQUIRE(m.kind == SegMeet::kPoint);
        REQUIRE(m.point == pt(1, 1, 0));
    }
    SECTION("shared endpoint") {
        const auto m = segment_meet(pt(0, 0, 0), pt(1, 0, 0), pt(1, 0, 0), pt(1, 1, 0));
        REQUIRE(m.kind == SegMeet::kPoint);
        REQUIRE(m.point == pt(1, 0, 0));
    }
    SECTION("collinear overlap") {
        const auto m = segment_meet(pt(0, 0, 0), pt(4, 0, 0), pt(2, 0, 0), pt(6, 0, 0));
        REQUIRE(m.kind == SegMeet::kOverlap);
    }
    SECTION("collinear touch at one point") {
        const auto m = segment_meet(pt(0, 0, 0), pt(2, 0, 0), pt(2, 0, 0), pt(5, 0, 0));
        REQUIRE(m.kind == SegMeet::kPoint);
    }
    SECTION("collinear apart") {
        const auto m = segment_meet(pt(0, 0, 0), pt(1, 0, 0), pt(3, 0, 0), pt(5, 0, 0));
        REQUIRE(m.kind == SegMeet::kDisjoint);
    }
    SECTION("coplanar but not touching") {
        const auto m = segment_meet(pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0));
        REQUIRE(m.kind == SegMeet::kDisjoint);
    }
}

TEST_CASE("point_on_segment") {
    REQUIRE(point_on_segment(pt(1, 1, 1), pt(0, 0, 0), pt(2, 2, 2)));
    REQUIRE(point_on_segment(pt(0, 0, 0), pt(0, 0, 0), pt(2, 2, 2)));
    REQUIRE_FALSE(point_on_segment(pt(3, 3, 3), pt(0, 0, 0), pt(2, 2, 2)));
    REQUIRE_FALSE(point_on_segment(pt(1, 1, 0), pt(0, 0, 0), pt(2, 2, 2)));
}

TEST_CASE("general position validation") {
    SECTION("clean square is fine") {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 0);
        Embedding e{g, {pt(0, 0, 0), pt(2, 0, 0), pt(2, 2, 0), pt(0, 2, 0)}, {}};
        REQUIRE(validate_general_position(e).empty());
    }
    SECTION("interior crossing is a violation") {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        Embedding e{g, {pt(0, 0, 0), pt(2, 2, 0), pt(0, 2, 0), pt(2, 0, 0)}, {}};
        REQUIRE_FALSE(validate_general_position(e).empty());
    }
    SECTION("segments sharing only a graph vertex are fine") {
        Graph g(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        Embedding e{g, {pt(0, 0, 0), pt(1, 0, 0), pt(1, 1, 0)}, {}};
        REQUIRE(validate_general_position(e).empty());
    }
    SECTION("collinear overlapping edges are a violation") {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        Embedding e{g, {pt(0, 0, 0), pt(4, 0, 0), pt(2, 0, 0), pt(6, 0, 0)}, {}};
        REQUIRE_FALSE(validate_general_position(e).empty());
    }
    SECTION("vertex in the interior of a foreign edge is a violation") {
        Graph g(3);
        g.add_edge(0, 1);
        Embedding e{g, {pt(0, 0, 0), pt(4, 0, 0), pt(2, 0, 0)}, {}};
        REQUIRE_FALSE(validate_general_position(e).empty());
    }
    SECTION("duplicate positions are a violation") {
        Graph g(2);
        g.add_edge(0, 1);
        Embedding e{g, {pt(0, 0, 0), pt(0, 0, 0)}, {}};
        REQUIRE_FALSE(validate_general_position(e).empty());
    }
}

TEST_CASE("random_embedding") {
    const Graph k6 = complete_graph(6);
    SECTION("deterministic") {
        const Embedding a = random_embedding(k6, 11, 40);
        const Embedding b = random_embedding(k6, 11, 40);
        REQUIRE(a.position == b.position);
    }
    SECTION("different seeds differ") {
        const Embedding a = random_embedding(k6, 1, 40);
        const Embedding b = random_embedding(k6, 2, 40);
        REQUIRE(a.position != b.position);
    }
    SECTION("postcondition: general position") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const Embedding e = random_embedding(k6, seed, 40);
            REQUIRE(validate_general_position(e).empty());
        }
    }
    SECTION("K2 with span 1 places distinct points") {
        Graph k2(2);
        k2.add_edge(0, 1);
        const Embedding e = random_embedding(k2, 3, 1);
        REQUIRE(e.position[0] != e.position[1]);
    }
    SECTION("span too small exhausts the budget") {
        REQUIRE_THROWS_AS(random_embedding(complete_graph(30), 1, 1), ResourceExhausted);
    }
}

TEST_CASE("edge polylines honor subdivisions") {
    Graph g(2);
    g.add_edge(0, 1);
    Embedding e{g, {pt(0, 0, 0), pt(4, 0, 0)}, {}};
    e.subdivisions[{0, 1}] = {pt(1, 1, 0), pt(3, 1, 0)};
    const Polyline3 fwd = e.edge_polyline(0, 1);
    REQUIRE(fwd.size() == 4);
    REQUIRE(fwd[1] == pt(1, 1, 0));
    const Polyline3 bwd = e.edge_polyline(1, 0);
    REQUIRE(bwd[1] == pt(3, 1, 0));
}
