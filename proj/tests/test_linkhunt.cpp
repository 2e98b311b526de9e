#include <catch2/catch_amalgamated.hpp>

#include "linklab/json_io.hpp"
#include "linklab/linkhunt.hpp"

using namespace linklab;

namespace {
Embedding load_fixture(const std::string& name) {
    return embedding_from_json(read_json_file(std::string(LINKLAB_FIXTURE_DIR) + "/" + name));
}
}  // namespace

TEST_CASE("K6 checksum is 1 on sampled embeddings") {
    for (std::uint64_t seed = 0; seed < 8; ++seed)
        REQUIRE(cg_k6_checksum(random_embedding(complete_graph(6), seed, 30)) == 1);
}

TEST_CASE("K6 checksum rejects other hosts") {
    REQUIRE_THROWS_AS(cg_k6_checksum(random_embedding(complete_graph(5), 1, 30)),
                      InvalidArgument);
}

TEST_CASE("find_linked_triangles_k6") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Embedding e = random_embedding(complete_graph(6), seed, 30);
        SECTION("seed " + std::to_string(seed)) {
            const LinkedTrianglePair p = find_linked_triangles_k6(e);
            REQUIRE(p.lk % 2 != 0);
            REQUIRE(p.first.vertex_disjoint(p.second));
            for (int v = 0; v < 6; ++v) {
                const LinkedTrianglePair q = find_linked_triangles_k6(e, v);
                REQUIRE(q.first.contains(v));
                REQUIRE(q.lk % 2 != 0);
            }
        }
    }
}

TEST_CASE("find_triangle_square_k331") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Embedding e = random_embedding(k331(), seed, 30);
        const TriangleSquarePair p = find_triangle_square_k331(e);
        REQUIRE(p.lk != 0);
        REQUIRE(p.triangle.vertex_disjoint(p.square));
        REQUIRE(p.triangle.length() == 3);
        REQUIRE(p.square.length() == 4);
        // In K_{3,3,1} every triangle uses the cone.
        REQUIRE(p.triangle_contains_cone);
    }
    REQUIRE_THROWS_AS(find_triangle_square_k331(random_embedding(complete_graph(7), 1, 30)),
                      InvalidArgument);
}

TEST_CASE("K7 Arf checksum") {
    const Embedding e = random_embedding(complete_graph(7), 2, 30);
    REQUIRE(k7_arf_checksum(e) == 1);
    SECTION("thread count does not affect the value") {
        REQUIRE(k7_arf_checksum(e, 4) == 1);
    }
    SECTION("host validation") {
        REQUIRE_THROWS_AS(k7_arf_checksum(random_embedding(complete_graph(6), 1, 30)),
                          InvalidArgument);
    }
}

TEST_CASE("find_knotted_cycle_through_path") {
    SECTION("planar square is never certified") {
        Graph g(4);
        for (int i = 0; i < 4; ++i) g.add_edge(i, (i + 1) % 4);
        const Embedding e = random_embedding(g, 3, 20);
        const auto r = find_knotted_cycle_through_path(e, {0, 1, 2}, 6, 16);
        REQUIRE_FALSE(r.found);
        REQUIRE(r.certificates_computed >= 1);
        for (const auto& det : r.determinants_seen) REQUIRE(det == 1);
    }
    SECTION("budget zero is an immediate not-found") {
        Graph g(4);
        for (int i = 0; i < 4; ++i) g.add_edge(i, (i + 1) % 4);
        const Embedding e = random_embedding(g, 3, 20);
        const auto r = find_knotted_cycle_through_path(e, {0, 1, 2}, 6, 0);
        REQUIRE_FALSE(r.found);
        REQUIRE(r.certificates_computed == 0);
    }
    SECTION("missing path edge is an error") {
        Graph g(4);
        g.add_edge(0, 1);
        const Embedding e = random_embedding(g, 3, 20);
        REQUIRE_THROWS_AS(find_knotted_cycle_through_path(e, {0, 1, 2}, 6, 4), InvalidArgument);
    }
}

TEST_CASE("the chain scene hosts a certified knot through a-b-c") {
    std::array<int, 3> marks{};
    const Embedding e =
        embedding_from_json(read_json_file(std::string(LINKLAB_FIXTURE_DIR) + "/d4_scene.json"),
                            &marks);
    REQUIRE(validate_general_position(e).empty());
    const D4 d = build_D4();
    REQUIRE(e.graph == d.marked.graph);
    REQUIRE(marks[0] == d.marked.a);
    // The designated clasps: 1 with 3, 2 with 4.
    REQUIRE(linking_number(e, d.cycles[0], d.cycles[2]) != 0);
    REQUIRE(linking_number(e, d.cycles[1], d.cycles[3]) != 0);
    const auto r = find_knotted_cycle_through_path(e, {marks[0], marks[1], marks[2]}, 15, 64);
    REQUIRE(r.found);
    REQUIRE(r.certificate.knotted());
    REQUIRE(r.certificate.determinant == 3);
}

TEST_CASE("theorem1 pipeline stages") {
    const F126 t = build_F126(build_F());
    const Embedding e = random_embedding(t.graph, 7, 400);

    SECTION("budget zero leaves every copy inconclusive") {
        const Theorem1Report rep = theorem1_pipeline(e, t, 0);
        REQUIRE_FALSE(rep.all_copies_found);
        REQUIRE(rep.status == "inconclusive:copy-search");
        for (const auto& c : rep.copies) {
            REQUIRE_FALSE(c.found);
            REQUIRE(c.certificates_computed == 0);
        }
        REQUIRE_FALSE(rep.contradiction);
    }
    SECTION("host mismatch is rejected") {
        const Embedding other = random_embedding(complete_graph(6), 1, 30);
        REQUIRE_THROWS_AS(theorem1_pipeline(other, t, 1), InvalidArgument);
    }
}
