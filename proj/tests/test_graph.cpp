#include <doctest.h>

#include <sstream>

#include "test_support.hpp"
#include "vcalp/errors.hpp"
#include "vcalp/graph.hpp"

using namespace vcalp;
using vcalp::test::vid;
using vcalp::test::vset;

TEST_CASE("construction and basic queries") {
    Graph g(4);
    CHECK(g.order() == 4);
    CHECK(g.size() == 0);
    g.add_edge(vid(0), vid(1));
    g.add_edge(vid(1), vid(0));
    g.add_edge(vid(2), vid(1));
    CHECK(g.size() == 2);
    CHECK(g.has_edge(vid(1), vid(0)));
    CHECK_FALSE(g.has_edge(vid(0), vid(2)));
    CHECK(g.degree(vid(1)) == 2);
    CHECK(neighbors(g, vid(1)) == vset({0, 2}));
    CHECK(g.edges() == std::vector<Edge>{Edge(vid(0), vid(1)), Edge(vid(1), vid(2))});
    CHECK(g.index_of(vid(3)) == 3);
}

TEST_CASE("edges normalize their endpoints") {
    const Edge e(vid(5), vid(2));
    CHECK(e.u == vid(2));
    CHECK(e.v == vid(5));
    CHECK(Edge(vid(2), vid(5)) == e);
}

TEST_CASE("self-loops and unknown vertices are rejected") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(vid(1), vid(1)), ContractViolation);
    CHECK_THROWS_AS(g.add_edge(vid(1), vid(7)), InvalidVertex);
    CHECK_THROWS_AS((void)g.index_of(vid(3)), InvalidVertex);
    CHECK_THROWS_AS((void)g.neighbors(vid(9)), InvalidVertex);
    CHECK_FALSE(g.has_vertex(vid(3)));
}

TEST_CASE("identifiers are never reused") {
    Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    const Graph h = delete_vertices(g, vset({3}));
    CHECK(h.order() == 3);
    CHECK(h.next_id() == 4);
    Graph h2 = h;
    CHECK(h2.add_vertex() == vid(4));
}

TEST_CASE("induced subgraph and deletion keep identifiers") {
    const Graph c = cycle_graph(6);
    const Graph h = induced_subgraph(c, vset({0, 1, 2, 4}));
    CHECK(h.order() == 4);
    CHECK(h.size() == 2);
    CHECK(h.has_edge(vid(0), vid(1)));
    CHECK(h.has_edge(vid(1), vid(2)));
    CHECK(h.degree(vid(4)) == 0);
    CHECK(delete_vertices(c, vset({3, 5})) == h);
    CHECK_THROWS_AS(delete_vertices(c, vset({6})), InvalidVertex);
}

TEST_CASE("identify_set joins a fresh vertex to the neighbourhood") {
    const Graph c = cycle_graph(5);
    const auto [h, z] = identify_set(c, vset({1}));
    CHECK(z == vid(5));
    CHECK(h.order() == 5);
    CHECK(neighbors(h, z) == vset({0, 2}));
    CHECK(h.size() == 5);  // path 2-3-4-0 plus z on both ends
    const auto [h2, z2] = identify_set(h, vset({0, 2}));
    CHECK(neighbors(h2, z2) == vset({3, 4, 5}));
    CHECK_THROWS_AS(identify_set(c, {}), ContractViolation);
}

TEST_CASE("set helpers") {
    const VertexSet a = vset({1, 3, 5});
    const VertexSet b = vset({3, 4});
    CHECK(set_union(a, b) == vset({1, 3, 4, 5}));
    CHECK(set_difference(a, b) == vset({1, 5}));
    CHECK(set_intersection(a, b) == vset({3}));
    CHECK(set_contains(a, vid(5)));
    CHECK_FALSE(set_contains(a, vid(4)));
    CHECK(make_vertex_set({vid(2), vid(0), vid(2)}) == vset({0, 2}));
}

TEST_CASE("neighbourhood of a set excludes the set") {
    const Graph p = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(neighborhood_of_set(p, vset({1, 2})) == vset({0, 3}));
    CHECK(neighborhood_of_set(p, {}) == VertexSet{});
}

TEST_CASE("covers, independent sets, components") {
    const Graph g = make_graph(6, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(is_vertex_cover(g, vset({1, 3})));
    CHECK_FALSE(is_vertex_cover(g, vset({1})));
    CHECK(is_independent_set(g, vset({0, 2, 3, 5})));
    CHECK_FALSE(is_independent_set(g, vset({3, 4})));
    const auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == vset({0, 1, 2}));
    CHECK(comps[1] == vset({3, 4}));
    CHECK(comps[2] == vset({5}));
}

TEST_CASE("named families") {
    const Graph k5 = complete_graph(5);
    CHECK(k5.size() == 10);
    const Graph pet = petersen_graph();
    CHECK(pet.order() == 10);
    CHECK(pet.size() == 15);
    for (VertexId v : pet.vertices()) CHECK(pet.degree(v) == 3);
    // girth 5: no triangles
    for (const Edge& e : pet.edges()) {
        CHECK(set_intersection(neighbors(pet, e.u), neighbors(pet, e.v)).empty());
    }
    CHECK_THROWS_AS(cycle_graph(2), ContractViolation);
}

TEST_CASE("equality depends on vertices and edges") {
    CHECK(make_graph(3, {{0, 1}}) == make_graph(3, {{1, 0}}));
    CHECK_FALSE(make_graph(3, {{0, 1}}) == make_graph(3, {{0, 2}}));
    std::ostringstream os;
    os << vid(7);
    CHECK(os.str() == "7");
}
