#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "qnet/topology.hpp"

using namespace qnet;

TEST_CASE("maximal topologies have the expected interaction counts") {
    CHECK(maximal_two_qubit(3).edges.size() == 6);    // n(n-1)
    CHECK(maximal_two_qubit(4).edges.size() == 12);
    CHECK(maximal_f1(3).hyperedges.size() == 3);      // n * C(n-1, 2)
    CHECK(maximal_f1(4).hyperedges.size() == 12);
    CHECK(maximal_f2(3).hyperedges.size() == 3);      // C(n, 2) * (n - 2)
    CHECK(maximal_f2(4).hyperedges.size() == 12);

    CHECK_THROWS_AS(maximal_two_qubit(1), std::invalid_argument);
    CHECK_THROWS_AS(maximal_f1(2), std::invalid_argument);
    CHECK_THROWS_AS(maximal_f2(2), std::invalid_argument);
}

TEST_CASE("star constructions") {
    // star_f1(n): (1;{2,j}), (2;{1,j}), (j;{1,2}) for j >= 3
    const F1Graph s1 = star_f1(4);
    CHECK(s1.hyperedges.size() == 6);  // 3 (n - 2)
    CHECK(std::count(s1.hyperedges.begin(), s1.hyperedges.end(), make_f1_edge(3, 1, 2)) == 1);
    CHECK(std::count(s1.hyperedges.begin(), s1.hyperedges.end(), make_f1_edge(1, 2, 4)) == 1);

    // star_f2(n): 3 (n - 2) + (n - 2)(n - 3) hyperedges
    const F2Graph s2 = star_f2(4);
    CHECK(s2.hyperedges.size() == 8);
    CHECK(std::count(s2.hyperedges.begin(), s2.hyperedges.end(), make_f2_edge(1, 2, 3)) == 1);
    CHECK(std::count(s2.hyperedges.begin(), s2.hyperedges.end(), make_f2_edge(3, 4, 1)) == 1);
    CHECK(std::count(s2.hyperedges.begin(), s2.hyperedges.end(), make_f2_edge(3, 4, 2)) == 1);
    CHECK(star_f2(5).hyperedges.size() == 15);

    // the sample base graph is star_f2(4) without (3,4;2)
    const F2Graph sample = sample_f2_base_4();
    CHECK(sample.hyperedges.size() == 7);
    CHECK(std::count(sample.hyperedges.begin(), sample.hyperedges.end(),
                     make_f2_edge(3, 4, 2)) == 0);
    for (const F2Hyperedge& e : sample.hyperedges)
        CHECK(std::count(s2.hyperedges.begin(), s2.hyperedges.end(), e) == 1);
}

TEST_CASE("validate rejects malformed graph data") {
    DirectedGraph g;
    g.n = 3;
    g.edges = {Edge{1, 1}};
    CHECK_THROWS_WITH_AS(g.validate(), doctest::Contains("self-loop"), std::invalid_argument);

    g.edges = {Edge{1, 4}};
    CHECK_THROWS_WITH_AS(g.validate(), doctest::Contains("out of range"), std::invalid_argument);

    g.edges = {Edge{1, 2}, Edge{2, 1}};
    g.probs = {0.4, 0.4};
    CHECK_THROWS_WITH_AS(g.validate(), doctest::Contains("sum"), std::invalid_argument);
    g.probs = {0.5, 0.5};
    CHECK_NOTHROW(g.validate());

    F1Graph f;
    f.n = 3;
    f.hyperedges = {F1Hyperedge{1, {1, 2}}};
    CHECK_THROWS_WITH_AS(f.validate(), doctest::Contains("control overlaps"),
                         std::invalid_argument);
    f.hyperedges = {F1Hyperedge{3, {2, 1}}};  // unsorted pair
    CHECK_THROWS_AS(f.validate(), std::invalid_argument);

    F2Graph h;
    h.n = 3;
    h.hyperedges = {F2Hyperedge{{1, 2}, 2}};
    CHECK_THROWS_WITH_AS(h.validate(), doctest::Contains("target overlaps"),
                         std::invalid_argument);

    DirectedGraph empty;
    empty.n = 2;
    CHECK_THROWS_WITH_AS(empty.validate(), doctest::Contains("no edges"), std::invalid_argument);
}

TEST_CASE("make helpers sort their unordered labels") {
    CHECK(make_f1_edge(3, 2, 1) == make_f1_edge(3, 1, 2));
    CHECK(make_f2_edge(2, 1, 3) == make_f2_edge(1, 2, 3));
    CHECK(make_f1_edge(3, 2, 1).targets[0] == 1);
    CHECK(make_f2_edge(2, 1, 3).controls[1] == 2);
}

TEST_CASE("effective_probs defaults to uniform") {
    const auto u = effective_probs(4, {});
    REQUIRE(u.size() == 4);
    for (double p : u) CHECK(p == doctest::Approx(0.25));
    const auto given = effective_probs(2, {0.3, 0.7});
    CHECK(given[0] == 0.3);
    CHECK(given[1] == 0.7);
}

TEST_CASE("strong connectivity of ordinary digraphs") {
    DirectedGraph cycle;
    cycle.n = 3;
    cycle.edges = {Edge{1, 2}, Edge{2, 3}, Edge{3, 1}};
    CHECK(is_strongly_connected(cycle));

    DirectedGraph path;
    path.n = 3;
    path.edges = {Edge{1, 2}, Edge{2, 3}};
    CHECK_FALSE(is_strongly_connected(path));

    DirectedGraph mutual;
    mutual.n = 2;
    mutual.edges = {Edge{1, 2}, Edge{2, 1}};
    CHECK(is_strongly_connected(mutual));

    CHECK(is_strongly_connected(maximal_two_qubit(5)));
}

TEST_CASE("hypergraph strong connectivity for the one-control family") {
    CHECK(f1_is_strongly_connected(star_f1(4)));
    CHECK(f1_is_strongly_connected(maximal_f1(3)));

    // qubit 4 is reachable from 3 but cannot reach anyone: no hyperedge has
    // control 4, so no path leaves it
    F1Graph g;
    g.n = 4;
    g.hyperedges = {make_f1_edge(1, 2, 3), make_f1_edge(3, 1, 4), make_f1_edge(2, 1, 3)};
    CHECK_FALSE(f1_is_strongly_connected(g));

    F1Graph single;
    single.n = 3;
    single.hyperedges = {make_f1_edge(1, 2, 3)};
    CHECK_FALSE(f1_is_strongly_connected(single));
}

TEST_CASE("pair-vertex indexing roundtrips") {
    const int n = 5;
    int count = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const int id = pair_index(i, j, n);
            CHECK(pair_index(j, i, n) == id);  // unordered
            const auto [a, b] = pair_from_index(id, n);
            CHECK(a == i);
            CHECK(b == j);
            ++count;
        }
    CHECK(count == n * (n - 1) / 2);
    CHECK_THROWS_AS(pair_index(2, 2, n), std::invalid_argument);
    CHECK_THROWS_AS(pair_from_index(count, n), std::invalid_argument);
}

TEST_CASE("pair-vertex graph of a two-control hypergraph") {
    const F2Graph g = star_f2(4);
    const PairVertexGraph pv = derive_pair_vertex_graph(g);
    CHECK(pv.n == 4);
    CHECK(pv.f_arcs.size() == g.hyperedges.size());
    // hyperedge (i,j;k) sends pair {i,j} to pairs {i,k} and {j,k}
    bool found = false;
    for (const FArc& arc : pv.f_arcs) {
        if (arc.tail != pair_index(1, 2, 4)) continue;
        std::array<int, 2> want{pair_index(1, 3, 4), pair_index(2, 3, 4)};
        std::array<int, 2> got = arc.heads;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got == want) found = true;
    }
    CHECK(found);
}

TEST_CASE("base predicate for the two-control family") {
    CHECK(f2_is_base(star_f2(4)));
    CHECK(f2_is_base(star_f2(5)));
    CHECK(f2_is_base(sample_f2_base_4()));
    CHECK(f2_is_base(maximal_f2(3)));
    CHECK(f2_is_base(maximal_f2(4)));

    F2Graph single;
    single.n = 4;
    single.hyperedges = {make_f2_edge(1, 2, 3)};
    CHECK_FALSE(f2_is_base(single));
}

TEST_CASE("derived graphs of the two-control star") {
    const auto derived = derive_graph_set(star_f2(4));
    CHECK(derived.size() == 4);  // one per excluded label

    int stars = 0;
    std::vector<const DerivedGraph*> rest;
    for (const DerivedGraph& d : derived) {
        if (is_ordinary_star(d))
            ++stars;
        else
            rest.push_back(&d);
    }
    // exactly two ordinary stars; the remaining graphs are isomorphic
    CHECK(stars == 2);
    REQUIRE(rest.size() == 2);
    CHECK(derived_isomorphic(*rest[0], *rest[1]));
}

TEST_CASE("subgraph partial order") {
    const DirectedGraph h = maximal_two_qubit(3);
    DirectedGraph g;
    g.n = 3;
    g.edges = {h.edges[0], h.edges[2]};
    CHECK(is_subgraph(g, h));
    CHECK_FALSE(is_subgraph(h, g));
    CHECK(is_subgraph(h, h));

    const F1Graph f_h = star_f1(4);
    F1Graph f_g;
    f_g.n = 4;
    f_g.hyperedges = {f_h.hyperedges[1]};
    CHECK(is_subgraph(f_g, f_h));
    CHECK_FALSE(is_subgraph(f_h, f_g));

    const F2Graph t_h = star_f2(4);
    CHECK(is_subgraph(sample_f2_base_4(), t_h));
    CHECK_FALSE(is_subgraph(t_h, sample_f2_base_4()));
}

TEST_CASE("two-connectivity of index graphs") {
    IndexGraph tri;
    tri.vertices = {1, 2, 3};
    tri.edges = {ColoredEdge{1, 2, 0}, ColoredEdge{2, 3, 0}, ColoredEdge{1, 3, 1}};
    CHECK(is_two_connected(tri));

    IndexGraph path;
    path.vertices = {1, 2, 3};
    path.edges = {ColoredEdge{1, 2, 0}, ColoredEdge{2, 3, 1}};
    CHECK_FALSE(is_two_connected(path));  // 2 is an articulation vertex

    IndexGraph split;
    split.vertices = {1, 2, 3, 4};
    split.edges = {ColoredEdge{1, 2, 0}, ColoredEdge{3, 4, 0}};
    CHECK_FALSE(is_two_connected(split));  // disconnected
}

TEST_CASE("topology_qubits reads the register size through the variant") {
    CHECK(topology_qubits(InteractionTopology{maximal_two_qubit(3)}) == 3);
    CHECK(topology_qubits(InteractionTopology{star_f1(5)}) == 5);
    CHECK(topology_qubits(InteractionTopology{star_f2(4)}) == 4);
}
