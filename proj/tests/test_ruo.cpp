#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qnet/linalg.hpp"
#include "qnet/ruo.hpp"
#include "qnet/topology.hpp"

using namespace qnet;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("from_topology expands every interaction into a branch") {
    const double phi = kPi / 3;

    const RandomUnitaryOperation two = from_topology(InteractionTopology{maximal_two_qubit(3)}, phi);
    CHECK(two.n == 3);
    REQUIRE(two.branches.size() == 6);
    for (const RuoBranch& b : two.branches) {
        CHECK(b.probability == doctest::Approx(1.0 / 6.0));
        CHECK(b.gate.kind == GateKind::cu2);
        CHECK_FALSE(b.label.empty());
        CHECK(b.unitary.rows() == 8);
    }
    CHECK_NOTHROW(two.validate());

    const RandomUnitaryOperation f1 = from_topology(InteractionTopology{star_f1(4)}, phi);
    CHECK(f1.branches.size() == 6);
    CHECK(f1.branches.front().gate.kind == GateKind::cu31);

    const RandomUnitaryOperation f2 = from_topology(InteractionTopology{star_f2(4)}, phi);
    CHECK(f2.branches.size() == 8);
    CHECK(f2.branches.front().gate.kind == GateKind::cu32);

    // attached probabilities are carried through
    DirectedGraph g;
    g.n = 2;
    g.edges = {Edge{1, 2}, Edge{2, 1}};
    g.probs = {0.25, 0.75};
    const RandomUnitaryOperation weighted = from_topology(InteractionTopology{g}, phi);
    CHECK(weighted.branches[0].probability == doctest::Approx(0.25));
    CHECK(weighted.branches[1].probability == doctest::Approx(0.75));
}

TEST_CASE("apply preserves trace, hermiticity, and validity") {
    const RandomUnitaryOperation ruo =
        from_topology(InteractionTopology{maximal_f1(3)}, 1.2);
    DensityOperator rho = random_density(3, 77);
    for (int k = 0; k < 5; ++k) {
        rho = apply(ruo, rho);
        CHECK(std::abs(trace(rho.mat) - cdouble{1.0, 0.0}) <= 1e-12);
        CHECK(max_abs_diff(rho.mat, adjoint(rho.mat)) <= 1e-12);
    }
    std::string why;
    CHECK_MESSAGE(is_valid_density(rho, &why), why);

    DensityOperator wrong_dim = random_density(2, 1);
    CHECK_THROWS_AS(apply(ruo, wrong_dim), std::invalid_argument);
}

TEST_CASE("apply agrees with the dense superoperator") {
    for (int n : {2, 3}) {
        CAPTURE(n);
        const InteractionTopology topo =
            n == 2 ? InteractionTopology{maximal_two_qubit(2)} : InteractionTopology{star_f1(3)};
        const RandomUnitaryOperation ruo = from_topology(topo, 0.9);
        const ComplexMatrix s = superoperator_matrix(ruo);
        const DensityOperator rho = random_density(n, 31 + n);

        const StateVector v = vec_op(rho.mat);
        StateVector sv(v.dim());
        for (std::size_t i = 0; i < v.dim(); ++i) {
            cdouble acc{0.0, 0.0};
            for (std::size_t j = 0; j < v.dim(); ++j) acc += s(i, j) * v[j];
            sv[i] = acc;
        }
        const ComplexMatrix direct = apply(ruo, rho).mat;
        CHECK(max_abs_diff(unvec_op(sv, rho.dim()), direct) <= 1e-12);
    }
}

TEST_CASE("superoperator_matrix refuses registers above 64 dimensions") {
    DirectedGraph g;
    g.n = 7;
    g.edges = {Edge{1, 2}};
    const RandomUnitaryOperation big = from_topology(InteractionTopology{g}, 1.0);
    CHECK_THROWS_WITH_AS(superoperator_matrix(big), doctest::Contains("too large"),
                         std::invalid_argument);
}

TEST_CASE("iterate records the strided trajectory and always the final state") {
    const RandomUnitaryOperation ruo =
        from_topology(InteractionTopology{maximal_two_qubit(2)}, 1.0);
    const DensityOperator rho0 = random_density(2, 5);

    const auto traj = iterate(ruo, rho0, 5, 2);
    // steps 0, 2, 4, 5
    REQUIRE(traj.size() == 4);
    CHECK(max_abs_diff(traj[0].mat, rho0.mat) == 0.0);

    DensityOperator cur = rho0;
    for (int k = 0; k < 5; ++k) cur = apply(ruo, cur);
    CHECK(max_abs_diff(traj.back().mat, cur.mat) <= 1e-13);

    CHECK(iterate(ruo, rho0, 0).size() == 1);
    CHECK(iterate(ruo, rho0, 3).size() == 4);
    CHECK_THROWS_AS(iterate(ruo, rho0, -1), std::invalid_argument);
    CHECK_THROWS_AS(iterate(ruo, rho0, 3, 0), std::invalid_argument);
}

TEST_CASE("mix forms the weighted union of branches") {
    const RandomUnitaryOperation a = from_topology(InteractionTopology{maximal_two_qubit(3)}, 1.0);
    const RandomUnitaryOperation b = from_topology(InteractionTopology{star_f1(3)}, 1.0);
    const RandomUnitaryOperation m = mix({{a, 0.25}, {b, 0.75}});

    REQUIRE(m.branches.size() == a.branches.size() + b.branches.size());
    double sum = 0.0;
    for (const RuoBranch& br : m.branches) sum += br.probability;
    CHECK(sum == doctest::Approx(1.0));
    CHECK(m.branches[0].probability == doctest::Approx(0.25 / 6.0));
    CHECK(m.branches.back().probability == doctest::Approx(0.75 / 3.0));
    CHECK_NOTHROW(m.validate());

    // mixing acts linearly on states
    const DensityOperator rho = random_density(3, 9);
    ComplexMatrix want = apply(a, rho).mat;
    want *= cdouble{0.25, 0.0};
    ComplexMatrix part = apply(b, rho).mat;
    part *= cdouble{0.75, 0.0};
    want += part;
    CHECK(max_abs_diff(apply(m, rho).mat, want) <= 1e-12);
}

TEST_CASE("index graph of the two-qubit mutual pair") {
    DirectedGraph g;
    g.n = 2;
    g.edges = {Edge{1, 2}, Edge{2, 1}};
    const RandomUnitaryOperation ruo = from_topology(InteractionTopology{g}, 1.0);
    const IndexGraph ig = build_index_graph(ruo);

    // |00> couples to nothing and is pruned; branch 1->2 joins 10 and 11,
    // branch 2->1 joins 01 and 11
    REQUIRE(ig.vertices.size() == 3);
    CHECK(std::find(ig.vertices.begin(), ig.vertices.end(), 0) == ig.vertices.end());
    REQUIRE(ig.edges.size() == 2);
    bool saw_23 = false, saw_13 = false;
    for (const ColoredEdge& e : ig.edges) {
        if (e.a == 2 && e.b == 3) saw_23 = true;
        if (e.a == 1 && e.b == 3) saw_13 = true;
    }
    CHECK(saw_23);
    CHECK(saw_13);
    // vertex 3 is an articulation point of the path 1 - 3 - 2
    CHECK_FALSE(is_two_connected(ig));
}

TEST_CASE("validate rejects inconsistent channels") {
    RandomUnitaryOperation empty;
    empty.n = 2;
    CHECK_THROWS_WITH_AS(empty.validate(), doctest::Contains("no branches"),
                         std::invalid_argument);

    RandomUnitaryOperation bad = from_topology(InteractionTopology{maximal_two_qubit(2)}, 1.0);
    bad.branches[0].probability = 0.9;  // sum now != 1
    CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("sum"), std::invalid_argument);
}
