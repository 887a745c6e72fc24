#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qnet/analysis.hpp"
#include "qnet/attractors.hpp"
#include "qnet/linalg.hpp"
#include "qnet/ruo.hpp"
#include "qnet/topology.hpp"

using namespace qnet;

namespace {

constexpr double kPi = std::numbers::pi;
const cdouble kOne{1.0, 0.0};
const cdouble kMinusOne{-1.0, 0.0};

AttractorSpace solve(const InteractionTopology& topo, double phi) {
    return solve_attractors(from_topology(topo, phi));
}

double worst_residual(const AttractorSpace& s) {
    double w = 0.0;
    for (const auto& c : s.components) w = std::max(w, c.max_residual);
    return w;
}

// largest |U X U† - lambda X| over the branches
double equation_residual(const RandomUnitaryOperation& ruo, const ComplexMatrix& x,
                         cdouble lambda) {
    double w = 0.0;
    for (const RuoBranch& b : ruo.branches) {
        ComplexMatrix lhs = unitary_conjugate(b.unitary, x);
        ComplexMatrix rhs = x;
        rhs *= lambda;
        w = std::max(w, max_abs_diff(lhs, rhs));
    }
    return w;
}

}  // namespace

TEST_CASE("two-qubit base graphs carry a five-dimensional fixed space") {
    const AttractorSpace a = solve(InteractionTopology{maximal_two_qubit(3)}, kPi / 3);
    CHECK(a.dim(kOne) == 5);
    CHECK(a.dim(kMinusOne) == 0);
    CHECK(a.total_dim() == 5);
    CHECK(worst_residual(a) <= 1e-8);

    // the two-vertex mutual pair adds a single alternating attractor
    DirectedGraph mutual;
    mutual.n = 2;
    mutual.edges = {Edge{1, 2}, Edge{2, 1}};
    const AttractorSpace m = solve(InteractionTopology{mutual}, 2.0);
    CHECK(m.dim(kOne) == 5);
    CHECK(m.dim(kMinusOne) == 1);
}

TEST_CASE("one-control two-target star dimensions, including the pi/2 special case") {
    CHECK(solve(InteractionTopology{star_f1(3)}, kPi / 3).total_dim() == 10);

    const AttractorSpace at_half_3 = solve(InteractionTopology{star_f1(3)}, kPi / 2);
    CHECK(at_half_3.dim(kOne) == 11);
    CHECK(at_half_3.dim(kMinusOne) == 1);

    const AttractorSpace at_half_4 = solve(InteractionTopology{star_f1(4)}, kPi / 2);
    CHECK(at_half_4.dim(kOne) == 11);
    CHECK(at_half_4.dim(kMinusOne) == 0);
}

TEST_CASE("two-control one-target base graphs: (n+2)^2 + 1 fixed dimensions") {
    CHECK(solve(InteractionTopology{star_f2(3)}, kPi / 3).total_dim() == 26);
    const AttractorSpace a4 = solve(InteractionTopology{sample_f2_base_4()}, kPi / 2);
    CHECK(a4.dim(kOne) == 37);
    CHECK(a4.dim(kMinusOne) == 0);
}

TEST_CASE("closed-form and numeric spaces contain each other on base graphs") {
    struct Case {
        GateFamily family;
        int n;
        double phi;
        InteractionTopology topo;
    };
    const Case cases[] = {
        {GateFamily::two_qubit, 3, kPi / 3, InteractionTopology{maximal_two_qubit(3)}},
        {GateFamily::f1, 3, kPi / 2, InteractionTopology{star_f1(3)}},
        {GateFamily::f2, 4, kPi / 3, InteractionTopology{star_f2(4)}},
    };
    for (const Case& c : cases) {
        CAPTURE(static_cast<int>(c.family));
        const AttractorSpace numeric = solve(c.topo, c.phi);
        const AttractorSpace closed = closed_form_attractor_space(c.family, c.n, c.phi, c.topo);
        CHECK(numeric.total_dim() == closed.total_dim());
        CHECK(space_subset(numeric, closed, 1e-7));
        CHECK(space_subset(closed, numeric, 1e-7));
        CHECK(max_principal_angle_sin(numeric, closed) <= 1e-7);
        CHECK(worst_residual(closed) <= 1e-8);
    }
}

TEST_CASE("dimension counting agrees with the materialized closed form") {
    struct Case {
        GateFamily family;
        int n;
        double phi;
        std::size_t plus, minus;
    };
    const Case cases[] = {
        {GateFamily::two_qubit, 2, 1.3, 5, 1},
        {GateFamily::two_qubit, 4, kPi / 3, 5, 0},
        {GateFamily::f1, 3, kPi / 2, 11, 1},
        {GateFamily::f1, 4, kPi / 2, 11, 0},
        {GateFamily::f1, 4, 2.0, 10, 0},
        {GateFamily::f2, 3, kPi / 3, 26, 0},
        {GateFamily::f2, 4, kPi / 2, 37, 0},
    };
    for (const Case& c : cases) {
        CAPTURE(static_cast<int>(c.family));
        CAPTURE(c.n);
        const ClosedFormDims dims = closed_form_dimensions(c.family, c.n, c.phi);
        CHECK(dims.dim_plus == c.plus);
        CHECK(dims.dim_minus == c.minus);
    }

    // the counting route needs no dense operators, so it reaches large registers
    CHECK(closed_form_dimensions(GateFamily::f1, 10, 2.0).dim_plus == 10);
    CHECK(closed_form_dimensions(GateFamily::f1, 10, kPi / 2).dim_plus == 11);
    CHECK(closed_form_dimensions(GateFamily::f2, 12, kPi / 3).dim_plus == 197);  // (12+2)^2 + 1
}

TEST_CASE("explicit alternating attractors solve their equations") {
    // two-qubit mutual pair, any phi
    for (double phi : {0.9, kPi / 2, 2.2}) {
        CAPTURE(phi);
        DirectedGraph mutual;
        mutual.n = 2;
        mutual.edges = {Edge{1, 2}, Edge{2, 1}};
        const RandomUnitaryOperation ruo = from_topology(InteractionTopology{mutual}, phi);
        const ComplexMatrix x = minus_one_attractor_two_qubit(phi);
        CHECK(equation_residual(ruo, x, kMinusOne) <= 1e-12);
        CHECK(hs_norm(x) == doctest::Approx(1.0));
        CHECK(max_abs_diff(x, adjoint(x)) <= 1e-12);  // Hermitian representative
    }

    // one-control two-target family at pi/2 on three qubits
    const RandomUnitaryOperation f1 = from_topology(InteractionTopology{star_f1(3)}, kPi / 2);
    const ComplexMatrix y = minus_one_attractor_f1_pi_half_n3();
    CHECK(equation_residual(f1, y, kMinusOne) <= 1e-12);
    CHECK(hs_norm(y) == doctest::Approx(1.0));
    CHECK(max_abs_diff(y, adjoint(y)) <= 1e-12);
}

TEST_CASE("common eigenvectors generate the fixed space") {
    const RandomUnitaryOperation ruo = from_topology(InteractionTopology{star_f1(3)}, kPi / 3);
    const CommonEigenbasis basis = common_eigenvectors(ruo);
    REQUIRE(basis.vectors.size() == 3);
    CHECK(basis.max_residual <= 1e-10);
    for (cdouble alpha : basis.alphas) CHECK(std::abs(alpha - kOne) <= 1e-9);

    CHECK(p_attractors(basis, kOne).size() == 9);
    CHECK(p_attractors(basis, kMinusOne).empty());
}

TEST_CASE("closed-form vector families are orthonormalized correctly") {
    const ClosedFormVectors v2 = closed_form_vectors(GateFamily::two_qubit, 3, kPi / 3);
    CHECK(v2.raw.size() == 2);  // |0..0>, |q+>^n
    CHECK(v2.orthonormal.size() == 2);

    const ClosedFormVectors v31 = closed_form_vectors(GateFamily::f1, 4, 1.1);
    CHECK(v31.raw.size() == 3);  // + |q->^n
    CHECK(v31.orthonormal.size() == 3);

    const ClosedFormVectors v32 = closed_form_vectors(GateFamily::f2, 4, 1.1);
    CHECK(v32.raw.size() == 6);  // |0..0>, |q+>^n, n one-excitation states
    CHECK(v32.orthonormal.size() == 6);

    for (std::size_t i = 0; i < v32.orthonormal.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            CHECK(std::abs(inner(v32.orthonormal[i], v32.orthonormal[j])) <= 1e-10);
}

TEST_CASE("asymptotic and stationary constructions coincide and are fixed points") {
    const RandomUnitaryOperation ruo = from_topology(InteractionTopology{star_f1(3)}, kPi / 3);
    const AttractorSpace space = solve_attractors(ruo);
    const CommonEigenbasis basis = common_eigenvectors(ruo);

    for (int k = 0; k < 3; ++k) {
        const DensityOperator rho0 = random_density(3, 600 + k);
        const DensityOperator a = asymptotic_state(space, rho0);
        const DensityOperator s = stationary_state(basis, rho0);
        CHECK(hs_distance(a, s) <= 1e-9);

        std::string why;
        CHECK_MESSAGE(is_valid_density(a, &why), why);
        CHECK(std::abs(trace(a.mat) - kOne) <= 1e-10);
        // a true fixed point of the channel
        CHECK(hs_distance(apply(ruo, a), a) <= 1e-9);
    }
}

TEST_CASE("a nonempty alternating component makes the asymptote a two-cycle") {
    const RandomUnitaryOperation ruo = from_topology(InteractionTopology{star_f1(3)}, kPi / 2);
    const AttractorSpace space = solve_attractors(ruo);
    REQUIRE(space.dim(kMinusOne) == 1);

    const DensityOperator rho0 = random_density(3, 777);
    const DensityOperator even = asymptotic_state(space, rho0, 0);
    const DensityOperator odd = asymptotic_state(space, rho0, 1);
    CHECK(hs_distance(apply(ruo, even), odd) <= 1e-9);
    CHECK(hs_distance(apply(ruo, odd), even) <= 1e-9);
}

TEST_CASE("removing interactions grows the attractor space") {
    const AttractorSpace big = solve(InteractionTopology{star_f1(3)}, kPi / 3);
    F1Graph g;
    g.n = 3;
    g.hyperedges = {make_f1_edge(1, 2, 3)};
    const AttractorSpace small_constraints = solve(InteractionTopology{g}, kPi / 3);

    CHECK(space_subset(big, small_constraints, 1e-7));
    CHECK_FALSE(space_subset(small_constraints, big, 1e-7));
    CHECK(big.total_dim() < small_constraints.total_dim());
}

TEST_CASE("space algebra: reflexivity and self-intersection") {
    const AttractorSpace a = solve(InteractionTopology{maximal_two_qubit(3)}, 1.0);
    CHECK(space_subset(a, a, 1e-9));
    CHECK(max_principal_angle_sin(a, a) <= 1e-10);
    const AttractorSpace self = space_intersection(a, a);
    CHECK(self.total_dim() == a.total_dim());
}

TEST_CASE("component accessors") {
    const AttractorSpace a = solve(InteractionTopology{star_f1(3)}, kPi / 2);
    const AttractorComponent* plus = a.component(kOne);
    REQUIRE(plus != nullptr);
    CHECK(plus->basis.size() == 11);
    const AttractorComponent* minus = a.component(kMinusOne);
    REQUIRE(minus != nullptr);
    CHECK(minus->basis.size() == 1);
    CHECK(a.component(cdouble{0.5, 0.5}) == nullptr);
}

TEST_CASE("base-topology validation names the failed predicate") {
    // a one-control hypergraph that is not strongly connected
    F1Graph g;
    g.n = 4;
    g.hyperedges = {make_f1_edge(1, 2, 3), make_f1_edge(3, 1, 4), make_f1_edge(2, 1, 3)};
    CHECK_THROWS_WITH_AS(
        check_base_topology(GateFamily::f1, 4, InteractionTopology{g}),
        doctest::Contains("f1_is_strongly_connected"), std::invalid_argument);

    // family/topology kind mismatch
    CHECK_THROWS_AS(
        check_base_topology(GateFamily::f1, 3, InteractionTopology{maximal_two_qubit(3)}),
        std::invalid_argument);

    // a non-base two-control hypergraph
    F2Graph single;
    single.n = 4;
    single.hyperedges = {make_f2_edge(1, 2, 3)};
    CHECK_THROWS_WITH_AS(check_base_topology(GateFamily::f2, 4, InteractionTopology{single}),
                         doctest::Contains("f2_is_base"), std::invalid_argument);

    // a disconnected two-qubit graph
    DirectedGraph path;
    path.n = 3;
    path.edges = {Edge{1, 2}, Edge{2, 3}};
    CHECK_THROWS_AS(check_base_topology(GateFamily::two_qubit, 3, InteractionTopology{path}),
                    std::invalid_argument);

    CHECK_NOTHROW(check_base_topology(GateFamily::f2, 4, InteractionTopology{sample_f2_base_4()}));
}

TEST_CASE("the pi/2 three-projector asymptote matches the generic construction") {
    const int n = 4;
    const InteractionTopology topo{star_f1(n)};
    const AttractorSpace closed =
        closed_form_attractor_space(GateFamily::f1, n, kPi / 2, topo);
    for (int k = 0; k < 3; ++k) {
        const DensityOperator rho0 = random_density(n, 900 + k);
        const DensityOperator via_space = asymptotic_state(closed, rho0);
        const DensityOperator via_projectors = pi_half_asymptote(n, rho0);
        CHECK(hs_distance(via_space, via_projectors) <= 1e-10);
    }
}
