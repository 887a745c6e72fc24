#pragma once

// Physical diagnostics on states and trajectories: Hilbert-Schmidt distance,
// permutation invariance (consensus), single-qubit Bloch asymptotes, entropy
// comparisons, correlation index, and conserved-overlap checks.

#include <array>
#include <vector>

#include "qnet/attractors.hpp"
#include "qnet/matrix.hpp"
#include "qnet/ruo.hpp"
#include "qnet/topology.hpp"

namespace qnet {

// Overlaps of the initial state with the invariant product vectors:
// p0 = <0...0|rho0|0...0>, p_plus/p_minus for the +/- product states.
struct OverlapParameters {
    double p0 = 0.0;
    double p_plus = 0.0;
    double p_minus = 0.0;
};

struct BlochVector {
    double x = 0.0, y = 0.0, z = 0.0;
    double norm() const;
};

// Frobenius norm of (a - b). Throws on dimension mismatch.
double hs_distance(const DensityOperator& a, const DensityOperator& b);

// Permutation unitary: qubit i (1-based, qubit 1 = most significant bit) is
// sent to position perm[i-1]. perm must be a permutation of 1..n.
ComplexMatrix qubit_permutation_unitary(int n, const std::vector<int>& perm);

// Largest HS deviation ||P rho P† - rho|| over the transposition (1 2) and
// the full cycle (1 2 ... n) — a generating set of the symmetric group, so
// invariance under both extends to every qubit permutation.
double permutation_deviation(const DensityOperator& rho, int n);

// True iff permutation_deviation(rho, n) <= tol.
bool is_permutation_invariant(const DensityOperator& rho, int n, double tol = 1e-8);

// Overlaps of rho0 with the closed-form product vectors of the one-control
// two-target family: p0, p_plus, p_minus.
OverlapParameters overlap_parameters(const DensityOperator& rho0, int n, double phi);

// Asymptotic single-qubit Bloch vector for the one-control two-target family
// on a large register: a = ((p+ - p-) sin(phi), 0, p0 + (p+ - p-) cos(phi)).
BlochVector bloch_single_qubit_asymptote(const OverlapParameters& params, double phi);

// Single-qubit density operator (I + a.sigma)/2.
DensityOperator bloch_state(const BlochVector& a);

// Index of correlation S(A) + S(B) - S(AB) between qubits a and b (1-based),
// in nats. Divide by ln 2 for bits.
double index_of_correlation(const DensityOperator& rho, int qubit_a, int qubit_b, int n);

// Compares the entropy of the two asymptotic states grown from the same rho0:
// the two-qubit-interaction network on topo2 and the three-qubit family on
// topo3. Returns true iff S(two-qubit asymptote) >= S(three-qubit) - 1e-9.
// Both topologies must be base graphs of their families.
bool entropy_inequality_check(const DensityOperator& rho0, int n, double phi,
                              const DirectedGraph& topo2, const InteractionTopology& topo3,
                              GateFamily family3);

// Local observable sigma = diag(1, -(2^n - 2)/2^n) on one qubit.
ComplexMatrix consensus_sigma(int n);

// For the two-qubit network at phi = pi/2 on a strongly connected graph:
// checks <0...0|rho0|0...0> == Tr[rho_i sigma] within 1e-8 for every
// single-qubit reduction rho_i of the asymptotic state.
bool consensus_observable_check(const DensityOperator& rho0, int n, const DirectedGraph& topo2);

// True iff <0...0|rho(k)|0...0> stays constant along the trajectory (1e-10).
bool conserved_overlap_check(const RandomUnitaryOperation& ruo, const DensityOperator& rho0,
                             int steps);

struct TracePoint {
    int step = 0;
    double distance = 0.0;
};

// Distance to a fixed reference state at every step 0..steps.
std::vector<TracePoint> convergence_trace(const RandomUnitaryOperation& ruo,
                                          const DensityOperator& rho0,
                                          const DensityOperator& reference, int steps);

// Distance between two co-evolving trajectories at every step 0..steps.
std::vector<TracePoint> convergence_trace(const RandomUnitaryOperation& ruo_a,
                                          const DensityOperator& rho_a,
                                          const RandomUnitaryOperation& ruo_b,
                                          const DensityOperator& rho_b, int steps);

// Populations of the even- and odd-parity sectors: {P_even, P_odd}.
// Parity of a basis label is the parity of its 1-bit count.
std::array<double, 2> parity_populations(const DensityOperator& rho, int n);

}  // namespace qnet
