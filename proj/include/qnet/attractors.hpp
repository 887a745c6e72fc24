#pragma once

// Attractor analysis for random unitary operations. The attractor space of
//   Phi(rho) = sum_i p_i U_i rho U_i†
// is spanned, per unit-modulus eigenvalue lambda, by the solutions of the
// probability-independent system U_i X U_i† = lambda X for every branch i.
// The gates used here square to the identity, so the relevant candidates are
// lambda = +1 and lambda = -1.

#include <cstddef>
#include <vector>

#include "qnet/matrix.hpp"
#include "qnet/ruo.hpp"
#include "qnet/topology.hpp"

namespace qnet {

struct AttractorComponent {
    cdouble lambda;
    std::vector<ComplexMatrix> basis;  // HS-orthonormal
    double max_residual = 0.0;         // max_i ||U_i X U_i† - lambda X||_HS over the basis
};

struct AttractorSpace {
    int n = 0;
    std::vector<AttractorComponent> components;

    const AttractorComponent* component(cdouble lambda, double tol = 1e-9) const;
    std::size_t dim(cdouble lambda) const;
    std::size_t total_dim() const;
};

// Numeric solver. For each candidate lambda the Gram operator
//   G = sum_i (M_i - lambda)†(M_i - lambda),  M_i = conj(U_i) kron U_i,
// equals 2m I - lambda S† - conj(lambda) S with S = sum_i M_i; its null space
// (one Hermitian eigensolve) is the lambda-component. Branch probabilities
// never enter.
AttractorSpace solve_attractors(const RandomUnitaryOperation& ruo,
                                const std::vector<cdouble>& lambdas = {cdouble{1.0, 0.0},
                                                                       cdouble{-1.0, 0.0}},
                                double tol = 1e-10);

struct CommonEigenbasis {
    int n = 0;
    std::vector<StateVector> vectors;  // orthonormal
    std::vector<cdouble> alphas;       // U_i v = alpha v for every branch
    double max_residual = 0.0;
};

// simultaneous eigenvectors of all branch unitaries, alpha in {+1, -1}
CommonEigenbasis common_eigenvectors(const RandomUnitaryOperation& ruo, double tol = 1e-10);

// dyads |v_a><v_b| with alpha_a conj(alpha_b) = lambda
std::vector<ComplexMatrix> p_attractors(const CommonEigenbasis& basis, cdouble lambda);

enum class GateFamily { two_qubit, f1, f2 };

struct ClosedFormVectors {
    std::vector<StateVector> raw;
    std::vector<StateVector> orthonormal;
};

// Simultaneous eigenvector family (all with alpha = +1):
//   two_qubit: |0...0>, |q+>^n
//   f1:        |0...0>, |q+>^n, |q->^n
//   f2:        |0...0>, |q+>^n, and the n one-excitation basis states
// where |q+> = (cos phi/2, sin phi/2), |q-> = (sin phi/2, -cos phi/2).
ClosedFormVectors closed_form_vectors(GateFamily family, int n, double phi);

// Validates that `topo` matches the family's graph kind, acts on n qubits,
// and satisfies the family's base predicate; throws std::invalid_argument
// naming the failed predicate otherwise.
void check_base_topology(GateFamily family, int n, const InteractionTopology& topo);

// Attractor space implied by the structure theorems for base topologies:
// the p-attractor dyads plus identity, with the additional operators at
// phi = pi/2 (parity projectors for the f1 family; the extra lambda = -1
// operator at n = 3) and the two-qubit n = 2 lambda = -1 operator. Validates
// the family's base predicate on `topo` and throws naming it on failure.
// Materializes dense operators; intended for n <= 8.
AttractorSpace closed_form_attractor_space(GateFamily family, int n, double phi,
                                           const InteractionTopology& topo);

// Dimension counting via the Gram matrix of the generating family; no dense
// operator is formed, so this scales to large registers.
struct ClosedFormDims {
    std::size_t dim_plus = 0;
    std::size_t dim_minus = 0;
};
ClosedFormDims closed_form_dimensions(GateFamily family, int n, double phi);

// The lambda = -1 operators with explicit closed forms, normalized:
// two-qubit register (any phi), and the f1 family at phi = pi/2, n = 3.
ComplexMatrix minus_one_attractor_two_qubit(double phi);
ComplexMatrix minus_one_attractor_f1_pi_half_n3();

// Asymptotic state sum_lambda lambda^parity sum_k Tr[rho0 X_k†] X_k. With a
// nonempty lambda = -1 component the limit is a two-point cycle and
// step_parity (0 = even, 1 = odd) selects the branch.
DensityOperator asymptotic_state(const AttractorSpace& space, const DensityOperator& rho0,
                                 int step_parity = 0);

// Stationary state P rho0 P + Tr[rho0 Ptilde]/Tr[Ptilde] Ptilde built from a
// common eigenbasis with every alpha = +1.
DensityOperator stationary_state(const CommonEigenbasis& basis, const DensityOperator& rho0);

// Three-projector form of the f1 asymptote at phi = pi/2 for n > 3, built
// from |0...0> and the even/odd uniform superpositions.
DensityOperator pi_half_asymptote(int n, const DensityOperator& rho0);

// componentwise span containment within tol (projection residual per basis op)
bool space_subset(const AttractorSpace& a, const AttractorSpace& b, double tol = 1e-7);

// componentwise intersection of spans (empty components dropped)
AttractorSpace space_intersection(const AttractorSpace& a, const AttractorSpace& b,
                                  double angle_tol = 1e-7);

// largest principal angle (its sine) between matching components; requires
// equal dimensions per matched component, else returns 1.
double max_principal_angle_sin(const AttractorSpace& a, const AttractorSpace& b);

}  // namespace qnet
