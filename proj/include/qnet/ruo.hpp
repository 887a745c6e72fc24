#pragma once

// Random unitary operations: convex mixtures of unitary conjugations,
//   rho -> sum_i p_i U_i rho U_i†,
// with every U_i a controlled interaction gate drawn from a topology.

#include <string>
#include <vector>

#include "qnet/gates.hpp"
#include "qnet/matrix.hpp"
#include "qnet/topology.hpp"

namespace qnet {

struct RuoBranch {
    GateSpec gate;
    ComplexMatrix unitary;
    double probability = 0.0;
    std::string label;
};

struct RandomUnitaryOperation {
    int n = 0;
    std::vector<RuoBranch> branches;

    std::size_t dim() const { return std::size_t{1} << n; }
    void validate() const;
};

// one branch per edge/hyperedge, with the topology's probabilities
// (uniform when none are attached)
RandomUnitaryOperation from_topology(const InteractionTopology& topo, double phi);

DensityOperator apply(const RandomUnitaryOperation& ruo, const DensityOperator& rho);

// trajectory [rho(0), rho(stride), ...]; the final state is always included
std::vector<DensityOperator> iterate(const RandomUnitaryOperation& ruo, const DensityOperator& rho0,
                                     int steps, int stride = 1);

// convex mixture of operations on the same register
RandomUnitaryOperation mix(const std::vector<std::pair<RandomUnitaryOperation, double>>& parts);

// column-stacking matrix sum_i p_i conj(U_i) kron U_i; guarded to dim <= 64
ComplexMatrix superoperator_matrix(const RandomUnitaryOperation& ruo);

// Undirected graph on basis labels: z and z' are joined (with the branch
// index as color) when some branch has |U(z',z)| above the coupling cutoff.
// Labels with no incident edge are pruned.
IndexGraph build_index_graph(const RandomUnitaryOperation& ruo, double coupling_tol = 1e-12);

}  // namespace qnet
