#pragma once

// Controlled interaction gates. The single-qubit core is
//   u(phi) = cos(phi) Z + sin(phi) X,
// Hermitian and unitary with spectrum {+1, -1}. Three controlled flavors:
//   cu2  : one control, one target   (u on the target)
//   cu31 : one control, two targets  (u applied to both targets)
//   cu32 : two controls, one target  (u on the target; Toffoli at phi = pi/2)
// Qubit 1 is the most significant bit of the basis label.

#include <vector>

#include "qnet/matrix.hpp"

namespace qnet {

enum class GateKind { cu2, cu31, cu32 };

struct GateSpec {
    GateKind kind = GateKind::cu2;
    std::vector<int> controls;
    std::vector<int> targets;
    double phi = 0.0;
    int n = 0;  // register size

    void validate() const;
};

ComplexMatrix u_phi(double phi);

// dense 2^n x 2^n matrix
ComplexMatrix build_gate(const GateSpec& spec);

// rho <- G rho G† without materializing G; equivalent to conjugation by
// build_gate(spec) and much cheaper for larger registers
void apply_gate_density(const GateSpec& spec, ComplexMatrix& rho);

// every eigenvalue within tol of +1 or -1
bool gate_eigenvalues_check(const GateSpec& spec, double tol = 1e-9);

}  // namespace qnet
