#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qnet/matrix.hpp"

namespace qnet {

// Deterministic random source. std::mt19937_64 has a bit-exact specification,
// and the uniform/normal transforms below are written out by hand so that a
// given seed produces the same stream on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }
    double uniform();                          // [0, 1)
    double normal();                           // standard normal (Box-Muller)
    cdouble complex_normal();                  // CN(0,1): (g1 + i g2)/sqrt(2)
    std::uint64_t below(std::uint64_t bound);  // [0, bound)

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Trace out all qubits not listed in `keep` (1-based, qubit 1 = most
// significant bit). The reduced system keeps the relative qubit order.
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep, int n_qubits);

// -sum lambda ln lambda over eigenvalues above the cutoff (natural log).
double von_neumann_entropy(const DensityOperator& rho, double cutoff = 1e-12);

// Modified Gram-Schmidt in the Hilbert-Schmidt inner product; inputs whose
// residual after projection is below rel_tol * (largest input norm) are
// dropped. Returns an orthonormal spanning set.
std::vector<ComplexMatrix> orthonormalize(const std::vector<ComplexMatrix>& ops, double rel_tol = 1e-10);
std::vector<StateVector> orthonormalize_states(const std::vector<StateVector>& vecs, double rel_tol = 1e-10);

// Ginibre-sampled density operator G G† / Tr[G G†] on `qubits` qubits.
DensityOperator random_density(int qubits, std::uint64_t seed);
DensityOperator random_density_dim(std::size_t dim, Rng& rng);

// Column-stacking vectorization: vec(X)[j*d + i] = X(i,j), so that
// vec(A X B) = (B^T kron A) vec(X).
StateVector vec_op(const ComplexMatrix& x);
ComplexMatrix unvec_op(const StateVector& v, std::size_t d);

}  // namespace qnet
