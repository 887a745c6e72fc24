#pragma once

// Self-contained dense decompositions for complex matrices:
//  - Hermitian eigensolver (Householder tridiagonalization + implicit-shift QL)
//  - one-sided Jacobi SVD (used for rank decisions and null spaces)
//  - general eigenvalues (Hessenberg reduction + shifted QR, values only)

#include <vector>

#include "qnet/matrix.hpp"

namespace qnet {

struct HermitianEig {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // columns, orthonormal
};

// a is assumed Hermitian; the strictly lower triangle and the Hermitian
// average of the upper triangle define the operator that gets diagonalized.
HermitianEig hermitian_eig(const ComplexMatrix& a);

struct Svd {
    std::vector<double> singular_values;  // descending, >= 0
    ComplexMatrix u;                      // m x r columns (only the nonzero part)
    ComplexMatrix v;                      // n x n, unitary
};

Svd jacobi_svd(const ComplexMatrix& a);

// Orthonormal basis of { x : a x = 0 }, defined numerically as the right
// singular vectors with sigma <= tol * sigma_max. A zero matrix yields the
// full space.
std::vector<StateVector> null_space(const ComplexMatrix& a, double tol = 1e-10);

// Eigenvalues of a general complex square matrix (no vectors).
std::vector<cdouble> general_eigenvalues(const ComplexMatrix& a);

}  // namespace qnet
