#pragma once

// Dense row-major complex matrices plus the state/density wrappers used
// throughout the library. Heavy loops sit on top of the kernel layer.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace qnet {

using cdouble = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    cdouble& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cdouble& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    cdouble* row(std::size_t i) { return data_.data() + i * cols_; }
    const cdouble* row(std::size_t i) const { return data_.data() + i * cols_; }

    cdouble* data() { return data_.data(); }
    const cdouble* data() const { return data_.data(); }

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cdouble a);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cdouble> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cdouble a, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix transpose(const ComplexMatrix& m);
ComplexMatrix conjugated(const ComplexMatrix& m);
cdouble trace(const ComplexMatrix& m);

// a† * b and a * b† without forming the adjoint explicitly
ComplexMatrix multiply_adjoint_left(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix multiply_adjoint_right(const ComplexMatrix& a, const ComplexMatrix& b);

// u * m * u†
ComplexMatrix unitary_conjugate(const ComplexMatrix& u, const ComplexMatrix& m);

// Hilbert-Schmidt inner product Tr[a† b]; linear in b, antilinear in a.
cdouble hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);
double hs_norm(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product; multi-factor chains fold from the left:
// kron_all({A,B,C}) = kron(kron(A,B),C).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors);

class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::size_t dim) : data_(dim) {}
    explicit StateVector(std::vector<cdouble> amps) : data_(std::move(amps)) {}

    static StateVector basis_state(std::size_t dim, std::size_t index);

    std::size_t dim() const { return data_.size(); }
    cdouble& operator[](std::size_t i) { return data_[i]; }
    const cdouble& operator[](std::size_t i) const { return data_[i]; }
    cdouble* data() { return data_.data(); }
    const cdouble* data() const { return data_.data(); }

    double norm() const;
    void normalize();

private:
    std::vector<cdouble> data_;
};

cdouble inner(const StateVector& a, const StateVector& b);  // <a|b>
// |a><b|
ComplexMatrix dyad(const StateVector& a, const StateVector& b);

struct DensityOperator {
    ComplexMatrix mat;

    DensityOperator() = default;
    explicit DensityOperator(ComplexMatrix m) : mat(std::move(m)) {}

    static DensityOperator from_state(const StateVector& psi);
    static DensityOperator maximally_mixed(std::size_t dim);

    std::size_t dim() const { return mat.rows(); }
};

// Validity per the conventions used across the library: Hermitian within
// 1e-10, unit trace within 1e-10, smallest eigenvalue >= -1e-9.
bool is_valid_density(const DensityOperator& rho, std::string* why = nullptr);

}  // namespace qnet
