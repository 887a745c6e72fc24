#include "qnet/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "qnet/kernels.hpp"

namespace qnet {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shape mismatch");
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    require_same_shape(*this, o);
    kernels::axpy(1.0, o.data(), data(), size());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    require_same_shape(*this, o);
    kernels::axpy(-1.0, o.data(), data(), size());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cdouble a) {
    kernels::scal(a, data(), size());
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cdouble a, ComplexMatrix m) { return m *= a; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const cdouble ail = a(i, l);
            if (ail != 0.0) kernels::axpy(ail, b.row(l), c.row(i), b.cols());
        }
    }
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = std::conj(m(i, j));
    return r;
}

ComplexMatrix transpose(const ComplexMatrix& m) {
    ComplexMatrix r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j);
    return r;
}

ComplexMatrix conjugated(const ComplexMatrix& m) {
    ComplexMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.size(); ++i) r.data()[i] = std::conj(m.data()[i]);
    return r;
}

cdouble trace(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("trace of non-square matrix");
    cdouble t = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

ComplexMatrix multiply_adjoint_left(const ComplexMatrix& a, const ComplexMatrix& b) {
    // (a† b)(i,:) accumulated from rows of a and b
    if (a.rows() != b.rows()) throw std::invalid_argument("adjoint product shape mismatch");
    ComplexMatrix c(a.cols(), b.cols());
    for (std::size_t l = 0; l < a.rows(); ++l) {
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const cdouble w = std::conj(a(l, i));
            if (w != 0.0) kernels::axpy(w, b.row(l), c.row(i), b.cols());
        }
    }
    return c;
}

ComplexMatrix multiply_adjoint_right(const ComplexMatrix& a, const ComplexMatrix& b) {
    // (a b†)(i,j) = sum_k a(i,k) conj(b(j,k)) = dotc(b.row(j), a.row(i))
    if (a.cols() != b.cols()) throw std::invalid_argument("adjoint product shape mismatch");
    ComplexMatrix c(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j)
            c(i, j) = kernels::dotc(b.row(j), a.row(i), a.cols());
    return c;
}

ComplexMatrix unitary_conjugate(const ComplexMatrix& u, const ComplexMatrix& m) {
    return multiply_adjoint_right(u * m, u);
}

cdouble hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b);
    return kernels::dotc(a.data(), b.data(), a.size());
}

double hs_norm(const ComplexMatrix& m) {
    return std::sqrt(std::max(0.0, hs_inner(m, m).real()));
}

double max_abs(const ComplexMatrix& m) {
    double r = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) r = std::max(r, std::abs(m.data()[i]));
    return r;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b);
    double r = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        r = std::max(r, std::abs(a.data()[i] - b.data()[i]));
    return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cdouble aij = a(i, j);
            if (aij == 0.0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                cdouble* dst = r.row(i * b.rows() + k) + j * b.cols();
                kernels::axpy(aij, b.row(k), dst, b.cols());
            }
        }
    return r;
}

ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors) {
    if (factors.empty()) throw std::invalid_argument("kron_all of empty list");
    ComplexMatrix acc = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) acc = kron(acc, factors[i]);
    return acc;
}

StateVector StateVector::basis_state(std::size_t dim, std::size_t index) {
    if (index >= dim) throw std::invalid_argument("basis index out of range");
    StateVector v(dim);
    v[index] = 1.0;
    return v;
}

double StateVector::norm() const {
    return std::sqrt(kernels::dotc(data_.data(), data_.data(), data_.size()).real());
}

void StateVector::normalize() {
    const double n = norm();
    if (n == 0.0) throw std::runtime_error("cannot normalize zero vector");
    kernels::scal(1.0 / n, data_.data(), data_.size());
}

cdouble inner(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("state dimension mismatch");
    return kernels::dotc(a.data(), b.data(), a.dim());
}

ComplexMatrix dyad(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("state dimension mismatch");
    std::vector<cdouble> bc(b.dim());
    for (std::size_t j = 0; j < b.dim(); ++j) bc[j] = std::conj(b[j]);
    ComplexMatrix m(a.dim(), b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a[i] != 0.0) kernels::axpy(a[i], bc.data(), m.row(i), b.dim());
    return m;
}

DensityOperator DensityOperator::from_state(const StateVector& psi) {
    StateVector copy = psi;
    copy.normalize();
    return DensityOperator(dyad(copy, copy));
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
    ComplexMatrix m = ComplexMatrix::identity(dim);
    m *= cdouble{1.0 / static_cast<double>(dim), 0.0};
    return DensityOperator(std::move(m));
}

}  // namespace qnet
