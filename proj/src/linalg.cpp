#include "qnet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qnet/decomp.hpp"
#include "qnet/kernels.hpp"

namespace qnet {

double Rng::uniform() {
    // 53-bit mantissa in [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller; the log argument is in (0, 1]
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

cdouble Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below(0)");
    return gen_() % bound;
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep, int n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (rho.dim() != dim) throw std::invalid_argument("partial_trace: dimension does not match qubit count");
    std::vector<int> kq = keep;
    std::sort(kq.begin(), kq.end());
    if (std::adjacent_find(kq.begin(), kq.end()) != kq.end())
        throw std::invalid_argument("partial_trace: duplicate qubit index");
    for (int q : kq)
        if (q < 1 || q > n_qubits) throw std::invalid_argument("partial_trace: qubit index out of range");

    std::vector<int> rest;
    for (int q = 1; q <= n_qubits; ++q)
        if (!std::binary_search(kq.begin(), kq.end(), q)) rest.push_back(q);

    const int m = static_cast<int>(kq.size());
    const int r = n_qubits - m;
    const std::size_t dk = std::size_t{1} << m;
    const std::size_t dr = std::size_t{1} << r;

    // expand a reduced index to the full-register bits it occupies
    auto expand = [n_qubits](const std::vector<int>& qubits, std::size_t idx) {
        std::size_t z = 0;
        const int count = static_cast<int>(qubits.size());
        for (int t = 0; t < count; ++t)
            if ((idx >> (count - 1 - t)) & 1) z |= std::size_t{1} << (n_qubits - qubits[t]);
        return z;
    };

    std::vector<std::size_t> za(dk), zr(dr);
    for (std::size_t a2 = 0; a2 < dk; ++a2) za[a2] = expand(kq, a2);
    for (std::size_t r2 = 0; r2 < dr; ++r2) zr[r2] = expand(rest, r2);

    ComplexMatrix out(dk, dk);
    for (std::size_t a2 = 0; a2 < dk; ++a2)
        for (std::size_t b2 = 0; b2 < dk; ++b2) {
            cdouble acc = 0.0;
            for (std::size_t r2 = 0; r2 < dr; ++r2) acc += rho.mat(za[a2] | zr[r2], za[b2] | zr[r2]);
            out(a2, b2) = acc;
        }
    return DensityOperator(std::move(out));
}

double von_neumann_entropy(const DensityOperator& rho, double cutoff) {
    const HermitianEig eig = hermitian_eig(rho.mat);
    double s = 0.0;
    for (double lambda : eig.eigenvalues)
        if (lambda > cutoff) s -= lambda * std::log(lambda);
    return s;
}

std::vector<ComplexMatrix> orthonormalize(const std::vector<ComplexMatrix>& ops, double rel_tol) {
    double max_norm = 0.0;
    for (const auto& op : ops) max_norm = std::max(max_norm, hs_norm(op));
    std::vector<ComplexMatrix> basis;
    if (max_norm == 0.0) return basis;
    for (const auto& op : ops) {
        ComplexMatrix y = op;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) {
                const cdouble c = hs_inner(b, y);
                kernels::axpy(-c, b.data(), y.data(), y.size());
            }
        const double nrm = hs_norm(y);
        if (nrm > rel_tol * max_norm) {
            y *= cdouble{1.0 / nrm, 0.0};
            basis.push_back(std::move(y));
        }
    }
    return basis;
}

std::vector<StateVector> orthonormalize_states(const std::vector<StateVector>& vecs, double rel_tol) {
    double max_norm = 0.0;
    for (const auto& v : vecs) max_norm = std::max(max_norm, v.norm());
    std::vector<StateVector> basis;
    if (max_norm == 0.0) return basis;
    for (const auto& v : vecs) {
        StateVector y = v;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) {
                const cdouble c = inner(b, y);
                kernels::axpy(-c, b.data(), y.data(), y.dim());
            }
        const double nrm = y.norm();
        if (nrm > rel_tol * max_norm) {
            kernels::scal(1.0 / nrm, y.data(), y.dim());
            basis.push_back(std::move(y));
        }
    }
    return basis;
}

DensityOperator random_density_dim(std::size_t dim, Rng& rng) {
    ComplexMatrix g(dim, dim);
    for (std::size_t i = 0; i < g.size(); ++i) g.data()[i] = rng.complex_normal();
    ComplexMatrix rho = multiply_adjoint_right(g, g);
    const double tr = trace(rho).real();
    rho *= cdouble{1.0 / tr, 0.0};
    return DensityOperator(std::move(rho));
}

DensityOperator random_density(int qubits, std::uint64_t seed) {
    if (qubits < 1) throw std::invalid_argument("random_density: need at least one qubit");
    Rng rng(seed);
    return random_density_dim(std::size_t{1} << qubits, rng);
}

StateVector vec_op(const ComplexMatrix& x) {
    const std::size_t d = x.rows();
    if (x.cols() != d) throw std::invalid_argument("vec_op: non-square matrix");
    StateVector v(d * d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) v[j * d + i] = x(i, j);
    return v;
}

ComplexMatrix unvec_op(const StateVector& v, std::size_t d) {
    if (v.dim() != d * d) throw std::invalid_argument("unvec_op: dimension mismatch");
    ComplexMatrix x(d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) x(i, j) = v[j * d + i];
    return x;
}

bool is_valid_density(const DensityOperator& rho, std::string* why) {
    const auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (rho.mat.rows() != rho.mat.cols() || rho.mat.rows() == 0) return fail("not a square matrix");
    const ComplexMatrix herm_gap = rho.mat - adjoint(rho.mat);
    if (max_abs(herm_gap) > 1e-10) return fail("not Hermitian within 1e-10");
    if (std::abs(trace(rho.mat) - cdouble{1.0, 0.0}) > 1e-10) return fail("trace differs from 1 by more than 1e-10");
    const HermitianEig eig = hermitian_eig(rho.mat);
    if (eig.eigenvalues.front() < -1e-9) return fail("negative eigenvalue below -1e-9");
    return true;
}

}  // namespace qnet
