#include "qnet/analysis.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qnet/kernels.hpp"
#include "qnet/linalg.hpp"

namespace qnet {

namespace {

// Basis-label image under a qubit permutation: the bit of qubit i moves to
// position perm[i-1].
std::size_t permute_label(std::size_t z, int n, const std::vector<int>& perm) {
    std::size_t out = 0;
    for (int i = 1; i <= n; ++i) {
        const std::size_t bit = (z >> (n - i)) & 1u;
        out |= bit << (n - perm[i - 1]);
    }
    return out;
}

void check_perm(int n, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("qubit permutation: wrong length");
    std::vector<bool> seen(n + 1, false);
    for (int v : perm) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("qubit permutation: not a permutation of 1..n");
        seen[v] = true;
    }
}

double permuted_deviation(const DensityOperator& rho, int n, const std::vector<int>& perm) {
    const std::size_t d = rho.dim();
    std::vector<std::size_t> img(d);
    for (std::size_t z = 0; z < d; ++z) img[z] = permute_label(z, n, perm);
    double acc = 0.0;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const cdouble diff = rho.mat(img[a], img[b]) - rho.mat(a, b);
            acc += std::norm(diff);
        }
    return std::sqrt(acc);
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double hs_distance(const DensityOperator& a, const DensityOperator& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("hs_distance: dimension mismatch");
    ComplexMatrix diff = a.mat;
    diff -= b.mat;
    return hs_norm(diff);
}

ComplexMatrix qubit_permutation_unitary(int n, const std::vector<int>& perm) {
    check_perm(n, perm);
    const std::size_t d = std::size_t{1} << n;
    ComplexMatrix u(d, d);
    for (std::size_t z = 0; z < d; ++z) u(permute_label(z, n, perm), z) = 1.0;
    return u;
}

double permutation_deviation(const DensityOperator& rho, int n) {
    if (rho.dim() != (std::size_t{1} << n))
        throw std::invalid_argument("permutation_deviation: dimension mismatch");
    if (n < 2) return 0.0;
    std::vector<int> swap12(n), cycle(n);
    std::iota(swap12.begin(), swap12.end(), 1);
    std::swap(swap12[0], swap12[1]);
    for (int i = 1; i <= n; ++i) cycle[i - 1] = (i % n) + 1;
    return std::max(permuted_deviation(rho, n, swap12), permuted_deviation(rho, n, cycle));
}

bool is_permutation_invariant(const DensityOperator& rho, int n, double tol) {
    return permutation_deviation(rho, n) <= tol;
}

OverlapParameters overlap_parameters(const DensityOperator& rho0, int n, double phi) {
    const ClosedFormVectors cf = closed_form_vectors(GateFamily::f1, n, phi);
    const auto& raw = cf.raw;  // {|0...0>, plus, minus}, each unit norm
    auto expect = [&](const StateVector& v) {
        cdouble acc = 0.0;
        const std::size_t d = rho0.dim();
        for (std::size_t i = 0; i < d; ++i) {
            cdouble row = 0.0;
            const cdouble* r = rho0.mat.row(i);
            for (std::size_t j = 0; j < d; ++j) row += r[j] * v[j];
            acc += std::conj(v[i]) * row;
        }
        return acc.real();
    };
    OverlapParameters p;
    p.p0 = expect(raw[0]);
    p.p_plus = expect(raw[1]);
    p.p_minus = expect(raw[2]);
    return p;
}

BlochVector bloch_single_qubit_asymptote(const OverlapParameters& params, double phi) {
    const double dp = params.p_plus - params.p_minus;
    return BlochVector{dp * std::sin(phi), 0.0, params.p0 + dp * std::cos(phi)};
}

DensityOperator bloch_state(const BlochVector& a) {
    ComplexMatrix m(2, 2);
    m(0, 0) = 0.5 * (1.0 + a.z);
    m(1, 1) = 0.5 * (1.0 - a.z);
    m(0, 1) = 0.5 * cdouble{a.x, -a.y};
    m(1, 0) = 0.5 * cdouble{a.x, a.y};
    return DensityOperator(std::move(m));
}

double index_of_correlation(const DensityOperator& rho, int qubit_a, int qubit_b, int n) {
    if (qubit_a == qubit_b || qubit_a < 1 || qubit_b < 1 || qubit_a > n || qubit_b > n)
        throw std::invalid_argument("index_of_correlation: invalid qubit pair");
    const DensityOperator ra = partial_trace(rho, {qubit_a}, n);
    const DensityOperator rb = partial_trace(rho, {qubit_b}, n);
    const DensityOperator rab = partial_trace(rho, {qubit_a, qubit_b}, n);
    return von_neumann_entropy(ra) + von_neumann_entropy(rb) - von_neumann_entropy(rab);
}

bool entropy_inequality_check(const DensityOperator& rho0, int n, double phi,
                              const DirectedGraph& topo2, const InteractionTopology& topo3,
                              GateFamily family3) {
    const AttractorSpace s2 =
        closed_form_attractor_space(GateFamily::two_qubit, n, phi, InteractionTopology{topo2});
    const AttractorSpace s3 = closed_form_attractor_space(family3, n, phi, topo3);
    const double e2 = von_neumann_entropy(asymptotic_state(s2, rho0));
    const double e3 = von_neumann_entropy(asymptotic_state(s3, rho0));
    return e2 >= e3 - 1e-9;
}

ComplexMatrix consensus_sigma(int n) {
    const double d = std::pow(2.0, n);
    ComplexMatrix s(2, 2);
    s(0, 0) = 1.0;
    s(1, 1) = -(d - 2.0) / d;
    return s;
}

bool consensus_observable_check(const DensityOperator& rho0, int n, const DirectedGraph& topo2) {
    const double phi = std::numbers::pi / 2.0;
    const AttractorSpace space =
        closed_form_attractor_space(GateFamily::two_qubit, n, phi, InteractionTopology{topo2});
    const DensityOperator inf = asymptotic_state(space, rho0);
    const ComplexMatrix sigma = consensus_sigma(n);
    const double lhs = rho0.mat(0, 0).real();  // <0...0|rho0|0...0>
    for (int q = 1; q <= n; ++q) {
        const DensityOperator red = partial_trace(inf, {q}, n);
        const double rhs = trace(red.mat * sigma).real();
        if (std::abs(lhs - rhs) > 1e-8) return false;
    }
    return true;
}

bool conserved_overlap_check(const RandomUnitaryOperation& ruo, const DensityOperator& rho0,
                             int steps) {
    const double expect = rho0.mat(0, 0).real();
    DensityOperator rho = rho0;
    for (int k = 1; k <= steps; ++k) {
        rho = apply(ruo, rho);
        if (std::abs(rho.mat(0, 0).real() - expect) > 1e-10) return false;
    }
    return true;
}

std::vector<TracePoint> convergence_trace(const RandomUnitaryOperation& ruo,
                                          const DensityOperator& rho0,
                                          const DensityOperator& reference, int steps) {
    if (rho0.dim() != reference.dim())
        throw std::invalid_argument("convergence_trace: dimension mismatch");
    std::vector<TracePoint> out;
    out.reserve(steps + 1);
    DensityOperator rho = rho0;
    out.push_back({0, hs_distance(rho, reference)});
    for (int k = 1; k <= steps; ++k) {
        rho = apply(ruo, rho);
        out.push_back({k, hs_distance(rho, reference)});
    }
    return out;
}

std::vector<TracePoint> convergence_trace(const RandomUnitaryOperation& ruo_a,
                                          const DensityOperator& rho_a,
                                          const RandomUnitaryOperation& ruo_b,
                                          const DensityOperator& rho_b, int steps) {
    if (rho_a.dim() != rho_b.dim())
        throw std::invalid_argument("convergence_trace: dimension mismatch");
    std::vector<TracePoint> out;
    out.reserve(steps + 1);
    DensityOperator a = rho_a, b = rho_b;
    out.push_back({0, hs_distance(a, b)});
    for (int k = 1; k <= steps; ++k) {
        a = apply(ruo_a, a);
        b = apply(ruo_b, b);
        out.push_back({k, hs_distance(a, b)});
    }
    return out;
}

std::array<double, 2> parity_populations(const DensityOperator& rho, int n) {
    if (rho.dim() != (std::size_t{1} << n))
        throw std::invalid_argument("parity_populations: dimension mismatch");
    std::array<double, 2> pops{0.0, 0.0};
    for (std::size_t z = 0; z < rho.dim(); ++z)
        pops[std::popcount(z) & 1] += rho.mat(z, z).real();
    return pops;
}

}  // namespace qnet
