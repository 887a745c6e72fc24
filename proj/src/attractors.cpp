#include "qnet/attractors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "qnet/decomp.hpp"
#include "qnet/kernels.hpp"
#include "qnet/linalg.hpp"

namespace qnet {

namespace {

constexpr double kLambdaMatchTol = 1e-9;
constexpr double kPiHalfTol = 1e-12;

bool is_pi_half(double phi) { return std::abs(phi - std::numbers::pi / 2.0) < kPiHalfTol; }

int parity_of(std::size_t z) { return std::popcount(z) & 1; }

double branch_residual(const RandomUnitaryOperation& ruo, const ComplexMatrix& x, cdouble lambda) {
    double worst = 0.0;
    for (const RuoBranch& b : ruo.branches) {
        ComplexMatrix r = unitary_conjugate(b.unitary, x);
        kernels::axpy(-lambda, x.data(), r.data(), r.size());
        worst = std::max(worst, hs_norm(r));
    }
    return worst;
}

}  // namespace

const AttractorComponent* AttractorSpace::component(cdouble lambda, double tol) const {
    for (const AttractorComponent& c : components)
        if (std::abs(c.lambda - lambda) <= tol) return &c;
    return nullptr;
}

std::size_t AttractorSpace::dim(cdouble lambda) const {
    const AttractorComponent* c = component(lambda);
    return c ? c->basis.size() : 0;
}

std::size_t AttractorSpace::total_dim() const {
    std::size_t total = 0;
    for (const AttractorComponent& c : components) total += c.basis.size();
    return total;
}

AttractorSpace solve_attractors(const RandomUnitaryOperation& ruo, const std::vector<cdouble>& lambdas,
                                double tol) {
    ruo.validate();
    const std::size_t d = ruo.dim();
    const std::size_t dd = d * d;
    if (dd > 4096)
        throw std::invalid_argument("solve_attractors: register too large for the dense solver");
    const double m = static_cast<double>(ruo.branches.size());

    ComplexMatrix s(dd, dd);
    for (const RuoBranch& b : ruo.branches) {
        const ComplexMatrix term = kron(conjugated(b.unitary), b.unitary);
        kernels::axpy(1.0, term.data(), s.data(), s.size());
    }
    const ComplexMatrix sadj = adjoint(s);

    AttractorSpace space;
    space.n = ruo.n;
    for (const cdouble lambda : lambdas) {
        if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
            throw std::invalid_argument("solve_attractors: candidate eigenvalue must have unit modulus");
        // G = 2m I - conj(lambda) S - lambda S†  (positive semidefinite)
        ComplexMatrix g(dd, dd);
        kernels::axpy(-std::conj(lambda), s.data(), g.data(), g.size());
        kernels::axpy(-lambda, sadj.data(), g.data(), g.size());
        for (std::size_t i = 0; i < dd; ++i) g(i, i) += 2.0 * m;

        const HermitianEig eig = hermitian_eig(g);
        const double cut = tol * std::max(eig.eigenvalues.back(), 1.0);

        AttractorComponent comp;
        comp.lambda = lambda;
        for (std::size_t k = 0; k < dd && eig.eigenvalues[k] <= cut; ++k) {
            StateVector col(dd);
            for (std::size_t i = 0; i < dd; ++i) col[i] = eig.eigenvectors(i, k);
            ComplexMatrix x = unvec_op(col, d);
            comp.max_residual = std::max(comp.max_residual, branch_residual(ruo, x, lambda));
            comp.basis.push_back(std::move(x));
        }
        space.components.push_back(std::move(comp));
    }
    return space;
}

CommonEigenbasis common_eigenvectors(const RandomUnitaryOperation& ruo, double tol) {
    ruo.validate();
    const std::size_t d = ruo.dim();
    const std::size_t m = ruo.branches.size();

    CommonEigenbasis out;
    out.n = ruo.n;
    for (const double alpha : {1.0, -1.0}) {
        ComplexMatrix stack(m * d, d);
        for (std::size_t i = 0; i < m; ++i) {
            const ComplexMatrix& u = ruo.branches[i].unitary;
            for (std::size_t r = 0; r < d; ++r) {
                cdouble* dst = stack.row(i * d + r);
                for (std::size_t c = 0; c < d; ++c) dst[c] = u(r, c);
                dst[r] -= alpha;
            }
        }
        for (StateVector& v : null_space(stack, tol)) {
            double worst = 0.0;
            for (const RuoBranch& b : ruo.branches) {
                StateVector uv(d);
                for (std::size_t r = 0; r < d; ++r) {
                    // (U v)_r via conjugated dot of the row
                    cdouble acc = 0.0;
                    const cdouble* row = b.unitary.row(r);
                    for (std::size_t c = 0; c < d; ++c) acc += row[c] * v[c];
                    uv[r] = acc - alpha * v[r];
                }
                worst = std::max(worst, uv.norm());
            }
            out.max_residual = std::max(out.max_residual, worst);
            out.vectors.push_back(std::move(v));
            out.alphas.push_back(alpha);
        }
    }
    return out;
}

std::vector<ComplexMatrix> p_attractors(const CommonEigenbasis& basis, cdouble lambda) {
    std::vector<ComplexMatrix> out;
    for (std::size_t a = 0; a < basis.vectors.size(); ++a)
        for (std::size_t b = 0; b < basis.vectors.size(); ++b)
            if (std::abs(basis.alphas[a] * std::conj(basis.alphas[b]) - lambda) <= kLambdaMatchTol)
                out.push_back(dyad(basis.vectors[a], basis.vectors[b]));
    return out;
}

ClosedFormVectors closed_form_vectors(GateFamily family, int n, double phi) {
    const int min_n = family == GateFamily::two_qubit ? 2 : 3;
    if (n < min_n) throw std::invalid_argument("closed_form_vectors: register too small for family");
    if (n > 20) throw std::invalid_argument("closed_form_vectors: register too large");
    if (!(phi > 1e-12 && phi < std::numbers::pi - 1e-12))
        throw std::invalid_argument("closed_form_vectors: phi must lie strictly inside (0, pi)");

    const std::size_t d = std::size_t{1} << n;
    const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);

    ClosedFormVectors out;
    out.raw.push_back(StateVector::basis_state(d, 0));

    StateVector plus(d);
    for (std::size_t z = 0; z < d; ++z) {
        const int tau = std::popcount(z);
        plus[z] = std::pow(c, n - tau) * std::pow(s, tau);
    }
    out.raw.push_back(std::move(plus));

    if (family == GateFamily::f1) {
        StateVector minus(d);
        for (std::size_t z = 0; z < d; ++z) {
            const int tau = std::popcount(z);
            minus[z] = std::pow(s, n - tau) * std::pow(-c, tau);
        }
        out.raw.push_back(std::move(minus));
    } else if (family == GateFamily::f2) {
        for (int i = 1; i <= n; ++i)
            out.raw.push_back(StateVector::basis_state(d, std::size_t{1} << (n - i)));
    }

    out.orthonormal = orthonormalize_states(out.raw);
    return out;
}

ComplexMatrix minus_one_attractor_two_qubit(double phi) {
    const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
    ComplexMatrix m(4, 4);
    // basis labels: |01> = 1, |10> = 2, |11> = 3
    m(1, 2) += s;
    m(1, 3) -= c;
    m(2, 3) += c;
    // anti-hermitize; the i factor picks the Hermitian representative of the
    // one-dimensional eigenspace
    ComplexMatrix x = m - adjoint(m);
    x *= cdouble{0.0, 1.0 / hs_norm(x)};
    return x;
}

ComplexMatrix minus_one_attractor_f1_pi_half_n3() {
    ComplexMatrix m(8, 8);
    // i (|101><011| - |110><011| + |110><101|) + h.c.
    m(5, 3) += 1.0;
    m(6, 3) -= 1.0;
    m(6, 5) += 1.0;
    ComplexMatrix x = m - adjoint(m);
    x *= cdouble{0.0, 1.0 / hs_norm(x)};
    return x;
}

namespace {

ComplexMatrix parity_projector(int n, int parity) {
    const std::size_t d = std::size_t{1} << n;
    ComplexMatrix p(d, d);
    for (std::size_t z = 0; z < d; ++z)
        if (parity_of(z) == parity) p(z, z) = 1.0;
    return p;
}

const char* family_predicate_name(GateFamily family) {
    switch (family) {
        case GateFamily::two_qubit:
            return "is_strongly_connected";
        case GateFamily::f1:
            return "f1_is_strongly_connected";
        case GateFamily::f2:
            return "f2_is_base";
    }
    return "?";
}

}  // namespace

void check_base_topology(GateFamily family, int n, const InteractionTopology& topo) {
    if (topology_qubits(topo) != n)
        throw std::invalid_argument("closed-form analysis: register size mismatch");
    bool kind_ok = false, pred_ok = false;
    switch (family) {
        case GateFamily::two_qubit:
            if (const auto* g = std::get_if<DirectedGraph>(&topo)) {
                kind_ok = true;
                pred_ok = is_strongly_connected(*g);
            }
            break;
        case GateFamily::f1:
            if (const auto* g = std::get_if<F1Graph>(&topo)) {
                kind_ok = true;
                pred_ok = f1_is_strongly_connected(*g);
            }
            break;
        case GateFamily::f2:
            if (const auto* g = std::get_if<F2Graph>(&topo)) {
                kind_ok = true;
                pred_ok = f2_is_base(*g);
            }
            break;
    }
    if (!kind_ok)
        throw std::invalid_argument("closed-form analysis: topology kind does not match family");
    if (!pred_ok)
        throw std::invalid_argument(std::string("closed-form analysis: topology fails ") +
                                    family_predicate_name(family));
}

AttractorSpace closed_form_attractor_space(GateFamily family, int n, double phi,
                                           const InteractionTopology& topo) {
    check_base_topology(family, n, topo);
    if (n > 8)
        throw std::invalid_argument(
            "closed_form_attractor_space: operator basis limited to n <= 8 "
            "(closed_form_dimensions handles larger registers)");

    const std::size_t d = std::size_t{1} << n;
    const ClosedFormVectors cf = closed_form_vectors(family, n, phi);
    const auto& vs = cf.orthonormal;

    std::vector<ComplexMatrix> ops;
    for (const StateVector& a : vs)
        for (const StateVector& b : vs) ops.push_back(dyad(a, b));
    if (family == GateFamily::f1 && is_pi_half(phi)) {
        ops.push_back(parity_projector(n, 0));
        ops.push_back(parity_projector(n, 1));
    }
    ops.push_back(ComplexMatrix::identity(d));

    const RandomUnitaryOperation ruo = from_topology(topo, phi);

    AttractorSpace space;
    space.n = n;

    AttractorComponent plus;
    plus.lambda = 1.0;
    plus.basis = orthonormalize(ops);
    for (const ComplexMatrix& x : plus.basis)
        plus.max_residual = std::max(plus.max_residual, branch_residual(ruo, x, plus.lambda));
    space.components.push_back(std::move(plus));

    AttractorComponent minus;
    minus.lambda = -1.0;
    if (family == GateFamily::two_qubit && n == 2) {
        minus.basis.push_back(minus_one_attractor_two_qubit(phi));
    } else if (family == GateFamily::f1 && n == 3 && is_pi_half(phi)) {
        minus.basis.push_back(minus_one_attractor_f1_pi_half_n3());
    }
    for (const ComplexMatrix& x : minus.basis)
        minus.max_residual = std::max(minus.max_residual, branch_residual(ruo, x, minus.lambda));
    space.components.push_back(std::move(minus));

    return space;
}

ClosedFormDims closed_form_dimensions(GateFamily family, int n, double phi) {
    const ClosedFormVectors cf = closed_form_vectors(family, n, phi);
    const auto& raw = cf.raw;
    const std::size_t k = raw.size();
    const std::size_t d = std::size_t{1} << n;
    const bool parity_ops = family == GateFamily::f1 && is_pi_half(phi);

    // Gram matrix of the generating family {dyads} (+ parity projectors) + I,
    // using only vector-level inner products.
    std::vector<cdouble> vv(k * k);  // <v_a | v_b>
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) vv[a * k + b] = inner(raw[a], raw[b]);

    // <v_a | P_parity | v_b>
    std::vector<cdouble> vpv[2];
    double trp[2] = {0.0, 0.0};
    if (parity_ops) {
        for (int par = 0; par < 2; ++par) vpv[par].assign(k * k, cdouble{0.0, 0.0});
        for (std::size_t z = 0; z < d; ++z) {
            const int par = parity_of(z);
            trp[par] += 1.0;
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b)
                    vpv[par][a * k + b] += std::conj(raw[a][z]) * raw[b][z];
        }
    }

    const std::size_t nops = k * k + (parity_ops ? 2 : 0) + 1;
    ComplexMatrix gram(nops, nops);
    // op order: dyads (a,b) at index a*k+b, then parity projectors, then I
    auto dyad_inner = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t dd2) {
        // <D_ab, D_cd> = <v_a|v_c> <v_d|v_b>
        return vv[a * k + c] * vv[dd2 * k + b];
    };
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c)
                for (std::size_t e = 0; e < k; ++e)
                    gram(a * k + b, c * k + e) = dyad_inner(a, b, c, e);

    std::size_t idx = k * k;
    if (parity_ops) {
        for (int par = 0; par < 2; ++par) {
            const std::size_t pi_idx = idx + par;
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) {
                    // <D_ab, P> = <v_a| P |v_b>
                    gram(a * k + b, pi_idx) = vpv[par][a * k + b];
                    gram(pi_idx, a * k + b) = std::conj(vpv[par][a * k + b]);
                }
            gram(pi_idx, pi_idx) = trp[par];
        }
        gram(idx, idx + 1) = 0.0;
        gram(idx + 1, idx) = 0.0;
    }
    const std::size_t id_idx = nops - 1;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            // <D_ab, I> = <v_a | v_b>
            gram(a * k + b, id_idx) = vv[a * k + b];
            gram(id_idx, a * k + b) = std::conj(vv[a * k + b]);
        }
    if (parity_ops) {
        gram(idx, id_idx) = trp[0];
        gram(id_idx, idx) = trp[0];
        gram(idx + 1, id_idx) = trp[1];
        gram(id_idx, idx + 1) = trp[1];
    }
    gram(id_idx, id_idx) = static_cast<double>(d);

    const HermitianEig eig = hermitian_eig(gram);
    const double cut = 1e-12 * std::max(eig.eigenvalues.back(), 1.0);
    std::size_t rank = 0;
    for (double lambda : eig.eigenvalues)
        if (lambda > cut) ++rank;

    ClosedFormDims dims;
    dims.dim_plus = rank;
    dims.dim_minus = 0;
    if (family == GateFamily::two_qubit && n == 2) dims.dim_minus = 1;
    if (family == GateFamily::f1 && n == 3 && is_pi_half(phi)) dims.dim_minus = 1;
    return dims;
}

DensityOperator asymptotic_state(const AttractorSpace& space, const DensityOperator& rho0,
                                 int step_parity) {
    if (space.components.empty()) throw std::invalid_argument("asymptotic_state: empty space");
    const std::size_t d = rho0.dim();
    ComplexMatrix out(d, d);
    for (const AttractorComponent& comp : space.components) {
        if (comp.basis.empty()) continue;
        if (comp.basis.front().rows() != d)
            throw std::invalid_argument("asymptotic_state: dimension mismatch");
        double factor;
        if (std::abs(comp.lambda - cdouble{1.0, 0.0}) <= kLambdaMatchTol)
            factor = 1.0;
        else if (std::abs(comp.lambda + cdouble{1.0, 0.0}) <= kLambdaMatchTol)
            factor = (step_parity % 2 == 0) ? 1.0 : -1.0;
        else
            throw std::invalid_argument("asymptotic_state: only eigenvalues +1 and -1 are supported");
        for (const ComplexMatrix& x : comp.basis) {
            const cdouble c = hs_inner(x, rho0.mat);  // Tr[rho0 X†]
            kernels::axpy(factor * c, x.data(), out.data(), out.size());
        }
    }
    return DensityOperator(std::move(out));
}

DensityOperator stationary_state(const CommonEigenbasis& basis, const DensityOperator& rho0) {
    const std::size_t d = rho0.dim();
    const std::size_t k = basis.vectors.size();
    if (k == 0) throw std::invalid_argument("stationary_state: empty eigenbasis");
    for (cdouble alpha : basis.alphas)
        if (std::abs(alpha - cdouble{1.0, 0.0}) > kLambdaMatchTol)
            throw std::invalid_argument("stationary_state: requires alpha = +1 eigenvectors only");
    if (basis.vectors.front().dim() != d)
        throw std::invalid_argument("stationary_state: dimension mismatch");
    if (k >= d) return rho0;  // P covers everything

    // W = V† rho0 V
    std::vector<StateVector> rv(k, StateVector(d));
    for (std::size_t b = 0; b < k; ++b)
        for (std::size_t i = 0; i < d; ++i) {
            cdouble acc = 0.0;
            const cdouble* row = rho0.mat.row(i);
            for (std::size_t j = 0; j < d; ++j) acc += row[j] * basis.vectors[b][j];
            rv[b][i] = acc;
        }
    ComplexMatrix w(k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) w(a, b) = inner(basis.vectors[a], rv[b]);

    ComplexMatrix out(d, d);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            if (w(a, b) == 0.0) continue;
            const ComplexMatrix dab = dyad(basis.vectors[a], basis.vectors[b]);
            kernels::axpy(w(a, b), dab.data(), out.data(), out.size());
        }

    double trp = 0.0;
    for (std::size_t a = 0; a < k; ++a) trp += w(a, a).real();
    const double coeff = (1.0 - trp) / static_cast<double>(d - k);
    for (std::size_t i = 0; i < d; ++i) out(i, i) += coeff;
    for (std::size_t a = 0; a < k; ++a) {
        const ComplexMatrix daa = dyad(basis.vectors[a], basis.vectors[a]);
        kernels::axpy(cdouble{-coeff, 0.0}, daa.data(), out.data(), out.size());
    }
    return DensityOperator(std::move(out));
}

DensityOperator pi_half_asymptote(int n, const DensityOperator& rho0) {
    if (n <= 3) throw std::invalid_argument("pi_half_asymptote: requires n > 3");
    const std::size_t d = std::size_t{1} << n;
    if (rho0.dim() != d) throw std::invalid_argument("pi_half_asymptote: dimension mismatch");

    const double half = static_cast<double>(d / 2);
    StateVector chi_e(d), chi_o(d);
    const double ne = 1.0 / std::sqrt(half - 1.0);  // even-parity strings except 0...0
    const double no = 1.0 / std::sqrt(half);
    for (std::size_t z = 1; z < d; ++z) {
        if (parity_of(z) == 0)
            chi_e[z] = ne;
        else
            chi_o[z] = no;
    }
    std::vector<StateVector> q = {StateVector::basis_state(d, 0), chi_e, chi_o};

    // Q rho0 Q with Q the projector onto span{|0>, chiE, chiO}
    std::vector<StateVector> rv(3, StateVector(d));
    for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t i = 0; i < d; ++i) {
            cdouble acc = 0.0;
            const cdouble* row = rho0.mat.row(i);
            for (std::size_t j = 0; j < d; ++j) acc += row[j] * q[b][j];
            rv[b][i] = acc;
        }
    ComplexMatrix w(3, 3);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) w(a, b) = inner(q[a], rv[b]);

    ComplexMatrix out(d, d);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            if (w(a, b) == 0.0) continue;
            const ComplexMatrix dab = dyad(q[a], q[b]);
            kernels::axpy(w(a, b), dab.data(), out.data(), out.size());
        }

    double tr_even = 0.0, tr_odd = 0.0;
    for (std::size_t z = 0; z < d; ++z) {
        if (parity_of(z) == 0)
            tr_even += rho0.mat(z, z).real();
        else
            tr_odd += rho0.mat(z, z).real();
    }
    const double coef_e = (tr_even - w(0, 0).real() - w(1, 1).real()) / (half - 2.0);
    const double coef_o = (tr_odd - w(2, 2).real()) / (half - 1.0);

    for (std::size_t z = 0; z < d; ++z) {
        if (parity_of(z) == 0)
            out(z, z) += coef_e;
        else
            out(z, z) += coef_o;
    }
    const ComplexMatrix d00 = dyad(q[0], q[0]);
    const ComplexMatrix dee = dyad(q[1], q[1]);
    const ComplexMatrix doo = dyad(q[2], q[2]);
    kernels::axpy(cdouble{-coef_e, 0.0}, d00.data(), out.data(), out.size());
    kernels::axpy(cdouble{-coef_e, 0.0}, dee.data(), out.data(), out.size());
    kernels::axpy(cdouble{-coef_o, 0.0}, doo.data(), out.data(), out.size());
    return DensityOperator(std::move(out));
}

bool space_subset(const AttractorSpace& a, const AttractorSpace& b, double tol) {
    for (const AttractorComponent& ca : a.components) {
        if (ca.basis.empty()) continue;
        const AttractorComponent* cb = b.component(ca.lambda);
        if (!cb || cb->basis.empty()) return false;
        for (const ComplexMatrix& x : ca.basis) {
            ComplexMatrix y = x;
            for (const ComplexMatrix& e : cb->basis) {
                const cdouble c = hs_inner(e, y);
                kernels::axpy(-c, e.data(), y.data(), y.size());
            }
            if (hs_norm(y) > tol) return false;
        }
    }
    return true;
}

AttractorSpace space_intersection(const AttractorSpace& a, const AttractorSpace& b, double angle_tol) {
    AttractorSpace out;
    out.n = a.n;
    for (const AttractorComponent& ca : a.components) {
        if (ca.basis.empty()) continue;
        const AttractorComponent* cb = b.component(ca.lambda);
        if (!cb || cb->basis.empty()) continue;
        const std::size_t d = ca.basis.front().rows();
        const std::size_t dd = d * d;

        // 2I - P_a - P_b on vectorized operators; its null space is the
        // intersection of the two spans
        ComplexMatrix g(dd, dd);
        for (std::size_t i = 0; i < dd; ++i) g(i, i) = 2.0;
        auto subtract_projector = [&](const std::vector<ComplexMatrix>& ops) {
            for (const ComplexMatrix& x : ops) {
                const StateVector v = vec_op(x);
                std::vector<cdouble> vc(dd);
                for (std::size_t i = 0; i < dd; ++i) vc[i] = std::conj(v[i]);
                for (std::size_t i = 0; i < dd; ++i)
                    if (v[i] != 0.0) kernels::axpy(-v[i], vc.data(), g.row(i), dd);
            }
        };
        subtract_projector(ca.basis);
        subtract_projector(cb->basis);

        const HermitianEig eig = hermitian_eig(g);
        AttractorComponent comp;
        comp.lambda = ca.lambda;
        const double cut = angle_tol * angle_tol;
        for (std::size_t k = 0; k < dd && eig.eigenvalues[k] <= cut; ++k) {
            StateVector col(dd);
            for (std::size_t i = 0; i < dd; ++i) col[i] = eig.eigenvectors(i, k);
            comp.basis.push_back(unvec_op(col, d));
        }
        if (!comp.basis.empty()) out.components.push_back(std::move(comp));
    }
    return out;
}

double max_principal_angle_sin(const AttractorSpace& a, const AttractorSpace& b) {
    double worst = 0.0;
    auto one_sided = [](const AttractorComponent& ca, const AttractorComponent& cb) {
        const std::size_t d = ca.basis.front().rows();
        const std::size_t dd = d * d;
        const std::size_t k = ca.basis.size();
        ComplexMatrix resid(dd, k);
        for (std::size_t j = 0; j < k; ++j) {
            ComplexMatrix y = ca.basis[j];
            for (const ComplexMatrix& e : cb.basis) {
                const cdouble c = hs_inner(e, y);
                kernels::axpy(-c, e.data(), y.data(), y.size());
            }
            const StateVector v = vec_op(y);
            for (std::size_t i = 0; i < dd; ++i) resid(i, j) = v[i];
        }
        const Svd svd = jacobi_svd(resid);
        return svd.singular_values.empty() ? 0.0 : svd.singular_values.front();
    };
    for (const AttractorComponent& ca : a.components) {
        if (ca.basis.empty()) continue;
        const AttractorComponent* cb = b.component(ca.lambda);
        if (!cb || cb->basis.size() != ca.basis.size()) return 1.0;
        worst = std::max(worst, one_sided(ca, *cb));
        worst = std::max(worst, one_sided(*cb, ca));
    }
    for (const AttractorComponent& cb : b.components) {
        if (cb.basis.empty()) continue;
        if (!a.component(cb.lambda) || a.dim(cb.lambda) != cb.basis.size()) return 1.0;
    }
    return worst;
}

}  // namespace qnet
