#include "qnet/gates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qnet/decomp.hpp"
#include "qnet/kernels.hpp"

namespace qnet {

namespace {

std::size_t expected_controls(GateKind k) { return k == GateKind::cu32 ? 2 : 1; }
std::size_t expected_targets(GateKind k) { return k == GateKind::cu31 ? 2 : 1; }

}  // namespace

void GateSpec::validate() const {
    if (n < 2 || n > 14) throw std::invalid_argument("gate: register size out of range");
    if (controls.size() != expected_controls(kind))
        throw std::invalid_argument("gate: wrong number of controls for kind");
    if (targets.size() != expected_targets(kind))
        throw std::invalid_argument("gate: wrong number of targets for kind");
    std::vector<int> all = controls;
    all.insert(all.end(), targets.begin(), targets.end());
    for (int q : all)
        if (q < 1 || q > n) throw std::invalid_argument("gate: qubit label out of range");
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("gate: repeated qubit label");
}

ComplexMatrix u_phi(double phi) {
    ComplexMatrix u(2, 2);
    u(0, 0) = std::cos(phi);
    u(0, 1) = std::sin(phi);
    u(1, 0) = std::sin(phi);
    u(1, 1) = -std::cos(phi);
    return u;
}

ComplexMatrix build_gate(const GateSpec& spec) {
    spec.validate();
    const std::size_t d = std::size_t{1} << spec.n;
    const ComplexMatrix u = u_phi(spec.phi);

    std::size_t control_mask = 0;
    for (int q : spec.controls) control_mask |= std::size_t{1} << (spec.n - q);

    ComplexMatrix g(d, d);
    for (std::size_t z = 0; z < d; ++z) {
        if ((z & control_mask) != control_mask) {
            g(z, z) = 1.0;
            continue;
        }
        // u acts on each target bit; amplitudes multiply across targets
        const std::size_t nt = spec.targets.size();
        for (std::size_t combo = 0; combo < (std::size_t{1} << nt); ++combo) {
            std::size_t zp = z;
            cdouble coeff = 1.0;
            for (std::size_t t = 0; t < nt; ++t) {
                const std::size_t bit = std::size_t{1} << (spec.n - spec.targets[t]);
                const int from = (z & bit) ? 1 : 0;
                const int to = (combo >> t) & 1;
                coeff *= u(to, from);
                if (to)
                    zp |= bit;
                else
                    zp &= ~bit;
            }
            g(zp, z) += coeff;
        }
    }
    return g;
}

void apply_gate_density(const GateSpec& spec, ComplexMatrix& rho) {
    spec.validate();
    const std::size_t d = std::size_t{1} << spec.n;
    if (rho.rows() != d || rho.cols() != d)
        throw std::invalid_argument("apply_gate_density: dimension mismatch");
    const ComplexMatrix u = u_phi(spec.phi);
    const cdouble u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);

    std::size_t control_mask = 0;
    for (int q : spec.controls) control_mask |= std::size_t{1} << (spec.n - q);

    // The gate factors into one controlled two-level transform per target
    // (all sharing the control set), applied in sequence.
    for (int target : spec.targets) {
        const std::size_t tbit = std::size_t{1} << (spec.n - target);
        // left action: mixes row z0 with row z1 = z0 | tbit where controls are on
        for (std::size_t z0 = 0; z0 < d; ++z0) {
            if (z0 & tbit) continue;
            if ((z0 & control_mask) != control_mask) continue;
            const std::size_t z1 = z0 | tbit;
            cdouble* r0 = rho.row(z0);
            cdouble* r1 = rho.row(z1);
            for (std::size_t j = 0; j < d; ++j) {
                const cdouble a = r0[j], b = r1[j];
                r0[j] = u00 * a + u01 * b;
                r1[j] = u10 * a + u11 * b;
            }
        }
        // right action with G†: mixes the matching columns
        const cdouble c00 = std::conj(u00), c01 = std::conj(u01);
        const cdouble c10 = std::conj(u10), c11 = std::conj(u11);
        for (std::size_t z0 = 0; z0 < d; ++z0) {
            if (z0 & tbit) continue;
            if ((z0 & control_mask) != control_mask) continue;
            const std::size_t z1 = z0 | tbit;
            for (std::size_t i = 0; i < d; ++i) {
                cdouble* row = rho.row(i);
                const cdouble a = row[z0], b = row[z1];
                row[z0] = a * c00 + b * c01;
                row[z1] = a * c10 + b * c11;
            }
        }
    }
}

bool gate_eigenvalues_check(const GateSpec& spec, double tol) {
    const ComplexMatrix g = build_gate(spec);
    if (max_abs(g - adjoint(g)) > tol) return false;
    const HermitianEig eig = hermitian_eig(g);
    for (double lambda : eig.eigenvalues)
        if (std::abs(lambda - 1.0) > tol && std::abs(lambda + 1.0) > tol) return false;
    return true;
}

}  // namespace qnet
