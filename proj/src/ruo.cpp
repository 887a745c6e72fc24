#include "qnet/ruo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qnet/kernels.hpp"

namespace qnet {

void RandomUnitaryOperation::validate() const {
    if (branches.empty()) throw std::invalid_argument("operation has no branches");
    double sum = 0.0;
    for (const RuoBranch& b : branches) {
        if (!(b.probability > 0.0))
            throw std::invalid_argument("operation: branch probabilities must be positive");
        sum += b.probability;
        if (b.unitary.rows() != dim() || b.unitary.cols() != dim())
            throw std::invalid_argument("operation: branch dimension mismatch");
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("operation: branch probabilities sum to " + std::to_string(sum));
}

namespace {

std::string edge_label(const Edge& e) {
    return "cu2(" + std::to_string(e.tail) + "->" + std::to_string(e.head) + ")";
}

std::string edge_label(const F1Hyperedge& e) {
    return "cu31(" + std::to_string(e.control) + "->" + std::to_string(e.targets[0]) +
           std::to_string(e.targets[1]) + ")";
}

std::string edge_label(const F2Hyperedge& e) {
    return "cu32(" + std::to_string(e.controls[0]) + std::to_string(e.controls[1]) + "->" +
           std::to_string(e.target) + ")";
}

}  // namespace

RandomUnitaryOperation from_topology(const InteractionTopology& topo, double phi) {
    RandomUnitaryOperation ruo;
    ruo.n = topology_qubits(topo);

    auto add_branch = [&](GateSpec spec, double p, std::string label) {
        RuoBranch b;
        b.unitary = build_gate(spec);
        b.gate = std::move(spec);
        b.probability = p;
        b.label = std::move(label);
        ruo.branches.push_back(std::move(b));
    };

    if (const auto* g = std::get_if<DirectedGraph>(&topo)) {
        g->validate();
        const auto probs = effective_probs(g->edges.size(), g->probs);
        for (std::size_t i = 0; i < g->edges.size(); ++i) {
            const Edge& e = g->edges[i];
            add_branch(GateSpec{GateKind::cu2, {e.tail}, {e.head}, phi, g->n}, probs[i], edge_label(e));
        }
    } else if (const auto* g = std::get_if<F1Graph>(&topo)) {
        g->validate();
        const auto probs = effective_probs(g->hyperedges.size(), g->probs);
        for (std::size_t i = 0; i < g->hyperedges.size(); ++i) {
            const F1Hyperedge& e = g->hyperedges[i];
            add_branch(GateSpec{GateKind::cu31, {e.control}, {e.targets[0], e.targets[1]}, phi, g->n},
                       probs[i], edge_label(e));
        }
    } else {
        const auto& gf = std::get<F2Graph>(topo);
        gf.validate();
        const auto probs = effective_probs(gf.hyperedges.size(), gf.probs);
        for (std::size_t i = 0; i < gf.hyperedges.size(); ++i) {
            const F2Hyperedge& e = gf.hyperedges[i];
            add_branch(GateSpec{GateKind::cu32, {e.controls[0], e.controls[1]}, {e.target}, phi, gf.n},
                       probs[i], edge_label(e));
        }
    }
    ruo.validate();
    return ruo;
}

DensityOperator apply(const RandomUnitaryOperation& ruo, const DensityOperator& rho) {
    if (rho.dim() != ruo.dim()) throw std::invalid_argument("apply: dimension mismatch");
    ComplexMatrix out(ruo.dim(), ruo.dim());
    ComplexMatrix work(ruo.dim(), ruo.dim());
    for (const RuoBranch& b : ruo.branches) {
        work = rho.mat;
        apply_gate_density(b.gate, work);
        kernels::axpy(b.probability, work.data(), out.data(), out.size());
    }
    return DensityOperator(std::move(out));
}

std::vector<DensityOperator> iterate(const RandomUnitaryOperation& ruo, const DensityOperator& rho0,
                                     int steps, int stride) {
    if (steps < 0) throw std::invalid_argument("iterate: negative step count");
    if (stride < 1) throw std::invalid_argument("iterate: stride must be >= 1");
    std::vector<DensityOperator> traj;
    traj.push_back(rho0);
    DensityOperator cur = rho0;
    for (int k = 1; k <= steps; ++k) {
        cur = apply(ruo, cur);
        if (k % stride == 0 || k == steps) traj.push_back(cur);
    }
    return traj;
}

RandomUnitaryOperation mix(const std::vector<std::pair<RandomUnitaryOperation, double>>& parts) {
    if (parts.empty()) throw std::invalid_argument("mix: no operations");
    double wsum = 0.0;
    for (const auto& [op, w] : parts) {
        if (!(w > 0.0)) throw std::invalid_argument("mix: weights must be positive");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-9)
        throw std::invalid_argument("mix: weights sum to " + std::to_string(wsum));

    RandomUnitaryOperation out;
    out.n = parts.front().first.n;
    for (const auto& [op, w] : parts) {
        if (op.n != out.n) throw std::invalid_argument("mix: register size mismatch");
        op.validate();
        for (const RuoBranch& b : op.branches) {
            RuoBranch nb = b;
            nb.probability *= w;
            out.branches.push_back(std::move(nb));
        }
    }
    out.validate();
    return out;
}

ComplexMatrix superoperator_matrix(const RandomUnitaryOperation& ruo) {
    ruo.validate();
    const std::size_t d = ruo.dim();
    if (d > 64)
        throw std::invalid_argument("superoperator_matrix: register too large (dim > 64)");
    ComplexMatrix m(d * d, d * d);
    for (const RuoBranch& b : ruo.branches) {
        const ComplexMatrix term = kron(conjugated(b.unitary), b.unitary);
        kernels::axpy(b.probability, term.data(), m.data(), m.size());
    }
    return m;
}

IndexGraph build_index_graph(const RandomUnitaryOperation& ruo, double coupling_tol) {
    ruo.validate();
    const std::size_t d = ruo.dim();
    IndexGraph g;
    std::vector<char> used(d, 0);
    for (std::size_t zp = 0; zp < d; ++zp)
        for (std::size_t z = zp + 1; z < d; ++z) {
            for (std::size_t e = 0; e < ruo.branches.size(); ++e) {
                const ComplexMatrix& u = ruo.branches[e].unitary;
                if (std::abs(u(zp, z)) > coupling_tol || std::abs(u(z, zp)) > coupling_tol) {
                    g.edges.push_back({zp, z, static_cast<int>(e)});
                    used[zp] = used[z] = 1;
                }
            }
        }
    for (std::size_t z = 0; z < d; ++z)
        if (used[z]) g.vertices.push_back(z);
    return g;
}

}  // namespace qnet
