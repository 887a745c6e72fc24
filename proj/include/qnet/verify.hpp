#pragma once

// Verification batteries: structured pass/fail checks of the structural
// claims the library implements — base-graph attractor dimensions, the
// closed-form constructions, inclusion/mixture laws, convergence, consensus
// properties, entropy relations, and the dense-superoperator oracle.
// Each battery is deterministic for a fixed VerifyOptions::seed.

#include <cstdint>
#include <string>
#include <vector>

#include "qnet/linalg.hpp"
#include "qnet/topology.hpp"

namespace qnet {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // measured values, human-readable
};

struct CheckBattery {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    void add(std::string name, bool pass, std::string detail = "");
    std::size_t failures() const;
};

struct VerifyOptions {
    std::vector<int> ns = {3, 4};     // register sizes where a battery ranges
    std::vector<double> phis;         // empty = battery default
    std::uint64_t seed = 20240901;
    double contain_tol = 1e-7;        // mutual-containment tolerance
    int threads = 1;                  // worker cap for ensemble loops
};

// Random graphs used by the property batteries.
DirectedGraph random_strongly_connected(int n, Rng& rng);
DirectedGraph random_directed(int n, Rng& rng);    // >= 1 edge
F1Graph random_f1(int n, Rng& rng);                // >= 1 hyperedge
F2Graph random_f2(int n, Rng& rng);                // >= 1 hyperedge

// Two-qubit family: every strongly connected graph has dim(+1) = 5 and no
// -1 component for n >= 3; the two-vertex mutual-edge graph adds one
// -1 attractor.
CheckBattery verify_two_qubit_base(const VerifyOptions& opt);

// One-control two-target family: dimensions 10 / 11 (pi/2) with the n = 3
// extra -1 attractor, closed-form vs numeric mutual containment.
CheckBattery verify_theorem1(const VerifyOptions& opt);

// Two-control one-target family: dimensions (n+2)^2 + 1, no -1 component,
// closed-form vs numeric mutual containment.
CheckBattery verify_theorem2(const VerifyOptions& opt);

// Subgraph monotonicity and the mixture laws: random subgraph pairs satisfy
// Atr(h) inside Atr(g); mixed channels satisfy
// Atr(mix) = Atr(two-qubit) = Atr(f1) intersect Atr(f2) on base graphs.
CheckBattery verify_inclusions(const VerifyOptions& opt);

// Attractor spaces do not move when branch probabilities are perturbed.
CheckBattery verify_probability_independence(const VerifyOptions& opt);

// Trajectories approach the predicted asymptotes (ensemble of random
// initial states, co-evolving and fixed-reference flavors).
CheckBattery verify_convergence(const VerifyOptions& opt);

// Permutation invariance of asymptotic states, conservation of the
// |0...0> overlap, and the local-observable consensus identity.
CheckBattery verify_consensus(const VerifyOptions& opt);

// Entropy inequality, parity-sector conservation at pi/2, the pi/2
// three-projector asymptote, the Bloch formula, and the correlation-index
// maximum.
CheckBattery verify_entropy(const VerifyOptions& opt);

// Dense-superoperator oracle: unit-circle eigenspace dimensions match the
// attractor solver exactly.
CheckBattery verify_oracle(const VerifyOptions& opt);

}  // namespace qnet
