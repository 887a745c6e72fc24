#pragma once

// Network description files: a JSON schema naming the register size, the
// interaction angle, and the weighted interaction list, e.g.
//
//   {
//     "qubits": 4,
//     "phi": "pi/2",                        // or a number in radians
//     "interactions": [
//       {"kind": "cu2", "controls": [1], "targets": [2], "p": 0.5},
//       {"kind": "cu2", "controls": [2], "targets": [1], "p": 0.5}
//     ],
//     "family_weights": {"p2": 1.0, "p31": 0.0, "p32": 0.0}   // optional
//   }
//
// Interaction probabilities are normalized per family (each family's entries
// must sum to 1); when several families are present they are mixed by
// family_weights, or uniformly when the block is absent.

#include <optional>
#include <string>
#include <vector>

#include "qnet/gates.hpp"
#include "qnet/ruo.hpp"
#include "qnet/topology.hpp"

namespace qnet {

struct SpecInteraction {
    GateKind kind = GateKind::cu2;
    std::vector<int> controls;
    std::vector<int> targets;
    double p = 0.0;
};

struct FamilyWeights {
    double p2 = 0.0;
    double p31 = 0.0;
    double p32 = 0.0;
};

struct NetworkSpec {
    int qubits = 0;
    double phi = 0.0;
    std::string phi_text;  // as written in the file ("pi/2" or a number)
    std::vector<SpecInteraction> interactions;
    std::optional<FamilyWeights> family_weights;

    void validate() const;  // throws std::invalid_argument naming the field

    std::vector<GateKind> families_present() const;
    bool has_family(GateKind kind) const;

    // Interaction graph of one family, carrying that family's normalized
    // probabilities. Throws when the family has no interactions.
    InteractionTopology topology(GateKind kind) const;

    // The channel of a single family.
    RandomUnitaryOperation family_ruo(GateKind kind) const;

    // The full channel: a single family verbatim, several families mixed by
    // family_weights (uniform mixture when the block is absent).
    RandomUnitaryOperation build_ruo() const;
};

const char* gate_kind_name(GateKind kind);

// Accepts a plain number (radians) or the exact strings "pi/2", "pi/3",
// "pi/4", "pi/6"; must land strictly inside (0, pi).
double parse_phi_token(const std::string& token);

NetworkSpec parse_spec(const std::string& path);
NetworkSpec parse_spec_text(const std::string& text, const std::string& origin = "<input>");

}  // namespace qnet
