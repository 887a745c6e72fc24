#include "qnet/network_spec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qnet {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

GateKind kind_from_string(const std::string& s, const std::string& where) {
    if (s == "cu2") return GateKind::cu2;
    if (s == "cu31") return GateKind::cu31;
    if (s == "cu32") return GateKind::cu32;
    fail(where + ".kind: unknown kind \"" + s + "\" (expected cu2, cu31, or cu32)");
}

std::vector<int> int_list(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where + ": expected an array of qubit indices");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) fail(where + ": qubit indices must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

struct FamilySlots {
    std::vector<const SpecInteraction*> items;
    double sum = 0.0;
};

}  // namespace

const char* gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::cu2:
            return "cu2";
        case GateKind::cu31:
            return "cu31";
        case GateKind::cu32:
            return "cu32";
    }
    return "?";
}

double parse_phi_token(const std::string& token) {
    double phi = 0.0;
    if (token == "pi/2")
        phi = std::numbers::pi / 2.0;
    else if (token == "pi/3")
        phi = std::numbers::pi / 3.0;
    else if (token == "pi/4")
        phi = std::numbers::pi / 4.0;
    else if (token == "pi/6")
        phi = std::numbers::pi / 6.0;
    else {
        std::size_t used = 0;
        try {
            phi = std::stod(token, &used);
        } catch (const std::exception&) {
            fail("phi: cannot parse \"" + token + "\" (expected radians or pi/2, pi/3, pi/4, pi/6)");
        }
        if (used != token.size())
            fail("phi: trailing characters in \"" + token + "\"");
    }
    if (!(phi > 0.0 && phi < std::numbers::pi))
        fail("phi: value " + std::to_string(phi) + " outside the open interval (0, pi)");
    return phi;
}

void NetworkSpec::validate() const {
    if (qubits < 2 || qubits > 14) fail("qubits: must lie in 2..14, got " + std::to_string(qubits));
    if (!(phi > 0.0 && phi < std::numbers::pi))
        fail("phi: value " + std::to_string(phi) + " outside the open interval (0, pi)");
    if (interactions.empty()) fail("interactions: list is empty");

    double sums[3] = {0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < interactions.size(); ++i) {
        const SpecInteraction& it = interactions[i];
        const std::string where = "interactions[" + std::to_string(i) + "]";
        GateSpec gs{it.kind, it.controls, it.targets, phi, qubits};
        try {
            gs.validate();
        } catch (const std::invalid_argument& e) {
            fail(where + ": " + e.what());
        }
        if (!(it.p > 0.0)) fail(where + ".p: probability must be positive");
        sums[static_cast<int>(it.kind)] += it.p;
    }
    for (int k = 0; k < 3; ++k) {
        if (sums[k] != 0.0 && std::abs(sums[k] - 1.0) > 1e-9)
            fail(std::string("interactions: family ") + gate_kind_name(static_cast<GateKind>(k)) +
                 " probabilities sum to " + std::to_string(sums[k]) + ", expected 1");
    }

    if (family_weights) {
        const FamilyWeights& w = *family_weights;
        const double ws[3] = {w.p2, w.p31, w.p32};
        double total = 0.0;
        for (int k = 0; k < 3; ++k) {
            const char* name = gate_kind_name(static_cast<GateKind>(k));
            if (ws[k] < 0.0) fail(std::string("family_weights: weight for ") + name + " is negative");
            const bool present = sums[k] != 0.0;
            if (present && ws[k] <= 0.0)
                fail(std::string("family_weights: family ") + name +
                     " has interactions but zero weight");
            if (!present && ws[k] > 0.0)
                fail(std::string("family_weights: family ") + name +
                     " has positive weight but no interactions");
            total += ws[k];
        }
        if (std::abs(total - 1.0) > 1e-9)
            fail("family_weights: weights sum to " + std::to_string(total) + ", expected 1");
    }
}

std::vector<GateKind> NetworkSpec::families_present() const {
    std::vector<GateKind> out;
    for (GateKind k : {GateKind::cu2, GateKind::cu31, GateKind::cu32})
        if (has_family(k)) out.push_back(k);
    return out;
}

bool NetworkSpec::has_family(GateKind kind) const {
    return std::any_of(interactions.begin(), interactions.end(),
                       [&](const SpecInteraction& it) { return it.kind == kind; });
}

InteractionTopology NetworkSpec::topology(GateKind kind) const {
    std::vector<const SpecInteraction*> items;
    double sum = 0.0;
    for (const SpecInteraction& it : interactions)
        if (it.kind == kind) {
            items.push_back(&it);
            sum += it.p;
        }
    if (items.empty())
        fail(std::string("topology: no ") + gate_kind_name(kind) + " interactions in the spec");

    std::vector<double> probs;
    probs.reserve(items.size());
    for (const SpecInteraction* it : items) probs.push_back(it->p / sum);

    switch (kind) {
        case GateKind::cu2: {
            DirectedGraph g;
            g.n = qubits;
            for (const SpecInteraction* it : items)
                g.edges.push_back(Edge{it->controls[0], it->targets[0]});
            g.probs = std::move(probs);
            return g;
        }
        case GateKind::cu31: {
            F1Graph g;
            g.n = qubits;
            for (const SpecInteraction* it : items)
                g.hyperedges.push_back(make_f1_edge(it->controls[0], it->targets[0], it->targets[1]));
            g.probs = std::move(probs);
            return g;
        }
        case GateKind::cu32: {
            F2Graph g;
            g.n = qubits;
            for (const SpecInteraction* it : items)
                g.hyperedges.push_back(make_f2_edge(it->controls[0], it->controls[1], it->targets[0]));
            g.probs = std::move(probs);
            return g;
        }
    }
    fail("topology: unreachable");
}

RandomUnitaryOperation NetworkSpec::family_ruo(GateKind kind) const {
    return from_topology(topology(kind), phi);
}

RandomUnitaryOperation NetworkSpec::build_ruo() const {
    validate();
    const std::vector<GateKind> fams = families_present();
    if (fams.size() == 1) return family_ruo(fams.front());

    std::vector<std::pair<RandomUnitaryOperation, double>> parts;
    for (GateKind k : fams) {
        double w;
        if (family_weights) {
            switch (k) {
                case GateKind::cu2:
                    w = family_weights->p2;
                    break;
                case GateKind::cu31:
                    w = family_weights->p31;
                    break;
                default:
                    w = family_weights->p32;
                    break;
            }
        } else {
            w = 1.0 / static_cast<double>(fams.size());
        }
        parts.emplace_back(family_ruo(k), w);
    }
    return mix(parts);
}

NetworkSpec parse_spec_text(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(origin + ": " + e.what());
    }
    if (!j.is_object()) fail(origin + ": top level must be a JSON object");

    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "qubits" && key != "phi" && key != "interactions" && key != "family_weights")
            fail("unknown field \"" + key + "\"");
    }

    NetworkSpec spec;
    if (!j.contains("qubits") || !j["qubits"].is_number_integer())
        fail("qubits: required integer field");
    spec.qubits = j["qubits"].get<int>();

    if (!j.contains("phi")) fail("phi: required field (radians or \"pi/2\")");
    if (j["phi"].is_string()) {
        spec.phi_text = j["phi"].get<std::string>();
        spec.phi = parse_phi_token(spec.phi_text);
    } else if (j["phi"].is_number()) {
        spec.phi = j["phi"].get<double>();
        std::ostringstream os;
        os << spec.phi;
        spec.phi_text = os.str();
        if (!(spec.phi > 0.0 && spec.phi < std::numbers::pi))
            fail("phi: value " + spec.phi_text + " outside the open interval (0, pi)");
    } else {
        fail("phi: must be a number or one of \"pi/2\", \"pi/3\", \"pi/4\", \"pi/6\"");
    }

    if (!j.contains("interactions") || !j["interactions"].is_array())
        fail("interactions: required array field");
    std::size_t idx = 0;
    for (const auto& item : j["interactions"]) {
        const std::string where = "interactions[" + std::to_string(idx) + "]";
        if (!item.is_object()) fail(where + ": expected an object");
        for (const auto& [key, value] : item.items()) {
            (void)value;
            if (key != "kind" && key != "controls" && key != "targets" && key != "p")
                fail(where + ": unknown field \"" + key + "\"");
        }
        if (!item.contains("kind") || !item["kind"].is_string())
            fail(where + ".kind: required string field");
        SpecInteraction si;
        si.kind = kind_from_string(item["kind"].get<std::string>(), where);
        if (!item.contains("controls")) fail(where + ".controls: required field");
        si.controls = int_list(item["controls"], where + ".controls");
        if (!item.contains("targets")) fail(where + ".targets: required field");
        si.targets = int_list(item["targets"], where + ".targets");
        if (!item.contains("p") || !item["p"].is_number())
            fail(where + ".p: required numeric field");
        si.p = item["p"].get<double>();
        spec.interactions.push_back(std::move(si));
        ++idx;
    }

    if (j.contains("family_weights")) {
        const auto& fw = j["family_weights"];
        if (!fw.is_object()) fail("family_weights: expected an object");
        FamilyWeights w;
        for (const auto& [key, value] : fw.items()) {
            if (!value.is_number()) fail("family_weights." + key + ": expected a number");
            if (key == "p2")
                w.p2 = value.get<double>();
            else if (key == "p31")
                w.p31 = value.get<double>();
            else if (key == "p32")
                w.p32 = value.get<double>();
            else
                fail("family_weights: unknown field \"" + key + "\"");
        }
        spec.family_weights = w;
    }

    spec.validate();
    return spec;
}

NetworkSpec parse_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str(), path);
}

}  // namespace qnet
