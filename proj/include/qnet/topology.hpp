#pragma once

// Interaction topologies: ordinary directed graphs for two-qubit couplings
// and the two hypergraph families for three-qubit couplings (one control with
// two targets, and two controls with one target). Qubit labels are 1-based.

#include <array>
#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

namespace qnet {

struct Edge {
    int tail = 0, head = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct DirectedGraph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<double> probs;  // empty = uniform
    void validate() const;
};

// one control, unordered pair of targets
struct F1Hyperedge {
    int control = 0;
    std::array<int, 2> targets{};  // sorted ascending
    friend bool operator==(const F1Hyperedge&, const F1Hyperedge&) = default;
    friend auto operator<=>(const F1Hyperedge&, const F1Hyperedge&) = default;
};

struct F1Graph {
    int n = 0;
    std::vector<F1Hyperedge> hyperedges;
    std::vector<double> probs;
    void validate() const;
};

// unordered pair of controls, one target: (i,j;k) = (j,i;k)
struct F2Hyperedge {
    std::array<int, 2> controls{};  // sorted ascending
    int target = 0;
    friend bool operator==(const F2Hyperedge&, const F2Hyperedge&) = default;
    friend auto operator<=>(const F2Hyperedge&, const F2Hyperedge&) = default;
};

struct F2Graph {
    int n = 0;
    std::vector<F2Hyperedge> hyperedges;
    std::vector<double> probs;
    void validate() const;
};

F1Hyperedge make_f1_edge(int control, int t1, int t2);
F2Hyperedge make_f2_edge(int c1, int c2, int target);

// uniform weights when probs is empty
std::vector<double> effective_probs(std::size_t count, const std::vector<double>& probs);

using InteractionTopology = std::variant<DirectedGraph, F1Graph, F2Graph>;

int topology_qubits(const InteractionTopology& topo);

// ---- pair-vertex view of an F2 hypergraph ---------------------------------

// unordered pairs {i<j} of {1..n}, indexed lexicographically
int pair_index(int i, int j, int n);
std::pair<int, int> pair_from_index(int id, int n);

struct FArc {
    int tail = 0;                // pair-vertex id of the control pair {i,j}
    std::array<int, 2> heads{};  // pair-vertex ids of {i,k} and {j,k}
};

struct PairVertexGraph {
    int n = 0;
    std::vector<FArc> f_arcs;
};

PairVertexGraph derive_pair_vertex_graph(const F2Graph& g);

// ---- connectivity predicates ----------------------------------------------

bool is_strongly_connected(const DirectedGraph& g);

// hypergraph path steps: v -> w allowed when some hyperedge has v as its
// control and w among its targets
bool f1_is_strongly_connected(const F1Graph& g);

// Base criterion for a two-control hypergraph: in the pair-vertex graph,
// every vertex ij must reach, for each k outside {i,j}, at least one vertex
// containing k by a directed path.
bool f2_is_base(const F2Graph& g);

// ---- named constructions ---------------------------------------------------

DirectedGraph maximal_two_qubit(int n);
F1Graph maximal_f1(int n);
F2Graph maximal_f2(int n);

// star hypergraph on one control: (1;{2,j}), (2;{1,j}), (j;{1,2}) for j >= 3
F1Graph star_f1(int n);

// two-control analogue: (1,2;j), (1,j;2), (2,j;1) for j >= 3 plus
// (j,k;1), (j,k;2) for 3 <= j < k; its derived graph set contains exactly
// two ordinary star graphs and the remaining graphs are mutually isomorphic
F2Graph star_f2(int n);

// a small non-star, non-maximal base two-control hypergraph on 4 qubits
// (star_f2(4) without the (3,4;2) hyperedge); handy as a worked example
F2Graph sample_f2_base_4();

// graphs G_i on vertex set {1..n}\{i} with edge (j,k) iff (i,j;k) in E
struct DerivedGraph {
    int excluded = 0;  // the label i the graph belongs to
    int n = 0;         // labels run over {1..n}\{excluded}
    std::vector<Edge> edges;
};

std::vector<DerivedGraph> derive_graph_set(const F2Graph& g);

// every edge incident to a single center, both directions present, and the
// center connected to every other vertex of the graph
bool is_ordinary_star(const DerivedGraph& g);

// brute-force isomorphism over the (small) label sets
bool derived_isomorphic(const DerivedGraph& a, const DerivedGraph& b);

// ---- subgraph partial order -------------------------------------------------

bool is_subgraph(const DirectedGraph& g, const DirectedGraph& h);
bool is_subgraph(const F1Graph& g, const F1Graph& h);
bool is_subgraph(const F2Graph& g, const F2Graph& h);

// ---- index graph over basis labels ------------------------------------------

struct ColoredEdge {
    std::size_t a = 0, b = 0;  // basis labels, a < b
    int color = 0;             // branch index that couples them
};

struct IndexGraph {
    std::vector<std::size_t> vertices;  // labels with at least one incident edge
    std::vector<ColoredEdge> edges;
};

// connected and free of articulation vertices
bool is_two_connected(const IndexGraph& g);

}  // namespace qnet
