#include "qnet/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace qnet {

namespace {

void validate_probs(std::size_t count, const std::vector<double>& probs, const char* what) {
    if (count == 0) throw std::invalid_argument(std::string(what) + ": no edges");
    if (probs.empty()) return;
    if (probs.size() != count)
        throw std::invalid_argument(std::string(what) + ": probability list length mismatch");
    double sum = 0.0;
    for (double p : probs) {
        if (!(p > 0.0)) throw std::invalid_argument(std::string(what) + ": probabilities must be positive");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument(std::string(what) + ": probabilities sum to " + std::to_string(sum));
}

void check_label(int q, int n, const char* what) {
    if (q < 1 || q > n) throw std::invalid_argument(std::string(what) + ": qubit label out of range");
}

// reachable sets by BFS over an adjacency list
std::vector<char> reachable(const std::vector<std::vector<int>>& adj, int start) {
    std::vector<char> seen(adj.size(), 0);
    std::queue<int> q;
    seen[start] = 1;
    q.push(start);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
    }
    return seen;
}

bool all_mutually_reachable(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n <= 1) return true;
    std::vector<std::vector<int>> radj(n);
    for (int v = 0; v < n; ++v)
        for (int w : adj[v]) radj[w].push_back(v);
    const auto fwd = reachable(adj, 0);
    const auto bwd = reachable(radj, 0);
    for (int v = 0; v < n; ++v)
        if (!fwd[v] || !bwd[v]) return false;
    return true;
}

}  // namespace

void DirectedGraph::validate() const {
    validate_probs(edges.size(), probs, "two-qubit graph");
    for (const Edge& e : edges) {
        check_label(e.tail, n, "two-qubit graph");
        check_label(e.head, n, "two-qubit graph");
        if (e.tail == e.head) throw std::invalid_argument("two-qubit graph: self-loop");
    }
}

void F1Graph::validate() const {
    validate_probs(hyperedges.size(), probs, "one-control hypergraph");
    for (const F1Hyperedge& e : hyperedges) {
        check_label(e.control, n, "one-control hypergraph");
        check_label(e.targets[0], n, "one-control hypergraph");
        check_label(e.targets[1], n, "one-control hypergraph");
        if (e.targets[0] >= e.targets[1])
            throw std::invalid_argument("one-control hypergraph: targets must be sorted and distinct");
        if (e.control == e.targets[0] || e.control == e.targets[1])
            throw std::invalid_argument("one-control hypergraph: control overlaps targets");
    }
}

void F2Graph::validate() const {
    validate_probs(hyperedges.size(), probs, "two-control hypergraph");
    for (const F2Hyperedge& e : hyperedges) {
        check_label(e.controls[0], n, "two-control hypergraph");
        check_label(e.controls[1], n, "two-control hypergraph");
        check_label(e.target, n, "two-control hypergraph");
        if (e.controls[0] >= e.controls[1])
            throw std::invalid_argument("two-control hypergraph: controls must be sorted and distinct");
        if (e.target == e.controls[0] || e.target == e.controls[1])
            throw std::invalid_argument("two-control hypergraph: target overlaps controls");
    }
}

F1Hyperedge make_f1_edge(int control, int t1, int t2) {
    return F1Hyperedge{control, {std::min(t1, t2), std::max(t1, t2)}};
}

F2Hyperedge make_f2_edge(int c1, int c2, int target) {
    return F2Hyperedge{{std::min(c1, c2), std::max(c1, c2)}, target};
}

std::vector<double> effective_probs(std::size_t count, const std::vector<double>& probs) {
    if (!probs.empty()) return probs;
    return std::vector<double>(count, 1.0 / static_cast<double>(count));
}

int topology_qubits(const InteractionTopology& topo) {
    return std::visit([](const auto& g) { return g.n; }, topo);
}

int pair_index(int i, int j, int n) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n || i == j) throw std::invalid_argument("pair_index: bad pair");
    // pairs (1,2), (1,3), ..., (1,n), (2,3), ...
    const int before = (i - 1) * n - (i - 1) * i / 2;
    return before + (j - i - 1);
}

std::pair<int, int> pair_from_index(int id, int n) {
    for (int i = 1; i < n; ++i) {
        const int block = n - i;
        if (id < block) return {i, i + 1 + id};
        id -= block;
    }
    throw std::invalid_argument("pair_from_index: id out of range");
}

PairVertexGraph derive_pair_vertex_graph(const F2Graph& g) {
    PairVertexGraph pv;
    pv.n = g.n;
    for (const F2Hyperedge& e : g.hyperedges) {
        const int i = e.controls[0], j = e.controls[1], k = e.target;
        FArc arc;
        arc.tail = pair_index(i, j, g.n);
        arc.heads = {pair_index(i, k, g.n), pair_index(j, k, g.n)};
        pv.f_arcs.push_back(arc);
    }
    return pv;
}

bool is_strongly_connected(const DirectedGraph& g) {
    g.validate();
    std::vector<std::vector<int>> adj(g.n);
    for (const Edge& e : g.edges) adj[e.tail - 1].push_back(e.head - 1);
    return all_mutually_reachable(adj);
}

bool f1_is_strongly_connected(const F1Graph& g) {
    g.validate();
    std::vector<std::vector<int>> adj(g.n);
    for (const F1Hyperedge& e : g.hyperedges) {
        adj[e.control - 1].push_back(e.targets[0] - 1);
        adj[e.control - 1].push_back(e.targets[1] - 1);
    }
    return all_mutually_reachable(adj);
}

bool f2_is_base(const F2Graph& g) {
    g.validate();
    const PairVertexGraph pv = derive_pair_vertex_graph(g);
    const int np = g.n * (g.n - 1) / 2;
    std::vector<std::vector<int>> adj(np);
    for (const FArc& arc : pv.f_arcs) {
        adj[arc.tail].push_back(arc.heads[0]);
        adj[arc.tail].push_back(arc.heads[1]);
    }
    for (int v = 0; v < np; ++v) {
        const auto [i, j] = pair_from_index(v, g.n);
        const auto seen = reachable(adj, v);
        for (int k = 1; k <= g.n; ++k) {
            if (k == i || k == j) continue;
            bool hit = false;
            for (int l = 1; l <= g.n && !hit; ++l)
                if (l != k && seen[pair_index(k, l, g.n)]) hit = true;
            if (!hit) return false;
        }
    }
    return true;
}

DirectedGraph maximal_two_qubit(int n) {
    if (n < 2) throw std::invalid_argument("maximal_two_qubit: need n >= 2");
    DirectedGraph g;
    g.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) g.edges.push_back({i, j});
    return g;
}

F1Graph maximal_f1(int n) {
    if (n < 3) throw std::invalid_argument("maximal_f1: need n >= 3");
    F1Graph g;
    g.n = n;
    for (int c = 1; c <= n; ++c)
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                if (a != c && b != c) g.hyperedges.push_back({c, {a, b}});
    return g;
}

F2Graph maximal_f2(int n) {
    if (n < 3) throw std::invalid_argument("maximal_f2: need n >= 3");
    F2Graph g;
    g.n = n;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int t = 1; t <= n; ++t)
                if (t != a && t != b) g.hyperedges.push_back({{a, b}, t});
    return g;
}

F1Graph star_f1(int n) {
    if (n < 3) throw std::invalid_argument("star_f1: need n >= 3");
    F1Graph g;
    g.n = n;
    for (int j = 3; j <= n; ++j) g.hyperedges.push_back(make_f1_edge(1, 2, j));
    for (int j = 3; j <= n; ++j) g.hyperedges.push_back(make_f1_edge(2, 1, j));
    for (int j = 3; j <= n; ++j) g.hyperedges.push_back(make_f1_edge(j, 1, 2));
    return g;
}

F2Graph star_f2(int n) {
    if (n < 3) throw std::invalid_argument("star_f2: need n >= 3");
    F2Graph g;
    g.n = n;
    for (int j = 3; j <= n; ++j) g.hyperedges.push_back(make_f2_edge(1, 2, j));
    for (int j = 3; j <= n; ++j) g.hyperedges.push_back(make_f2_edge(1, j, 2));
    for (int j = 3; j <= n; ++j) g.hyperedges.push_back(make_f2_edge(2, j, 1));
    for (int j = 3; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            g.hyperedges.push_back(make_f2_edge(j, k, 1));
            g.hyperedges.push_back(make_f2_edge(j, k, 2));
        }
    return g;
}

F2Graph sample_f2_base_4() {
    F2Graph g = star_f2(4);
    std::erase(g.hyperedges, make_f2_edge(3, 4, 2));
    return g;
}

std::vector<DerivedGraph> derive_graph_set(const F2Graph& g) {
    g.validate();
    std::vector<DerivedGraph> out;
    for (int i = 1; i <= g.n; ++i) {
        DerivedGraph d;
        d.excluded = i;
        d.n = g.n;
        for (const F2Hyperedge& e : g.hyperedges) {
            if (e.controls[0] == i)
                d.edges.push_back({e.controls[1], e.target});
            else if (e.controls[1] == i)
                d.edges.push_back({e.controls[0], e.target});
        }
        std::sort(d.edges.begin(), d.edges.end());
        d.edges.erase(std::unique(d.edges.begin(), d.edges.end()), d.edges.end());
        out.push_back(std::move(d));
    }
    return out;
}

bool is_ordinary_star(const DerivedGraph& g) {
    if (g.edges.empty()) return false;
    std::vector<int> labels;
    for (int v = 1; v <= g.n; ++v)
        if (v != g.excluded) labels.push_back(v);
    for (int center : labels) {
        bool ok = true;
        for (const Edge& e : g.edges)
            if (e.tail != center && e.head != center) {
                ok = false;
                break;
            }
        if (!ok) continue;
        // both directions between the center and every other label
        for (int v : labels) {
            if (v == center) continue;
            const bool out = std::find(g.edges.begin(), g.edges.end(), Edge{center, v}) != g.edges.end();
            const bool in = std::find(g.edges.begin(), g.edges.end(), Edge{v, center}) != g.edges.end();
            if (!out || !in) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

bool derived_isomorphic(const DerivedGraph& a, const DerivedGraph& b) {
    std::vector<int> la, lb;
    for (int v = 1; v <= a.n; ++v)
        if (v != a.excluded) la.push_back(v);
    for (int v = 1; v <= b.n; ++v)
        if (v != b.excluded) lb.push_back(v);
    if (la.size() != lb.size() || a.edges.size() != b.edges.size()) return false;

    std::vector<std::size_t> perm(la.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::pair<int, int>> be;
    for (const Edge& e : b.edges) be.insert({e.tail, e.head});
    do {
        // map la[t] -> lb[perm[t]]
        std::vector<int> map(a.n + 1, 0);
        for (std::size_t t = 0; t < la.size(); ++t) map[la[t]] = lb[perm[t]];
        bool ok = true;
        for (const Edge& e : a.edges)
            if (!be.count({map[e.tail], map[e.head]})) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace {

template <typename E>
bool subset_of(const std::vector<E>& a, const std::vector<E>& b) {
    std::vector<E> sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
}

}  // namespace

bool is_subgraph(const DirectedGraph& g, const DirectedGraph& h) {
    return g.n == h.n && subset_of(g.edges, h.edges);
}

bool is_subgraph(const F1Graph& g, const F1Graph& h) {
    return g.n == h.n && subset_of(g.hyperedges, h.hyperedges);
}

bool is_subgraph(const F2Graph& g, const F2Graph& h) {
    return g.n == h.n && subset_of(g.hyperedges, h.hyperedges);
}

bool is_two_connected(const IndexGraph& g) {
    const std::size_t nv = g.vertices.size();
    if (nv == 0) return false;
    if (nv == 1) return true;
    std::vector<std::vector<int>> adj(nv);
    auto index_of = [&](std::size_t label) {
        const auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), label);
        return static_cast<int>(it - g.vertices.begin());
    };
    for (const ColoredEdge& e : g.edges) {
        const int a = index_of(e.a), b = index_of(e.b);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    // connectivity
    const auto seen0 = reachable(adj, 0);
    if (std::count(seen0.begin(), seen0.end(), 1) != static_cast<long>(nv))
        return false;

    // articulation vertices by removal (sizes here are small)
    if (nv == 2) return true;
    for (std::size_t cut = 0; cut < nv; ++cut) {
        std::vector<std::vector<int>> sub(nv);
        for (std::size_t v = 0; v < nv; ++v) {
            if (v == cut) continue;
            for (int w : adj[v])
                if (static_cast<std::size_t>(w) != cut) sub[v].push_back(w);
        }
        const int start = cut == 0 ? 1 : 0;
        const auto seen = reachable(sub, start);
        for (std::size_t v = 0; v < nv; ++v)
            if (v != cut && !seen[v]) return false;
    }
    return true;
}

}  // namespace qnet
