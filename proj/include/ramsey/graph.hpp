#pragma once

#include <cstdint>
#include <vector>

namespace ramsey {

struct Edge {
    int u = 0;
    int v = 0;
    bool operator==(const Edge&) const = default;
};

// Undirected graph or multigraph on dense vertex ids 0..n-1. Immutable after
// construction; loops and parallel edges are kept explicitly and reflected in
// the simple() flag. A loop at v stores v twice in adj(v), so degree(v) counts
// loops twice and the handshake identity holds verbatim.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {}

    static Graph from_edges(int n, const std::vector<Edge>& edges);
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path_graph(int n);
    static Graph star(int leaves);                // leaves 0..k-1, centre k
    static Graph complete_bipartite(int a, int b);
    static Graph disjoint_union(const Graph& a, const Graph& b);

    int vertex_count() const { return n_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    bool simple() const { return simple_; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    const std::vector<int>& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(int u, int v) const;
    // Canonical edge list: u <= v, sorted lexicographically, multiplicity kept.
    const std::vector<Edge>& edges() const { return edges_; }

    // Subgraph induced on `vertices` (ids renumbered to 0..k-1 in list order).
    Graph induced(const std::vector<int>& vertices) const;
    bool connected() const;

private:
    int n_ = 0;
    bool simple_ = true;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
};

// Bipartite graph with parts {0..n1-1} and {n1..n1+n2-1}.
struct BipartiteGraph {
    int n1 = 0;
    int n2 = 0;
    Graph g;

    static BipartiteGraph from_edges(int n1, int n2, const std::vector<Edge>& edges);
    static BipartiteGraph complete(int n1, int n2);
    int order() const { return n1 + n2; }
};

// Number of edges with one endpoint in S and the other in T. S and T must be
// disjoint vertex sets; multi-edges count with multiplicity.
long long edges_between(const Graph& g, const std::vector<int>& s, const std::vector<int>& t);

// Number of edges with both endpoints in S (loops count once).
long long edges_within(const Graph& g, const std::vector<int>& s);

} // namespace ramsey
