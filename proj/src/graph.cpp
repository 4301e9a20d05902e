#include "ramsey/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ramsey {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g(n);
    g.edges_.reserve(edges.size());
    for (Edge e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u > e.v) std::swap(e.u, e.v);
        g.edges_.push_back(e);
    }
    std::sort(g.edges_.begin(), g.edges_.end(),
              [](const Edge& a, const Edge& b) { return a.u < b.u || (a.u == b.u && a.v < b.v); });
    for (std::size_t i = 0; i < g.edges_.size(); ++i) {
        const Edge& e = g.edges_[i];
        if (e.u == e.v) {
            g.simple_ = false;
            g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        } else {
            if (i > 0 && g.edges_[i - 1] == e) g.simple_ = false;
            g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
}

Graph Graph::complete(int n) {
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return from_edges(n, es);
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u) es.push_back({u, (u + 1) % n});
    return from_edges(n, es);
}

Graph Graph::path_graph(int n) {
    std::vector<Edge> es;
    for (int u = 0; u + 1 < n; ++u) es.push_back({u, u + 1});
    return from_edges(n, es);
}

Graph Graph::star(int leaves) {
    std::vector<Edge> es;
    for (int u = 0; u < leaves; ++u) es.push_back({u, leaves});
    return from_edges(leaves + 1, es);
}

Graph Graph::complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.push_back({u, a + v});
    return from_edges(a + b, es);
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    for (const Edge& e : b.edges()) es.push_back({e.u + a.vertex_count(), e.v + a.vertex_count()});
    return from_edges(a.vertex_count() + b.vertex_count(), es);
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    std::vector<int> id(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= n_) throw std::invalid_argument("induced: vertex out of range");
        if (id[static_cast<std::size_t>(v)] != -1) throw std::invalid_argument("induced: duplicate vertex");
        id[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (const Edge& e : edges_) {
        int iu = id[static_cast<std::size_t>(e.u)];
        int iv = id[static_cast<std::size_t>(e.v)];
        if (iu != -1 && iv != -1) es.push_back({iu, iv});
    }
    return from_edges(static_cast<int>(vertices.size()), es);
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj_[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n_;
}

namespace {

std::vector<char> membership(const Graph& g, const std::vector<int>& s, const char* name) {
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument(std::string(name) + ": vertex out of range");
        in[static_cast<std::size_t>(v)] = 1;
    }
    return in;
}

} // namespace

long long edges_between(const Graph& g, const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<char> in_s = membership(g, s, "edges_between");
    std::vector<char> in_t = membership(g, t, "edges_between");
    for (int v : t)
        if (in_s[static_cast<std::size_t>(v)])
            throw std::invalid_argument("edges_between: sets overlap");
    long long count = 0;
    for (int v : s) {
        if (!in_s[static_cast<std::size_t>(v)]) continue; // duplicate entry already counted
        in_s[static_cast<std::size_t>(v)] = 0;
        for (int u : g.neighbours(v))
            if (in_t[static_cast<std::size_t>(u)]) ++count;
    }
    return count;
}

long long edges_within(const Graph& g, const std::vector<int>& s) {
    std::vector<char> in_s = membership(g, s, "edges_within");
    long long twice = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!in_s[static_cast<std::size_t>(v)]) continue;
        for (int u : g.neighbours(v))
            if (in_s[static_cast<std::size_t>(u)]) ++twice;
    }
    return twice / 2;
}

BipartiteGraph BipartiteGraph::from_edges(int n1, int n2, const std::vector<Edge>& edges) {
    if (n1 < 0 || n2 < 0) throw std::invalid_argument("part sizes must be non-negative");
    for (const Edge& e : edges) {
        int u = std::min(e.u, e.v), v = std::max(e.u, e.v);
        if (u < 0 || u >= n1 || v < n1 || v >= n1 + n2)
            throw std::invalid_argument("edge does not join the two parts");
    }
    BipartiteGraph b;
    b.n1 = n1;
    b.n2 = n2;
    b.g = Graph::from_edges(n1 + n2, edges);
    return b;
}

BipartiteGraph BipartiteGraph::complete(int n1, int n2) {
    std::vector<Edge> es;
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) es.push_back({u, n1 + v});
    return from_edges(n1, n2, es);
}

} // namespace ramsey
