#include "ramsey/lower_bounds.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>

#include "ramsey/paths.hpp"

namespace ramsey {

Rational Rational::make(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    return {num, den};
}

Rational lower_bound_formula(long long n, long long r) {
    if (n < 1 || r < 1) throw std::invalid_argument("lower_bound_formula: n and r must be positive");
    return Rational::make((r + 3) * r * n - r * (5 * r + 11) + 12, 4);
}

namespace {

// BFS within the alive set; returns parents and the farthest vertex from
// root (smallest id among the farthest).
struct BfsResult {
    std::vector<int> parent;
    int farthest = -1;
};

BfsResult bfs_alive(const Graph& g, const std::vector<char>& alive, int root) {
    BfsResult r;
    r.parent.assign(static_cast<std::size_t>(g.vertex_count()), -2);
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> q;
    q.push(root);
    dist[static_cast<std::size_t>(root)] = 0;
    r.parent[static_cast<std::size_t>(root)] = -1;
    int best = root, best_dist = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbours(v)) {
            if (!alive[static_cast<std::size_t>(u)] || dist[static_cast<std::size_t>(u)] != -1)
                continue;
            dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
            r.parent[static_cast<std::size_t>(u)] = v;
            if (dist[static_cast<std::size_t>(u)] > best_dist ||
                (dist[static_cast<std::size_t>(u)] == best_dist && u < best)) {
                best = u;
                best_dist = dist[static_cast<std::size_t>(u)];
            }
            q.push(u);
        }
    }
    r.farthest = best;
    return r;
}

// Longest path in the alive component of root: a tree diameter, found by two
// BFS sweeps.
std::vector<int> diameter_path(const Graph& g, const std::vector<char>& alive, int root) {
    BfsResult first = bfs_alive(g, alive, root);
    BfsResult second = bfs_alive(g, alive, first.farthest);
    std::vector<int> path;
    for (int v = second.farthest; v != -1; v = second.parent[static_cast<std::size_t>(v)])
        path.push_back(v);
    return path;
}

std::vector<int> component_vertices(const Graph& g, const std::vector<char>& alive, int root) {
    BfsResult b = bfs_alive(g, alive, root);
    std::vector<int> verts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (alive[static_cast<std::size_t>(v)] && b.parent[static_cast<std::size_t>(v)] != -2)
            verts.push_back(v);
    return verts;
}

std::vector<char> mask_from(const Graph& g, const std::vector<int>& verts) {
    std::vector<char> m(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : verts) m[static_cast<std::size_t>(v)] = 1;
    return m;
}

// Cuts the middle edge of a longest path, splitting the component into two
// sides of order at least floor(|path|/2) each. Returns (edge, side1, side2)
// with side1 containing the first half of the path.
struct Split {
    Edge e;
    std::vector<int> side1, side2;
};

Split split_at_middle(const Graph& g, const std::vector<int>& comp, const std::vector<int>& path) {
    const std::size_t h = (path.size() + 1) / 2;
    Split sp;
    sp.e = {path[h - 1], path[h]};
    std::vector<char> alive = mask_from(g, comp);
    alive[static_cast<std::size_t>(sp.e.v)] = 0; // cutting the unique tree edge
    sp.side1 = component_vertices(g, alive, sp.e.u);
    alive[static_cast<std::size_t>(sp.e.v)] = 1;
    std::vector<char> in1 = mask_from(g, sp.side1);
    for (int v : comp)
        if (!in1[static_cast<std::size_t>(v)]) sp.side2.push_back(v);
    return sp;
}

// Searches for at most k edges whose removal leaves no P_n in the component,
// recursing at the middle edge of a longest path. Monotone in k.
std::optional<std::vector<Edge>> kill_search(const Graph& g, const std::vector<int>& comp, int k,
                                             int n) {
    std::vector<char> alive = mask_from(g, comp);
    std::vector<int> path = diameter_path(g, alive, comp.front());
    if (static_cast<int>(path.size()) < n) return std::vector<Edge>{};
    if (k == 0) return std::nullopt;
    Split sp = split_at_middle(g, comp, path);
    for (int k1 = 0; k1 < k; ++k1) {
        const int k2 = k - 1 - k1;
        auto e1 = kill_search(g, sp.side1, k1, n);
        if (!e1) continue;
        auto e2 = kill_search(g, sp.side2, k2, n);
        if (!e2) continue;
        std::vector<Edge> out = std::move(*e1);
        out.insert(out.end(), e2->begin(), e2->end());
        out.push_back(sp.e);
        return out;
    }
    return std::nullopt;
}

// Builds k+2 (or more, trimmed later) disjoint connected subgraphs of order
// at least floor(n/2). Precondition: kill_search(comp, k, n) failed, so the
// component contains P_n.
std::vector<std::vector<int>> build_subgraphs(const Graph& g, const std::vector<int>& comp, int k,
                                              int n) {
    std::vector<char> alive = mask_from(g, comp);
    std::vector<int> path = diameter_path(g, alive, comp.front());
    if (k == 0) {
        const std::size_t h = (path.size() + 1) / 2;
        return {std::vector<int>(path.begin(), path.begin() + static_cast<long>(h)),
                std::vector<int>(path.begin() + static_cast<long>(h), path.end())};
    }
    Split sp = split_at_middle(g, comp, path);

    int min2 = -1, min1 = -1;
    for (int j = 0; j <= k - 1; ++j)
        if (kill_search(g, sp.side2, j, n)) { min2 = j; break; }
    if (min2 == -1)
        for (int j = 0; j <= k - 1; ++j)
            if (kill_search(g, sp.side1, j, n)) { min1 = j; break; }

    std::vector<std::vector<int>> subs;
    if (min2 == -1 && min1 == -1) {
        // Neither side can be disconnected from P_n within the budget.
        subs = build_subgraphs(g, sp.side1, k - 1, n);
        auto extra = build_subgraphs(g, sp.side2, 0, n);
        subs.insert(subs.end(), extra.begin(), extra.end());
    } else {
        const std::vector<int>& killable = (min2 != -1) ? sp.side2 : sp.side1;
        const std::vector<int>& stubborn = (min2 != -1) ? sp.side1 : sp.side2;
        const int kk = (min2 != -1) ? min2 : min1;
        const int rest = k - 1 - kk; // kill on `stubborn` with this budget must fail
        subs = build_subgraphs(g, stubborn, rest, n);
        if (kk == 0) {
            subs.push_back(killable); // whole side: connected, order >= floor(n/2)
        } else {
            auto extra = build_subgraphs(g, killable, kk - 1, n);
            subs.insert(subs.end(), extra.begin(), extra.end());
        }
    }
    return subs;
}

} // namespace

TreeDichotomy tree_dichotomy(const Graph& tree, int k, int n) {
    if (!tree.simple()) throw std::invalid_argument("tree_dichotomy: input must be simple");
    const int order = tree.vertex_count();
    if (order < 1 || tree.edge_count() != order - 1 || !tree.connected())
        throw std::invalid_argument("tree_dichotomy: input is not a tree");
    if (k < 0) throw std::invalid_argument("tree_dichotomy: k must be non-negative");
    if (n < 2) throw std::invalid_argument("tree_dichotomy: target path size must be at least 2");

    std::vector<int> comp(static_cast<std::size_t>(order));
    for (int v = 0; v < order; ++v) comp[static_cast<std::size_t>(v)] = v;

    TreeDichotomy result;
    if (auto edges = kill_search(tree, comp, k, n)) {
        result.kind = DichotomyKind::deletable_edges;
        result.edges = std::move(*edges);
        for (Edge& e : result.edges)
            if (e.u > e.v) std::swap(e.u, e.v);
        std::sort(result.edges.begin(), result.edges.end(),
                  [](const Edge& a, const Edge& b) { return a.u < b.u || (a.u == b.u && a.v < b.v); });
        return result;
    }
    result.kind = DichotomyKind::disjoint_subgraphs;
    result.subgraphs = build_subgraphs(tree, comp, k, n);
    for (auto& s : result.subgraphs) std::sort(s.begin(), s.end());
    std::sort(result.subgraphs.begin(), result.subgraphs.end());
    if (static_cast<int>(result.subgraphs.size()) > k + 2)
        result.subgraphs.resize(static_cast<std::size_t>(k) + 2);
    return result;
}

AdversaryColouring case2_colouring(const Graph& g, int n, int r) {
    if (!g.simple()) throw std::invalid_argument("case2_colouring requires a simple graph");
    if (r < 1) throw std::invalid_argument("case2_colouring: r must be positive");
    if (n < 4) throw std::invalid_argument("case2_colouring: target path size must be at least 4");
    const int order = g.vertex_count();
    if (2 * order > (r + 2) * (n - 3))
        throw std::invalid_argument("case2_colouring: order exceeds (r+2)(n-3)/2");

    const int u_size = std::min(order, n - 1);
    std::vector<int> part(static_cast<std::size_t>(order), 0); // 0 = U, 1..r = blocks
    AdversaryColouring out{Colouring(g, r + 1, std::vector<int>(g.edges().size(), 0)), {}, {}};
    out.set_u.resize(static_cast<std::size_t>(u_size));
    for (int v = 0; v < u_size; ++v) out.set_u[static_cast<std::size_t>(v)] = v;

    const int rest = order - u_size;
    out.blocks.assign(static_cast<std::size_t>(r), {});
    int next = u_size;
    for (int i = 0; i < r; ++i) {
        int size = rest / r + (i < rest % r ? 1 : 0); // larger blocks first
        for (int j = 0; j < size; ++j) {
            part[static_cast<std::size_t>(next)] = i + 1;
            out.blocks[static_cast<std::size_t>(i)].push_back(next);
            ++next;
        }
    }

    std::vector<int> cols(g.edges().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        const int pu = part[static_cast<std::size_t>(e.u)];
        const int pv = part[static_cast<std::size_t>(e.v)];
        if (pu == pv) {
            cols[i] = r; // inside U or inside one block
        } else if (pu == 0 || pv == 0) {
            cols[i] = std::max(pu, pv) - 1;
        } else {
            cols[i] = std::min(pu, pv) - 1;
        }
    }
    out.colouring = Colouring(g, r + 1, std::move(cols));
    return out;
}

ErdosGallaiCheck erdos_gallai_check(const Graph& g, int k, int budget_vertices) {
    if (k < 2) throw std::invalid_argument("erdos_gallai_check: k must be at least 2");
    ErdosGallaiCheck out;
    out.edge_count = g.edge_count();
    out.longest = longest_path_exact(g, budget_vertices).size();
    out.bound = static_cast<double>(g.vertex_count()) * (k - 2) / 2.0;
    if (out.longest >= k) {
        out.has_target_path = true;
        return out;
    }
    out.bound_holds = static_cast<double>(out.edge_count) <= out.bound + 1e-9;
    return out;
}

PathRamseyValue classical_path_ramsey(long long n, int r) {
    if (n < 2) throw std::invalid_argument("classical_path_ramsey: n must be at least 2");
    if (r < 1) throw std::invalid_argument("classical_path_ramsey: r must be positive");
    PathRamseyValue v;
    if (r == 1) {
        v.kind = RamseyValueKind::exact;
        v.lower = v.upper = static_cast<double>(n);
        v.note = "single colour: smallest complete graph containing the path";
        return v;
    }
    if (r == 2) {
        v.kind = RamseyValueKind::exact;
        v.lower = v.upper = static_cast<double>((3 * n - 2) / 2);
        return v;
    }
    if (r == 3) {
        v.kind = RamseyValueKind::exact_large_n;
        v.lower = v.upper = static_cast<double>(n % 2 == 1 ? 2 * n - 1 : 2 * n - 2);
        v.note = "exact for large n only; small n open";
        return v;
    }
    v.kind = RamseyValueKind::interval;
    v.lower = static_cast<double>((r - 1) * (n - 1) + 1);
    v.upper = (r - static_cast<double>(r) / (16.0 * r * r * r + 1)) * static_cast<double>(n);
    v.note = "general bounds";
    return v;
}

} // namespace ramsey
