#include "ramsey/paths.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

std::vector<int> make_rank(int n, const std::vector<int>& priority) {
    std::vector<int> rank(static_cast<std::size_t>(n));
    if (priority.empty()) {
        for (int v = 0; v < n; ++v) rank[static_cast<std::size_t>(v)] = v;
        return rank;
    }
    if (static_cast<int>(priority.size()) != n)
        throw std::invalid_argument("priority must be a permutation of the vertices");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int pos = 0; pos < n; ++pos) {
        int v = priority[static_cast<std::size_t>(pos)];
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("priority must be a permutation of the vertices");
        seen[static_cast<std::size_t>(v)] = 1;
        rank[static_cast<std::size_t>(v)] = pos;
    }
    return rank;
}

// Runs the extend/retract process until |U| = |W|; reports the final state
// and, when track_best is set, the longest intermediate path.
struct GreedyRun {
    std::vector<int> path;
    std::vector<int> set_u;
    std::vector<int> set_w;
    std::vector<int> best_path;
};

GreedyRun greedy_process(const Graph& g, const std::vector<int>& priority, bool track_best) {
    if (!g.simple()) throw std::invalid_argument("greedy path process requires a simple graph");
    const int n = g.vertex_count();
    std::vector<int> rank = make_rank(n, priority);
    GreedyRun run;
    if (n == 0) return run;

    enum : char { in_u = 0, on_path = 1, in_w = 2 };
    std::vector<char> state(static_cast<std::size_t>(n), in_u);
    int u_count = n, w_count = 0;
    std::vector<int>& path = run.path;

    auto best_u_vertex = [&]() {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (state[static_cast<std::size_t>(v)] == in_u &&
                (best == -1 || rank[static_cast<std::size_t>(v)] < rank[static_cast<std::size_t>(best)]))
                best = v;
        return best;
    };

    int start = best_u_vertex();
    state[static_cast<std::size_t>(start)] = on_path;
    path.push_back(start);
    --u_count;
    if (track_best) run.best_path = path;

    while (u_count != w_count) {
        if (path.empty()) {
            int v = best_u_vertex();
            state[static_cast<std::size_t>(v)] = on_path;
            path.push_back(v);
            --u_count;
        } else {
            int tail = path.back();
            int next = -1;
            for (int u : g.neighbours(tail))
                if (state[static_cast<std::size_t>(u)] == in_u &&
                    (next == -1 || rank[static_cast<std::size_t>(u)] < rank[static_cast<std::size_t>(next)]))
                    next = u;
            if (next != -1) {
                state[static_cast<std::size_t>(next)] = on_path;
                path.push_back(next);
                --u_count;
            } else {
                state[static_cast<std::size_t>(tail)] = in_w;
                path.pop_back();
                ++w_count;
            }
        }
        if (track_best && path.size() > run.best_path.size()) run.best_path = path;
    }

    for (int v = 0; v < n; ++v) {
        if (state[static_cast<std::size_t>(v)] == in_u) run.set_u.push_back(v);
        else if (state[static_cast<std::size_t>(v)] == in_w) run.set_w.push_back(v);
    }
    return run;
}

struct SupportDp {
    std::vector<int> support;           // original ids of vertices with positive degree
    std::vector<std::uint32_t> adj;     // adjacency masks over support ids
};

SupportDp build_support(const Graph& g, int budget_vertices, const char* who) {
    SupportDp s;
    const int n = g.vertex_count();
    std::vector<int> id(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 0) {
            id[static_cast<std::size_t>(v)] = static_cast<int>(s.support.size());
            s.support.push_back(v);
        }
    const int k = static_cast<int>(s.support.size());
    if (k > budget_vertices || k > 26) // 2^26 DP states is the hard ceiling
        throw budget_error(std::string(who) + ": graph exceeds the exact-search budget");
    s.adj.assign(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
        for (int u : g.neighbours(s.support[static_cast<std::size_t>(i)])) {
            int j = id[static_cast<std::size_t>(u)];
            if (j != i) s.adj[static_cast<std::size_t>(i)] |= (1u << j);
        }
    return s;
}

} // namespace

PartitionPUW partition_puw(const Graph& g, const std::vector<int>& priority) {
    GreedyRun run = greedy_process(g, priority, false);
    return {std::move(run.path), std::move(run.set_u), std::move(run.set_w)};
}

PathWitness longest_path_lower(const Graph& g, const std::vector<int>& priority) {
    GreedyRun run = greedy_process(g, priority, true);
    return {std::move(run.best_path), std::nullopt};
}

PathWitness longest_path_exact(const Graph& g, int budget_vertices) {
    if (!g.simple()) throw std::invalid_argument("longest_path_exact requires a simple graph");
    const int n = g.vertex_count();
    if (n == 0) return {};
    SupportDp s = build_support(g, budget_vertices, "longest_path_exact");
    const int k = static_cast<int>(s.support.size());
    if (k == 0) return {{0}, std::nullopt};

    const std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);
    std::vector<std::uint32_t> endp(static_cast<std::size_t>(1) << k, 0);
    for (int i = 0; i < k; ++i) endp[static_cast<std::size_t>(1) << i] = 1u << i;

    std::uint32_t best_mask = 1;
    int best_size = 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t ends = endp[mask];
        if (!ends) continue;
        int size = std::popcount(mask);
        if (size > best_size) {
            best_size = size;
            best_mask = mask;
        }
        std::uint32_t rest = full & ~mask;
        while (rest) {
            std::uint32_t vbit = rest & (~rest + 1);
            rest ^= vbit;
            int v = std::countr_zero(vbit);
            if (s.adj[static_cast<std::size_t>(v)] & ends)
                endp[mask | vbit] |= vbit;
        }
    }

    // Reconstruct one maximum path, lowest-id choices throughout.
    std::vector<int> path;
    std::uint32_t mask = best_mask;
    std::uint32_t vbit = endp[mask] & (~endp[mask] + 1);
    while (true) {
        int v = std::countr_zero(vbit);
        path.push_back(s.support[static_cast<std::size_t>(v)]);
        mask ^= vbit;
        if (!mask) break;
        std::uint32_t candidates = endp[mask] & s.adj[static_cast<std::size_t>(v)];
        vbit = candidates & (~candidates + 1);
    }
    std::reverse(path.begin(), path.end());
    return {std::move(path), std::nullopt};
}

bool has_path_at_least(const Graph& g, int k, int budget_vertices) {
    if (!g.simple()) throw std::invalid_argument("has_path_at_least requires a simple graph");
    if (k <= 0) return true;
    if (k == 1) return g.vertex_count() >= 1;
    if (k == 2) return g.edge_count() >= 1;
    SupportDp s = build_support(g, budget_vertices, "has_path_at_least");
    const int sup = static_cast<int>(s.support.size());
    if (sup < k) return false;

    const std::uint32_t full = (1u << sup) - 1;
    std::vector<std::uint32_t> endp(static_cast<std::size_t>(1) << sup, 0);
    for (int i = 0; i < sup; ++i) endp[static_cast<std::size_t>(1) << i] = 1u << i;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t ends = endp[mask];
        if (!ends) continue;
        if (std::popcount(mask) >= k) return true;
        std::uint32_t rest = full & ~mask;
        while (rest) {
            std::uint32_t vbit = rest & (~rest + 1);
            rest ^= vbit;
            int v = std::countr_zero(vbit);
            if (s.adj[static_cast<std::size_t>(v)] & ends)
                endp[mask | vbit] |= vbit;
        }
    }
    return false;
}

PathWitness longest_mono_path(const Graph& g, const Colouring& col, int colour, bool exact,
                              int budget_vertices) {
    if (g.vertex_count() != col.vertex_count())
        throw std::invalid_argument("colouring does not match the graph");
    if (colour < 0 || colour >= col.colour_count())
        throw std::invalid_argument("colour index out of range");
    Graph cls = col.colour_class(colour);
    PathWitness w = exact ? longest_path_exact(cls, budget_vertices) : longest_path_lower(cls);
    if (w.size() < 2 && cls.edge_count() > 0) {
        // the greedy run may stop before touching any edge; one edge is
        // always a valid 2-vertex witness
        w.vertices = {cls.edges().front().u, cls.edges().front().v};
    }
    w.colour = colour;
    return w;
}

} // namespace ramsey
