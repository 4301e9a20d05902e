#pragma once

#include <optional>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

struct PathWitness {
    std::vector<int> vertices;          // consecutive entries adjacent
    std::optional<int> colour;          // set when restricted to a colour class
    int size() const { return static_cast<int>(vertices.size()); }
};

// Output of the greedy extend/retract partition: P is a path, U and W have
// equal size and no edge joins them.
struct PartitionPUW {
    std::vector<int> path;
    std::vector<int> set_u;
    std::vector<int> set_w;
};

// Greedy path process: extend the path endpoint into U while possible,
// otherwise retract the endpoint into W; restart from a fresh U vertex when
// the path empties. Stops at the first moment |U| = |W|. `priority` is a
// permutation of the vertices giving the preference order for the start
// vertex, extensions, and restarts; empty means increasing vertex id.
PartitionPUW partition_puw(const Graph& g, const std::vector<int>& priority = {});

// Maximum-length path by dynamic programming over (vertex subset, endpoint)
// states. Throws budget_error when the graph exceeds budget_vertices.
PathWitness longest_path_exact(const Graph& g, int budget_vertices = 22);

// True when g contains a path on at least k vertices; same DP with an early
// exit, restricted to vertices of positive degree.
bool has_path_at_least(const Graph& g, int k, int budget_vertices = 24);

// Longest intermediate path observed by the greedy extend/retract process.
// Valid lower bound witness for the longest path.
PathWitness longest_path_lower(const Graph& g, const std::vector<int>& priority = {});

// Longest path inside one colour class: exact DP when `exact`, greedy lower
// bound otherwise.
PathWitness longest_mono_path(const Graph& g, const Colouring& col, int colour, bool exact,
                              int budget_vertices = 22);

} // namespace ramsey
