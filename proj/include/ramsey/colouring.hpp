#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Assignment of one colour in [0, r) to every edge of a simple graph. Keeps
// its own copy of the canonical edge list so it stays valid without the
// originating Graph.
class Colouring {
public:
    Colouring(const Graph& g, int r, std::vector<int> edge_colours);

    static Colouring uniform_random(const Graph& g, int r, std::uint64_t seed);
    static Colouring constant(const Graph& g, int r, int colour);

    int colour_count() const { return r_; }
    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& colours() const { return colours_; }
    int colour_of(std::size_t edge_index) const { return colours_[edge_index]; }

    // Spanning subgraph formed by the edges of one colour.
    Graph colour_class(int colour) const;

    // New colouring in which the edges of `colour` currently satisfying
    // `move_to_new(edge_index)` get colour r (one extra colour).
    template <typename Pred>
    Colouring split_colour(int colour, Pred move_to_new) const {
        std::vector<int> next = colours_;
        for (std::size_t i = 0; i < next.size(); ++i)
            if (next[i] == colour && move_to_new(i)) next[i] = r_;
        Colouring c = *this;
        c.r_ = r_ + 1;
        c.colours_ = std::move(next);
        return c;
    }

private:
    int n_ = 0;
    int r_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> colours_;
};

} // namespace ramsey
