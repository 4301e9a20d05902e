#include "ramsey/colouring.hpp"

#include <stdexcept>

#include "ramsey/rng.hpp"

namespace ramsey {

Colouring::Colouring(const Graph& g, int r, std::vector<int> edge_colours)
    : n_(g.vertex_count()), r_(r), edges_(g.edges()), colours_(std::move(edge_colours)) {
    if (!g.simple()) throw std::invalid_argument("colourings are defined on simple graphs");
    if (r < 1) throw std::invalid_argument("colour count must be positive");
    if (colours_.size() != edges_.size())
        throw std::invalid_argument("one colour per edge required");
    for (int c : colours_)
        if (c < 0 || c >= r) throw std::invalid_argument("colour index out of range");
}

Colouring Colouring::uniform_random(const Graph& g, int r, std::uint64_t seed) {
    auto eng = seeded_engine(seed);
    std::vector<int> cols(g.edges().size());
    for (auto& c : cols) c = static_cast<int>(bounded(eng, static_cast<std::uint64_t>(r)));
    return Colouring(g, r, std::move(cols));
}

Colouring Colouring::constant(const Graph& g, int r, int colour) {
    return Colouring(g, r, std::vector<int>(g.edges().size(), colour));
}

Graph Colouring::colour_class(int colour) const {
    if (colour < 0 || colour >= r_) throw std::invalid_argument("colour index out of range");
    std::vector<Edge> es;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (colours_[i] == colour) es.push_back(edges_[i]);
    return Graph::from_edges(n_, es);
}

} // namespace ramsey
