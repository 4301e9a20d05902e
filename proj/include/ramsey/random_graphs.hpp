#pragma once

#include <cstdint>

#include "ramsey/graph.hpp"

namespace ramsey {

enum class RandomModel { gnp, gnnp, pairing };

// Parameters of a random graph draw. Generators are pure functions of the
// spec: identical spec (including seed) yields an identical graph.
struct RandomSpec {
    RandomModel model = RandomModel::gnp;
    int n = 0;          // vertex count (per part for gnnp)
    double p = 0.0;     // edge probability (gnp, gnnp)
    int d = 0;          // degree (pairing)
    std::uint64_t seed = 0;
};

// Binomial random graph: every unordered pair is an edge independently with
// probability p.
Graph gen_gnp(const RandomSpec& spec);

// Binomial random bipartite graph with two parts of size n.
BipartiteGraph gen_gnnp(const RandomSpec& spec);

// Pairing model: d*n points in n buckets of d, a uniformly random perfect
// matching on the points, projected to a multigraph (loops and parallel
// edges kept). Requires d*n even.
Graph gen_pairing(const RandomSpec& spec);

// Repeated pairing draws until the projection is simple; an exact uniform
// sample from the d-regular simple graphs. Throws budget_error when
// max_attempts draws were all non-simple.
Graph gen_regular_simple(const RandomSpec& spec, int max_attempts = 1000);

} // namespace ramsey
