#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// Vertices of a maximum-cardinality connected component (lowest-rooted among
// ties), sorted.
std::vector<int> largest_component(const Graph& g);

struct BipartiteComponentBound {
    double eta = 0.0;              // |E| / (|V1| |V2|)
    double bound = 0.0;            // eta (|V1| + |V2|)
    std::vector<int> component;    // component of at least `bound` vertices
};

// Density eta and a component of order at least eta(|V1|+|V2|); such a
// component always exists, so the search never fails.
BipartiteComponentBound bipartite_component_bound(const BipartiteGraph& h);

// Largest component order of each colour class (isolated vertices count as
// singleton components).
std::vector<int> mono_component_spectrum(const Graph& g, const Colouring& col);

// Parallel-class colouring of the complete graph on q^2 vertices for prime
// q: vertices are the points of the q-by-q grid over Z_q, each of the q+1
// line slopes is a colour, and every colour class is a disjoint union of q
// cliques of size q. Largest monochromatic component is exactly q.
Colouring affine_sharp_colouring(int q);

struct PerturbedBound {
    double threshold = 0.0; // (1/(r-1) - eps r^2) n
    int achieved = 0;       // largest monochromatic component
    bool meets = false;
};

// For a given colouring of a graph with at least (1-eps) C(n,2) edges and
// eps <= 1/r^2, compares the largest monochromatic component against
// (1/(r-1) - eps r^2) n.
PerturbedBound perturbed_component_bound(const Graph& g, const Colouring& col, double eps);

// Exhaustive variant over all r-colourings (first edge colour fixed by
// symmetry); reports the colouring-minimal largest component. Tiny graphs
// only; requires r^(|E|-1) <= budget.
PerturbedBound perturbed_component_bound_exhaustive(const Graph& g, int r, double eps,
                                                    std::uint64_t budget);

enum class ColouringStrategy { uniform, greedy_balanced, affine_projection };

Colouring colour_with_strategy(const Graph& g, int r, ColouringStrategy strategy,
                               std::uint64_t seed);

struct ExperimentConfig {
    int n = 0;
    double p = 0.0;
    int r = 2;
    ColouringStrategy strategy = ColouringStrategy::uniform;
    int trials = 0;
    std::uint64_t seed = 0;
    int jobs = 1;
    int exact_budget = 22; // mono-path experiments switch to the greedy bound above this
};

struct TrialRow {
    int trial = 0;
    std::uint64_t seed = 0;
    int colour = 0;
    int size = 0;      // component order or path vertices
    double ratio = 0.0;
};

struct ExperimentSummary {
    double mean = 0, min = 0, q25 = 0, median = 0, q75 = 0, max = 0;
};

struct ExperimentResult {
    std::vector<TrialRow> rows;              // one row per (trial, colour)
    std::vector<double> trial_max_ratio;     // per trial: max over colours / n
    ExperimentSummary summary;               // over trial_max_ratio
};

// Samples G(n,p), colours with the strategy, records the largest
// monochromatic component per colour. Deterministic given the seed and
// independent of the worker count.
ExperimentResult dr_experiment(const ExperimentConfig& config);

// Same harness with the longest monochromatic path as the statistic.
ExperimentResult mono_path_experiment(const ExperimentConfig& config);

} // namespace ramsey
