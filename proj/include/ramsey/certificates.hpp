#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

enum class Verdict { holds, fails, undecided };
enum class CertificateKind { letzter, two_holes, bipartite_multi, exact_arrow };
enum class SearchMode { exact, monte_carlo };

struct SetPairWitness {
    std::vector<int> set_s;
    std::vector<int> set_t;
};

struct SetQuadWitness {
    std::vector<int> s1, s2, t1, t2;
};

struct CertificateParams {
    int graph_order = 0;
    int target_n = 0;     // path size the condition certifies
    int colours = 2;
    int set_size = 0;     // s (letzter, bipartite) or the size sum h (two holes)
    SearchMode mode = SearchMode::exact;
};

// Outcome of a sufficient-condition check. verdict == fails always carries an
// independently checkable witness; verdict == holds from an exact mode means
// the enumeration ran to completion.
struct Certificate {
    CertificateKind kind = CertificateKind::letzter;
    Verdict verdict = Verdict::undecided;
    CertificateParams params;
    std::optional<SetPairWitness> pair_witness;
    std::optional<SetQuadWitness> quad_witness;
    std::optional<Colouring> colouring_witness;
    std::uint64_t seed = 0;
    std::uint64_t budget_spent = 0;
};

// Empty-cross-pair condition: G of order cn with c = |V|/n > 2 arrows P_n
// whenever every two disjoint vertex sets of size floor(n(c-2)/4) are joined
// by an edge. Exact mode enumerates all pairs (capped), monte_carlo samples
// `budget` pairs and returns undecided when no empty pair is found.
Certificate check_letzter(const Graph& g, int n, SearchMode mode, std::uint64_t budget,
                          std::uint64_t seed = 0);

// Two-hole condition: no four disjoint sets S1, S2, T1, T2 with
// |S1|=|T2|, |S2|=|T1|, |S1|+|S2| = floor(n(c-2)/2) and both cross pairs
// (S1,T2), (S2,T1) empty.
Certificate check_two_holes(const Graph& g, int n, SearchMode mode, std::uint64_t budget,
                            std::uint64_t seed = 0);

// Balanced bipartite condition for r colours: every S in part 1 and T in
// part 2 of size floor(((c+1)/2^r - 1) n/2) are joined by an edge, where
// c = |V|/n > 2^r - 1.
Certificate check_bipartite_multi(const BipartiteGraph& g, int n, int r, SearchMode mode,
                                  std::uint64_t budget, std::uint64_t seed = 0);

// Exhaustive arrowing decision: holds iff every r-colouring of E(g) contains
// a monochromatic path on n vertices. The colour of the first edge is fixed
// (colour-permutation symmetry) and branches are cut as soon as a colour
// class already contains P_n, which never changes the decision. Requires
// r^(|E|-1) <= budget.
Certificate arrow_exact(const Graph& g, int n, int r, std::uint64_t budget);

struct SizeRamseyResult {
    bool found = false;
    int edges = -1;
    Graph witness;
    std::uint64_t budget_spent = 0;
};

// Minimum edge count of a graph arrowing (P_n)_r, by edge-count-bounded
// search over connected candidate graphs (smallest vertex count first).
SizeRamseyResult size_ramsey_exact(int n, int r, int max_edges, std::uint64_t budget);

} // namespace ramsey
