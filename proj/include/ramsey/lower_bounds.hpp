#pragma once

#include <string>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// Reduced fraction with positive denominator; the lower-bound formula is
// reported exactly.
struct Rational {
    long long num = 0;
    long long den = 1;
    static Rational make(long long num, long long den);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

// ((r+3) r n - r(5r+11) + 12) / 4, the size-Ramsey lower bound for P_n with
// r colours. r = 1 reduces to n - 1, r = 2 to 5n/2 - 15/2.
Rational lower_bound_formula(long long n, long long r);

enum class DichotomyKind { deletable_edges, disjoint_subgraphs };

// Either k edges whose removal leaves no path on n vertices, or k+2
// vertex-disjoint connected subgraphs of order at least floor(n/2) each.
struct TreeDichotomy {
    DichotomyKind kind = DichotomyKind::deletable_edges;
    std::vector<Edge> edges;                    // deletable_edges: at most k of them
    std::vector<std::vector<int>> subgraphs;    // disjoint_subgraphs: exactly k+2 sets
};

// Constructive dichotomy on a tree, recursing at an edge that splits a
// longest path as equally as possible.
TreeDichotomy tree_dichotomy(const Graph& tree, int k, int n);

// Adversarial (r+1)-colouring with no monochromatic P_n, defined whenever
// |V| <= (r+2)(n-3)/2: a block U of n-1 vertices, an equipartition of the
// rest into W_1..W_r, colour i on the edges leaving W_i rightwards or into
// U, and the last colour on all edges inside a block.
struct AdversaryColouring {
    Colouring colouring;
    std::vector<int> set_u;
    std::vector<std::vector<int>> blocks;
};

AdversaryColouring case2_colouring(const Graph& g, int n, int r);

struct ErdosGallaiCheck {
    bool has_target_path = false;  // graph already contains P_k; bound not applicable
    int longest = 0;               // vertices on a longest path
    long long edge_count = 0;
    double bound = 0.0;            // n (k-2) / 2
    bool bound_holds = false;
};

// When the graph has no P_k, checks |E| <= n(k-2)/2 against the exact
// longest path.
ErdosGallaiCheck erdos_gallai_check(const Graph& g, int k, int budget_vertices = 22);

enum class RamseyValueKind { exact, exact_large_n, interval };

// Classical path Ramsey number R(P_n, r): exact for r in {1, 2}; the known
// large-n value for r = 3 (flagged; small n open); otherwise the interval
// [(r-1)(n-1)+1, (r - r/(16r^3+1)) n].
struct PathRamseyValue {
    RamseyValueKind kind = RamseyValueKind::exact;
    double lower = 0.0;
    double upper = 0.0;
    std::string note;
};

PathRamseyValue classical_path_ramsey(long long n, int r);

} // namespace ramsey
