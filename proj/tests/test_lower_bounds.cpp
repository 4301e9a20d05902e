#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ramsey/certificates.hpp"
#include "ramsey/lower_bounds.hpp"
#include "ramsey/paths.hpp"
#include "ramsey/random_graphs.hpp"
#include "ramsey/rng.hpp"

using namespace ramsey;

namespace {

// random tree: attach each vertex to a uniformly random earlier vertex
Graph random_tree(int n, std::uint64_t seed) {
    auto eng = seeded_engine(seed);
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v)
        es.push_back({static_cast<int>(bounded(eng, static_cast<std::uint64_t>(v))), v});
    return Graph::from_edges(n, es);
}

Graph delete_edges(const Graph& g, const std::vector<Edge>& del) {
    std::vector<Edge> keep;
    std::vector<Edge> remaining = del;
    for (const Edge& e : g.edges()) {
        auto it = std::find(remaining.begin(), remaining.end(), e);
        if (it != remaining.end()) remaining.erase(it);
        else keep.push_back(e);
    }
    REQUIRE(remaining.empty()); // every reported edge must exist in the tree
    return Graph::from_edges(g.vertex_count(), keep);
}

void validate_dichotomy(const Graph& tree, int k, int n, const TreeDichotomy& result) {
    if (result.kind == DichotomyKind::deletable_edges) {
        CHECK(static_cast<int>(result.edges.size()) <= k);
        Graph pruned = delete_edges(tree, result.edges);
        CHECK(longest_path_exact(pruned).size() < n);
    } else {
        CHECK(static_cast<int>(result.subgraphs.size()) == k + 2);
        std::set<int> used;
        for (const auto& s : result.subgraphs) {
            CHECK(static_cast<int>(s.size()) >= n / 2);
            for (int v : s) CHECK(used.insert(v).second); // pairwise disjoint
            CHECK(tree.induced(s).connected());
        }
    }
}

} // namespace

TEST_CASE("lower bound formula: exact rationals") {
    for (long long n : {10LL, 100LL, 1000LL})
        CHECK(lower_bound_formula(n, 2) == Rational::make(5 * n - 15, 2));
    CHECK(lower_bound_formula(10, 1) == Rational::make(9, 1));
    CHECK(lower_bound_formula(7, 1).value() == 6.0);
    CHECK(lower_bound_formula(100, 3).value() == 433.5);
    CHECK(lower_bound_formula(100, 3) == Rational::make(867, 2));
    CHECK_THROWS_AS(lower_bound_formula(0, 2), std::invalid_argument);
}

TEST_CASE("tree dichotomy: named instances") {
    // deleting the middle edge of P_4 leaves no P_3
    TreeDichotomy p4 = tree_dichotomy(Graph::path_graph(4), 1, 3);
    CHECK(p4.kind == DichotomyKind::deletable_edges);
    CHECK(p4.edges == std::vector<Edge>{{1, 2}});

    // k = 0 on the path itself: two halves
    TreeDichotomy halves = tree_dichotomy(Graph::path_graph(9), 0, 9);
    CHECK(halves.kind == DichotomyKind::disjoint_subgraphs);
    REQUIRE(halves.subgraphs.size() == 2);
    CHECK(halves.subgraphs[0].size() + halves.subgraphs[1].size() == 9);
    validate_dichotomy(Graph::path_graph(9), 0, 9, halves);

    // a star has no P_4 at all: the empty deletion already works
    TreeDichotomy star = tree_dichotomy(Graph::star(6), 2, 4);
    CHECK(star.kind == DichotomyKind::deletable_edges);
    CHECK(star.edges.empty());

    // star and P_3: deleting leaf edges cannot be avoided
    validate_dichotomy(Graph::star(6), 2, 3, tree_dichotomy(Graph::star(6), 2, 3));

    CHECK_THROWS_AS(tree_dichotomy(Graph::cycle(5), 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(tree_dichotomy(Graph::from_edges(4, {{0, 1}, {2, 3}}), 1, 3),
                    std::invalid_argument);
}

TEST_CASE("tree dichotomy: fuzz with invariant re-validation") {
    for (int rep = 0; rep < 120; ++rep) {
        const int order = 5 + rep % 15;
        Graph tree = random_tree(order, derive_seed(61, static_cast<std::uint64_t>(rep)));
        for (int k = 0; k <= 3; ++k)
            for (int n : {3, 5, order / 2 + 2}) {
                TreeDichotomy result = tree_dichotomy(tree, k, n);
                validate_dichotomy(tree, k, n, result);
            }
    }
}

TEST_CASE("tree dichotomy: brute-force cross-validation on small trees") {
    // when no deletion of <= k edges can remove P_n, the subgraph branch must fire
    for (int rep = 0; rep < 40; ++rep) {
        const int order = 6 + rep % 7;
        Graph tree = random_tree(order, derive_seed(67, static_cast<std::uint64_t>(rep)));
        const auto& edges = tree.edges();
        for (int k = 0; k <= 2; ++k) {
            const int n = 4;
            bool brute_killable = false;
            // all subsets of size <= k
            const int m = static_cast<int>(edges.size());
            for (int mask = 0; mask < (1 << m) && !brute_killable; ++mask) {
                if (__builtin_popcount(static_cast<unsigned>(mask)) > k) continue;
                std::vector<Edge> del;
                for (int i = 0; i < m; ++i)
                    if (mask & (1 << i)) del.push_back(edges[static_cast<std::size_t>(i)]);
                Graph pruned = delete_edges(tree, del);
                if (longest_path_exact(pruned).size() < n) brute_killable = true;
            }
            TreeDichotomy result = tree_dichotomy(tree, k, n);
            validate_dichotomy(tree, k, n, result);
            if (!brute_killable) CHECK(result.kind == DichotomyKind::disjoint_subgraphs);
            if (longest_path_exact(tree).size() < n) {
                CHECK(result.kind == DichotomyKind::deletable_edges);
                CHECK(result.edges.empty());
            }
        }
    }
}

TEST_CASE("case-2 adversarial colouring") {
    // trivial instance: fewer vertices than the path
    AdversaryColouring tiny = case2_colouring(Graph::complete(3), 5, 1);
    CHECK(tiny.colouring.colour_count() == 2);
    for (int c = 0; c < 2; ++c)
        CHECK(longest_mono_path(Graph::complete(3), tiny.colouring, c, true).size() < 5);

    // K_6 with r = 2, n = 6: exactly the (r+2)(n-3)/2 boundary
    Graph k6 = Graph::complete(6);
    AdversaryColouring adv = case2_colouring(k6, 6, 2);
    CHECK(adv.colouring.colour_count() == 3);
    CHECK(adv.set_u == std::vector<int>{0, 1, 2, 3, 4});
    REQUIRE(adv.blocks.size() == 2);
    CHECK(adv.blocks[0] == std::vector<int>{5});
    CHECK(adv.blocks[1].empty());
    for (int c = 0; c < 3; ++c)
        CHECK(longest_mono_path(k6, adv.colouring, c, true).size() < 6);

    // each colour-i class is bipartite from W_i: mono path <= 2|W_i| + 1
    Graph k8 = Graph::complete(8);
    AdversaryColouring adv8 = case2_colouring(k8, 7, 2);
    for (std::size_t i = 0; i < adv8.blocks.size(); ++i) {
        const int wi = static_cast<int>(adv8.blocks[i].size());
        CHECK(longest_mono_path(k8, adv8.colouring, static_cast<int>(i), true).size() <=
              2 * wi + 1);
    }
    // equipartition: sizes differ by at most one, larger first
    CHECK(adv8.blocks[0].size() >= adv8.blocks[1].size());
    CHECK(adv8.blocks[0].size() - adv8.blocks[1].size() <= 1);

    CHECK_THROWS_AS(case2_colouring(Graph::complete(10), 6, 2), std::invalid_argument);
}

TEST_CASE("case-2 colouring over admissible random graphs") {
    for (int rep = 0; rep < 25; ++rep) {
        const int r = 2 + rep % 2;
        const int n = 7;
        const int max_order = (r + 2) * (n - 3) / 2;
        Graph g = gen_gnp({RandomModel::gnp, max_order, 0.5 + 0.02 * (rep % 10), 0,
                           derive_seed(71, static_cast<std::uint64_t>(rep))});
        AdversaryColouring adv = case2_colouring(g, n, r);
        for (int c = 0; c <= r; ++c)
            CHECK(longest_mono_path(g, adv.colouring, c, true).size() < n);
    }
}

TEST_CASE("Erdos-Gallai bound checks") {
    // perfect matching: k = 3 tight
    Graph matching = Graph::from_edges(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    ErdosGallaiCheck m = erdos_gallai_check(matching, 3);
    CHECK_FALSE(m.has_target_path);
    CHECK(m.bound_holds);
    CHECK(m.edge_count == 4);
    CHECK(m.bound == doctest::Approx(4.0)); // n(k-2)/2 = 8/2

    // disjoint triangles: k = 4 tight
    Graph triangles = Graph::disjoint_union(Graph::complete(3), Graph::complete(3));
    ErdosGallaiCheck t = erdos_gallai_check(triangles, 4);
    CHECK_FALSE(t.has_target_path);
    CHECK(t.bound_holds);
    CHECK(static_cast<double>(t.edge_count) == t.bound);

    // random instances: the bound holds whenever no P_k exists
    for (int rep = 0; rep < 80; ++rep) {
        Graph g = gen_gnp({RandomModel::gnp, 12, 0.3, 0, derive_seed(73, static_cast<std::uint64_t>(rep))});
        const int longest = longest_path_exact(g).size();
        for (int k = longest + 1; k <= 12; ++k) {
            ErdosGallaiCheck c = erdos_gallai_check(g, k);
            CHECK_FALSE(c.has_target_path);
            CHECK(c.bound_holds);
        }
        ErdosGallaiCheck have = erdos_gallai_check(g, longest);
        CHECK(have.has_target_path);
    }
}

TEST_CASE("classical path Ramsey values") {
    PathRamseyValue r2 = classical_path_ramsey(4, 2);
    CHECK(r2.kind == RamseyValueKind::exact);
    CHECK(r2.lower == 5.0);

    CHECK(classical_path_ramsey(10, 2).lower == 14.0); // floor(28/2)

    PathRamseyValue r3 = classical_path_ramsey(7, 3);
    CHECK(r3.kind == RamseyValueKind::exact_large_n);
    CHECK(r3.lower == 13.0);
    CHECK(classical_path_ramsey(8, 3).lower == 14.0);

    PathRamseyValue r4 = classical_path_ramsey(5, 4);
    CHECK(r4.kind == RamseyValueKind::interval);
    CHECK(r4.lower == 13.0);
    CHECK(r4.upper == doctest::Approx((4.0 - 4.0 / 1025.0) * 5));

    CHECK(classical_path_ramsey(6, 1).lower == 6.0);
    CHECK_THROWS_AS(classical_path_ramsey(1, 2), std::invalid_argument);
}

TEST_CASE("classical r=2 values certified by exhaustive arrowing") {
    // R(P_3, 2) = 3
    CHECK(arrow_exact(Graph::complete(3), 3, 2, 1 << 20).verdict == Verdict::holds);
    CHECK(arrow_exact(Graph::complete(2), 3, 2, 1 << 20).verdict == Verdict::fails);
    // R(P_4, 2) = 5
    CHECK(arrow_exact(Graph::complete(5), 4, 2, 1 << 20).verdict == Verdict::holds);
    CHECK(arrow_exact(Graph::complete(4), 4, 2, 1 << 20).verdict == Verdict::fails);
}
