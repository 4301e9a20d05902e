#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ramsey/errors.hpp"
#include "ramsey/paths.hpp"
#include "ramsey/random_graphs.hpp"
#include "ramsey/rng.hpp"

using namespace ramsey;

namespace {

bool valid_path(const Graph& g, const std::vector<int>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.adjacent(path[i], path[i + 1])) return false;
    std::vector<int> sorted = path;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

void check_partition(const Graph& g, const PartitionPUW& p) {
    const int n = g.vertex_count();
    REQUIRE(p.set_u.size() == p.set_w.size());
    REQUIRE(static_cast<int>(p.path.size() + p.set_u.size() + p.set_w.size()) == n);
    CHECK(static_cast<int>(p.set_w.size()) * 2 == n - static_cast<int>(p.path.size()));
    CHECK(valid_path(g, p.path));
    CHECK(edges_between(g, p.set_u, p.set_w) == 0);
}

} // namespace

TEST_CASE("partition_puw on the named small cases") {
    // two isolated vertices: empty path, |U| = |W| = 1
    Graph e2(2);
    PartitionPUW p = partition_puw(e2);
    CHECK(p.path.empty());
    CHECK(p.set_u.size() == 1);
    CHECK(p.set_w.size() == 1);
    check_partition(e2, p);

    // single edge: the whole graph is the path
    Graph k2 = Graph::complete(2);
    p = partition_puw(k2);
    CHECK(p.path == std::vector<int>{0, 1});
    CHECK(p.set_u.empty());
    CHECK(p.set_w.empty());

    // C_5 with increasing-id tie breaking walks straight around the cycle
    Graph c5 = Graph::cycle(5);
    p = partition_puw(c5);
    CHECK(p.path.size() >= 3);
    check_partition(c5, p);
    CHECK(p.path == std::vector<int>{0, 1, 2, 3, 4});

    // single vertex
    Graph k1(1);
    p = partition_puw(k1);
    CHECK(p.path == std::vector<int>{0});
    CHECK(p.set_u.empty());
    CHECK(p.set_w.empty());
}

TEST_CASE("partition_puw rejects multigraphs and bad priorities") {
    Graph multi = Graph::from_edges(2, {{0, 1}, {0, 1}});
    CHECK_THROWS_AS(partition_puw(multi), std::invalid_argument);
    Graph k3 = Graph::complete(3);
    CHECK_THROWS_AS(partition_puw(k3, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(partition_puw(k3, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("partition_puw invariants hold under fuzzing") {
    auto eng = seeded_engine(1);
    for (int rep = 0; rep < 600; ++rep) {
        const int n = 5 + static_cast<int>(bounded(eng, 60));
        const double p = canonical(eng) * 0.5;
        Graph g = gen_gnp({RandomModel::gnp, n, p, 0, derive_seed(17, static_cast<std::uint64_t>(rep))});
        std::vector<int> priority = sample_distinct(n, n, eng);
        check_partition(g, partition_puw(g, priority));
    }
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = gen_regular_simple({RandomModel::pairing, 40, 0, 3, derive_seed(18, static_cast<std::uint64_t>(rep))});
        check_partition(g, partition_puw(g));
    }
}

TEST_CASE("longest_path_exact on the named graphs") {
    CHECK(longest_path_exact(Graph::path_graph(5)).size() == 5);
    CHECK(longest_path_exact(Graph::complete(4)).size() == 4);

    // Petersen graph: outer C_5, inner 5-cycle with step 2, spokes
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back({i, (i + 1) % 5});
        es.push_back({5 + i, 5 + (i + 2) % 5});
        es.push_back({i, 5 + i});
    }
    Graph petersen = Graph::from_edges(10, es);
    PathWitness w = longest_path_exact(petersen);
    CHECK(w.size() == 10);
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
        CHECK(petersen.adjacent(w.vertices[i], w.vertices[i + 1]));

    CHECK_THROWS_AS(longest_path_exact(Graph::complete(24)), budget_error);
}

TEST_CASE("has_path_at_least matches the exact length") {
    auto eng = seeded_engine(2);
    for (int rep = 0; rep < 120; ++rep) {
        const int n = 4 + static_cast<int>(bounded(eng, 9));
        Graph g = gen_gnp({RandomModel::gnp, n, 0.15 + canonical(eng) * 0.5, 0,
                           derive_seed(19, static_cast<std::uint64_t>(rep))});
        const int exact = longest_path_exact(g).size();
        CHECK(has_path_at_least(g, exact));
        CHECK_FALSE(has_path_at_least(g, exact + 1));
    }
}

TEST_CASE("longest_path_lower: hand-traced star and complete graph") {
    // star with leaves 0..4 and centre 5: the greedy run reaches a 3-vertex path
    Graph star = Graph::star(5);
    PathWitness w = longest_path_lower(star);
    CHECK(w.size() == 3);
    CHECK(w.vertices == std::vector<int>{0, 5, 1});

    CHECK(longest_path_lower(Graph::complete(7)).size() == 7);
}

TEST_CASE("longest_path_lower is a valid lower bound for the exact length") {
    auto eng = seeded_engine(3);
    for (int rep = 0; rep < 150; ++rep) {
        const int n = 3 + static_cast<int>(bounded(eng, 12));
        Graph g = gen_gnp({RandomModel::gnp, n, canonical(eng), 0, derive_seed(23, static_cast<std::uint64_t>(rep))});
        PathWitness lower = longest_path_lower(g);
        CHECK(valid_path(g, lower.vertices));
        CHECK(lower.size() <= longest_path_exact(g).size());
        // the final partition path size is dominated by the best path seen
        PartitionPUW part = partition_puw(g);
        CHECK(lower.size() >= static_cast<int>(part.path.size()));
    }
}

TEST_CASE("longest_mono_path across colour classes") {
    Graph k3 = Graph::complete(3);
    Colouring all0 = Colouring::constant(k3, 2, 0);
    CHECK(longest_mono_path(k3, all0, 0, true).size() == 3);
    CHECK(longest_mono_path(k3, all0, 1, true).size() == 1); // empty class

    // colours (0,0,1): the two colour-0 edges share a vertex
    Colouring two(k3, 2, {0, 0, 1});
    PathWitness w = longest_mono_path(k3, two, 0, true);
    CHECK(w.size() == 3);
    CHECK(w.colour == 0);
    CHECK(longest_mono_path(k3, two, 1, true).size() == 2);

    CHECK_THROWS_AS(longest_mono_path(k3, two, 2, true), std::invalid_argument);

    // non-empty colour class always gives a path on >= 2 vertices
    auto eng = seeded_engine(4);
    for (int rep = 0; rep < 60; ++rep) {
        Graph g = gen_gnp({RandomModel::gnp, 12, 0.4, 0, derive_seed(29, static_cast<std::uint64_t>(rep))});
        if (g.edge_count() == 0) continue;
        Colouring col = Colouring::uniform_random(g, 3, derive_seed(31, static_cast<std::uint64_t>(rep)));
        for (int c = 0; c < 3; ++c) {
            if (col.colour_class(c).edge_count() == 0) continue;
            CHECK(longest_mono_path(g, col, c, rep % 2 == 0).size() >= 2);
        }
    }
}
