#include "ramsey/random_graphs.hpp"

#include <cmath>
#include <stdexcept>

#include "ramsey/errors.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
}

// Appends the pairs selected by geometric gap sampling over linear indices
// 0..total-1; index_to_edge maps a linear index to an edge.
template <typename IndexToEdge>
void skip_sample(long long total, double p, std::mt19937_64& eng, std::vector<Edge>& out,
                 IndexToEdge index_to_edge) {
    const double logq = std::log1p(-p);
    long long pos = -1;
    for (;;) {
        double u = 1.0 - canonical(eng); // (0, 1]
        double gap = std::floor(std::log(u) / logq);
        if (gap > static_cast<double>(total)) break;
        pos += 1 + static_cast<long long>(gap);
        if (pos >= total) break;
        out.push_back(index_to_edge(pos));
    }
}

} // namespace

Graph gen_gnp(const RandomSpec& spec) {
    if (spec.model != RandomModel::gnp) throw std::invalid_argument("spec.model must be gnp");
    if (spec.n < 0) throw std::invalid_argument("n must be non-negative");
    check_probability(spec.p);
    const int n = spec.n;
    if (spec.p == 0.0) return Graph(n);
    if (spec.p == 1.0) return Graph::complete(n);

    auto eng = seeded_engine(spec.seed);
    std::vector<Edge> es;
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    if (spec.p < 0.25) {
        // Walk rows incrementally: row u holds pairs (u, u+1..n-1).
        int row = 0;
        long long row_start = 0;
        auto index_to_edge = [&](long long pos) {
            while (pos >= row_start + (n - 1 - row)) {
                row_start += n - 1 - row;
                ++row;
            }
            return Edge{row, row + 1 + static_cast<int>(pos - row_start)};
        };
        skip_sample(total, spec.p, eng, es, index_to_edge);
    } else {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (canonical(eng) < spec.p) es.push_back({u, v});
    }
    return Graph::from_edges(n, es);
}

BipartiteGraph gen_gnnp(const RandomSpec& spec) {
    if (spec.model != RandomModel::gnnp) throw std::invalid_argument("spec.model must be gnnp");
    if (spec.n < 0) throw std::invalid_argument("n must be non-negative");
    check_probability(spec.p);
    const int n = spec.n;
    if (spec.p == 0.0) return BipartiteGraph::from_edges(n, n, {});
    if (spec.p == 1.0) return BipartiteGraph::complete(n, n);

    auto eng = seeded_engine(spec.seed);
    std::vector<Edge> es;
    const long long total = static_cast<long long>(n) * n;
    auto index_to_edge = [&](long long pos) {
        return Edge{static_cast<int>(pos / n), n + static_cast<int>(pos % n)};
    };
    if (spec.p < 0.25) {
        skip_sample(total, spec.p, eng, es, index_to_edge);
    } else {
        for (long long pos = 0; pos < total; ++pos)
            if (canonical(eng) < spec.p) es.push_back(index_to_edge(pos));
    }
    return BipartiteGraph::from_edges(n, n, es);
}

Graph gen_pairing(const RandomSpec& spec) {
    if (spec.model != RandomModel::pairing) throw std::invalid_argument("spec.model must be pairing");
    if (spec.n < 0) throw std::invalid_argument("n must be non-negative");
    if (spec.d < 1) throw std::invalid_argument("pairing model needs d >= 1");
    const long long points = static_cast<long long>(spec.n) * spec.d;
    if (points % 2 != 0) throw std::invalid_argument("d*n must be even");

    auto eng = seeded_engine(spec.seed);
    std::vector<int> pts(static_cast<std::size_t>(points));
    for (long long i = 0; i < points; ++i) pts[static_cast<std::size_t>(i)] = static_cast<int>(i);
    shuffle_vec(pts, eng);
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(points / 2));
    for (long long i = 0; i < points; i += 2) {
        int u = pts[static_cast<std::size_t>(i)] / spec.d;
        int v = pts[static_cast<std::size_t>(i + 1)] / spec.d;
        es.push_back({u, v});
    }
    return Graph::from_edges(spec.n, es);
}

Graph gen_regular_simple(const RandomSpec& spec, int max_attempts) {
    RandomSpec attempt = spec;
    attempt.model = RandomModel::pairing;
    for (int i = 0; i < max_attempts; ++i) {
        attempt.seed = derive_seed(spec.seed, static_cast<std::uint64_t>(i));
        Graph g = gen_pairing(attempt);
        if (g.simple()) return g;
    }
    throw budget_error("no simple pairing found within max_attempts");
}

} // namespace ramsey
