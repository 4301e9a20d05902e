#include "ramsey/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ramsey/errors.hpp"
#include "ramsey/paths.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

constexpr double kExactPairCap = 1e7;

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> pick(const std::vector<int>& pool, const std::vector<int>& idx) {
    std::vector<int> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(pool[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<int> remove_from(const std::vector<int>& pool, const std::vector<int>& idx) {
    std::vector<char> drop(pool.size(), 0);
    for (int i : idx) drop[static_cast<std::size_t>(i)] = 1;
    std::vector<int> out;
    out.reserve(pool.size() - idx.size());
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (!drop[i]) out.push_back(pool[i]);
    return out;
}

double choose_real(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

long long cross_edges(const Graph& g, const std::vector<char>& in_s, const std::vector<int>& t) {
    long long count = 0;
    for (int v : t)
        for (int u : g.neighbours(v))
            if (in_s[static_cast<std::size_t>(u)]) ++count;
    return count;
}

std::vector<char> mask_of(int n, const std::vector<int>& s) {
    std::vector<char> m(static_cast<std::size_t>(n), 0);
    for (int v : s) m[static_cast<std::size_t>(v)] = 1;
    return m;
}

// Saturating r^(m-1); used for the arrowing budget precondition.
std::uint64_t pow_saturating(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > UINT64_MAX / base) return UINT64_MAX;
        out *= base;
    }
    return out;
}

} // namespace

Certificate check_letzter(const Graph& g, int n, SearchMode mode, std::uint64_t budget,
                          std::uint64_t seed) {
    if (!g.simple()) throw std::invalid_argument("check_letzter requires a simple graph");
    if (n < 1) throw std::invalid_argument("target path size must be positive");
    const int order = g.vertex_count();
    if (order <= 2 * n) throw std::invalid_argument("order ratio c = |V|/n must exceed 2");
    const int s = (order - 2 * n) / 4; // floor(n(c-2)/4)
    if (s < 1) throw std::invalid_argument("required set size floor(n(c-2)/4) is below 1");

    Certificate cert;
    cert.kind = CertificateKind::letzter;
    cert.params = {order, n, 2, s, mode};
    cert.seed = seed;

    if (mode == SearchMode::exact) {
        if (choose_real(order, s) * choose_real(order - s, s) > kExactPairCap)
            throw budget_error("check_letzter: exact pair enumeration exceeds the cap; use monte_carlo");
        std::vector<int> all(static_cast<std::size_t>(order));
        for (int v = 0; v < order; ++v) all[static_cast<std::size_t>(v)] = v;
        std::vector<int> si(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) si[static_cast<std::size_t>(i)] = i;
        do {
            std::vector<int> set_s = pick(all, si);
            std::vector<char> in_s = mask_of(order, set_s);
            std::vector<int> rest = remove_from(all, si);
            std::vector<int> ti(static_cast<std::size_t>(s));
            for (int i = 0; i < s; ++i) ti[static_cast<std::size_t>(i)] = i;
            do {
                std::vector<int> set_t = pick(rest, ti);
                ++cert.budget_spent;
                if (cross_edges(g, in_s, set_t) == 0) {
                    cert.verdict = Verdict::fails;
                    cert.pair_witness = SetPairWitness{set_s, set_t};
                    return cert;
                }
            } while (next_combination(ti, order - s));
        } while (next_combination(si, order));
        cert.verdict = Verdict::holds;
        return cert;
    }

    auto eng = seeded_engine(seed);
    for (std::uint64_t trial = 0; trial < budget; ++trial) {
        std::vector<int> both = sample_distinct(order, 2 * s, eng);
        std::vector<int> set_s(both.begin(), both.begin() + s);
        std::vector<int> set_t(both.begin() + s, both.end());
        std::sort(set_s.begin(), set_s.end());
        std::sort(set_t.begin(), set_t.end());
        ++cert.budget_spent;
        if (cross_edges(g, mask_of(order, set_s), set_t) == 0) {
            cert.verdict = Verdict::fails;
            cert.pair_witness = SetPairWitness{set_s, set_t};
            return cert;
        }
    }
    cert.verdict = Verdict::undecided;
    return cert;
}

Certificate check_two_holes(const Graph& g, int n, SearchMode mode, std::uint64_t budget,
                            std::uint64_t seed) {
    if (!g.simple()) throw std::invalid_argument("check_two_holes requires a simple graph");
    if (n < 1) throw std::invalid_argument("target path size must be positive");
    const int order = g.vertex_count();
    if (order <= 2 * n) throw std::invalid_argument("order ratio c = |V|/n must exceed 2");
    const int h = (order - 2 * n) / 2; // floor(n(c-2)/2), the common size sum
    if (h < 1) throw std::invalid_argument("required size sum floor(n(c-2)/2) is below 1");

    Certificate cert;
    cert.kind = CertificateKind::two_holes;
    cert.params = {order, n, 2, h, mode};
    cert.seed = seed;

    if (mode == SearchMode::exact) {
        double total = 0;
        for (int s1 = 0; s1 <= h; ++s1) {
            const int s2 = h - s1;
            total += choose_real(order, s1) * choose_real(order - s1, s1) *
                     choose_real(order - 2 * s1, s2) * choose_real(order - 2 * s1 - s2, s2);
        }
        if (total > kExactPairCap)
            throw budget_error("check_two_holes: exact enumeration exceeds the cap; use monte_carlo");

        std::vector<int> all(static_cast<std::size_t>(order));
        for (int v = 0; v < order; ++v) all[static_cast<std::size_t>(v)] = v;
        for (int s1 = 0; s1 <= h; ++s1) {
            const int s2 = h - s1;
            std::vector<int> i1(static_cast<std::size_t>(s1));
            for (int i = 0; i < s1; ++i) i1[static_cast<std::size_t>(i)] = i;
            do {
                std::vector<int> set_s1 = pick(all, i1);
                std::vector<int> rest1 = remove_from(all, i1);
                std::vector<int> i2(static_cast<std::size_t>(s1));
                for (int i = 0; i < s1; ++i) i2[static_cast<std::size_t>(i)] = i;
                do {
                    std::vector<int> set_t2 = pick(rest1, i2);
                    ++cert.budget_spent;
                    if (s1 > 0 && cross_edges(g, mask_of(order, set_s1), set_t2) != 0) continue;
                    std::vector<int> rest2 = remove_from(rest1, i2);
                    std::vector<int> i3(static_cast<std::size_t>(s2));
                    for (int i = 0; i < s2; ++i) i3[static_cast<std::size_t>(i)] = i;
                    do {
                        std::vector<int> set_s2 = pick(rest2, i3);
                        std::vector<int> rest3 = remove_from(rest2, i3);
                        std::vector<char> in_s2 = mask_of(order, set_s2);
                        std::vector<int> i4(static_cast<std::size_t>(s2));
                        for (int i = 0; i < s2; ++i) i4[static_cast<std::size_t>(i)] = i;
                        do {
                            std::vector<int> set_t1 = pick(rest3, i4);
                            ++cert.budget_spent;
                            if (s2 == 0 || cross_edges(g, in_s2, set_t1) == 0) {
                                cert.verdict = Verdict::fails;
                                cert.quad_witness = SetQuadWitness{set_s1, set_s2, set_t1, set_t2};
                                return cert;
                            }
                        } while (next_combination(i4, static_cast<int>(rest3.size())));
                    } while (next_combination(i3, static_cast<int>(rest2.size())));
                } while (s1 > 0 && next_combination(i2, static_cast<int>(rest1.size())));
            } while (s1 > 0 && next_combination(i1, order));
        }
        cert.verdict = Verdict::holds;
        return cert;
    }

    auto eng = seeded_engine(seed);
    for (std::uint64_t trial = 0; trial < budget; ++trial) {
        const int s1 = static_cast<int>(bounded(eng, static_cast<std::uint64_t>(h + 1)));
        const int s2 = h - s1;
        std::vector<int> both = sample_distinct(order, 2 * h, eng);
        std::vector<int> set_s1(both.begin(), both.begin() + s1);
        std::vector<int> set_s2(both.begin() + s1, both.begin() + s1 + s2);
        std::vector<int> set_t1(both.begin() + s1 + s2, both.begin() + s1 + 2 * s2);
        std::vector<int> set_t2(both.begin() + s1 + 2 * s2, both.end());
        for (auto* s : {&set_s1, &set_s2, &set_t1, &set_t2}) std::sort(s->begin(), s->end());
        ++cert.budget_spent;
        if (cross_edges(g, mask_of(order, set_s1), set_t2) == 0 &&
            cross_edges(g, mask_of(order, set_s2), set_t1) == 0) {
            cert.verdict = Verdict::fails;
            cert.quad_witness = SetQuadWitness{set_s1, set_s2, set_t1, set_t2};
            return cert;
        }
    }
    cert.verdict = Verdict::undecided;
    return cert;
}

Certificate check_bipartite_multi(const BipartiteGraph& g, int n, int r, SearchMode mode,
                                  std::uint64_t budget, std::uint64_t seed) {
    if (r < 1) throw std::invalid_argument("colour count must be positive");
    if (n < 1) throw std::invalid_argument("target path size must be positive");
    if (g.n1 != g.n2) throw std::invalid_argument("check_bipartite_multi requires a balanced bipartite graph");
    const int order = g.order();
    const double c = static_cast<double>(order) / n;
    const double pow2r = std::ldexp(1.0, r); // 2^r
    if (!(c > pow2r - 1)) throw std::invalid_argument("order ratio c = |V|/n must exceed 2^r - 1");
    const int s = static_cast<int>(std::floor(((c + 1) / pow2r - 1) * n / 2));
    if (s < 1) throw std::invalid_argument("required set size is below 1");

    Certificate cert;
    cert.kind = CertificateKind::bipartite_multi;
    cert.params = {order, n, r, s, mode};
    cert.seed = seed;

    if (mode == SearchMode::exact) {
        if (choose_real(g.n1, s) * choose_real(g.n2, s) > kExactPairCap)
            throw budget_error("check_bipartite_multi: exact enumeration exceeds the cap; use monte_carlo");
        std::vector<int> si(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) si[static_cast<std::size_t>(i)] = i;
        do {
            std::vector<char> in_s = mask_of(order, si);
            std::vector<int> ti(static_cast<std::size_t>(s));
            for (int i = 0; i < s; ++i) ti[static_cast<std::size_t>(i)] = i;
            do {
                std::vector<int> set_t(static_cast<std::size_t>(s));
                for (int i = 0; i < s; ++i) set_t[static_cast<std::size_t>(i)] = g.n1 + ti[static_cast<std::size_t>(i)];
                ++cert.budget_spent;
                if (cross_edges(g.g, in_s, set_t) == 0) {
                    cert.verdict = Verdict::fails;
                    cert.pair_witness = SetPairWitness{si, set_t};
                    return cert;
                }
            } while (next_combination(ti, g.n2));
        } while (next_combination(si, g.n1));
        cert.verdict = Verdict::holds;
        return cert;
    }

    auto eng = seeded_engine(seed);
    for (std::uint64_t trial = 0; trial < budget; ++trial) {
        std::vector<int> set_s = sample_distinct(g.n1, s, eng);
        std::vector<int> set_t = sample_distinct(g.n2, s, eng);
        for (int& v : set_t) v += g.n1;
        std::sort(set_s.begin(), set_s.end());
        std::sort(set_t.begin(), set_t.end());
        ++cert.budget_spent;
        if (cross_edges(g.g, mask_of(order, set_s), set_t) == 0) {
            cert.verdict = Verdict::fails;
            cert.pair_witness = SetPairWitness{set_s, set_t};
            return cert;
        }
    }
    cert.verdict = Verdict::undecided;
    return cert;
}

namespace {

struct ArrowSearch {
    const Graph& g;
    int target_n;
    int r;
    std::uint64_t node_cap;
    std::uint64_t spent = 0;
    std::vector<int> cols;
    std::optional<std::vector<int>> escape;

    ArrowSearch(const Graph& g_, int n_, int r_, std::uint64_t cap)
        : g(g_), target_n(n_), r(r_), node_cap(cap),
          cols(g_.edges().size(), -1) {}

    bool class_has_target(int colour, std::size_t upto) const {
        std::vector<Edge> es;
        for (std::size_t j = 0; j <= upto; ++j)
            if (cols[j] == colour) es.push_back(g.edges()[j]);
        return has_path_at_least(Graph::from_edges(g.vertex_count(), es), target_n);
    }

    // Depth-first over edge colours; returns true when an escaping colouring
    // was found (no colour class ever reaches P_n).
    bool search(std::size_t i) {
        if (i == cols.size()) {
            escape = cols;
            return true;
        }
        const int limit = (i == 0) ? 1 : r; // first edge colour fixed by symmetry
        for (int c = 0; c < limit; ++c) {
            cols[i] = c;
            if (++spent > node_cap)
                throw budget_error("arrow_exact: node budget exhausted after " +
                                   std::to_string(spent - 1) + " assignments");
            if (!class_has_target(c, i) && search(i + 1)) return true;
            cols[i] = -1;
        }
        return false;
    }
};

} // namespace

Certificate arrow_exact(const Graph& g, int n, int r, std::uint64_t budget) {
    if (!g.simple()) throw std::invalid_argument("arrow_exact requires a simple graph");
    if (r < 1) throw std::invalid_argument("colour count must be positive");
    if (n < 0) throw std::invalid_argument("target path size must be non-negative");
    const int m = static_cast<int>(g.edge_count());

    Certificate cert;
    cert.kind = CertificateKind::exact_arrow;
    cert.params = {g.vertex_count(), n, r, 0, SearchMode::exact};

    if (pow_saturating(static_cast<std::uint64_t>(r), std::max(0, m - 1)) > budget)
        throw budget_error("arrow_exact: r^(|E|-1) exceeds the budget");

    if (n <= 1) { // a path on <= 1 vertices needs no edge of any colour
        cert.verdict = (g.vertex_count() >= n) ? Verdict::holds : Verdict::fails;
        if (cert.verdict == Verdict::fails)
            cert.colouring_witness = Colouring(g, r, std::vector<int>(g.edges().size(), 0));
        return cert;
    }

    // Node cap: the pruned tree has at most ~r/(r-1) * r^(m-1) assignments.
    std::uint64_t cap = budget;
    if (cap < UINT64_MAX / 4) cap = cap * 3 + 64;
    ArrowSearch search(g, n, r, cap);
    const bool escaped = search.search(0);
    cert.budget_spent = search.spent;
    if (escaped) {
        cert.verdict = Verdict::fails;
        cert.colouring_witness = Colouring(g, r, *search.escape);
    } else {
        cert.verdict = Verdict::holds;
    }
    return cert;
}

SizeRamseyResult size_ramsey_exact(int n, int r, int max_edges, std::uint64_t budget) {
    if (n < 1 || r < 1 || max_edges < 1) throw std::invalid_argument("size_ramsey_exact: bad parameters");
    SizeRamseyResult result;
    for (int m = 1; m <= max_edges; ++m) {
        for (int v = 2; v <= m + 1; ++v) {
            std::vector<Edge> pairs;
            for (int a = 0; a < v; ++a)
                for (int b = a + 1; b < v; ++b) pairs.push_back({a, b});
            if (static_cast<int>(pairs.size()) < m) continue;
            std::vector<int> idx(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
            do {
                std::vector<Edge> es;
                es.reserve(static_cast<std::size_t>(m));
                for (int i : idx) es.push_back(pairs[static_cast<std::size_t>(i)]);
                Graph cand = Graph::from_edges(v, es);
                bool covered = true;
                for (int u = 0; u < v; ++u)
                    if (cand.degree(u) == 0) { covered = false; break; }
                if (!covered || !cand.connected()) continue;
                if (result.budget_spent >= budget)
                    throw budget_error("size_ramsey_exact: budget exhausted");
                Certificate cert = arrow_exact(cand, n, r, budget - result.budget_spent);
                result.budget_spent += cert.budget_spent;
                if (cert.verdict == Verdict::holds) {
                    result.found = true;
                    result.edges = m;
                    result.witness = cand;
                    return result;
                }
            } while (next_combination(idx, static_cast<int>(pairs.size())));
        }
    }
    return result;
}

} // namespace ramsey
