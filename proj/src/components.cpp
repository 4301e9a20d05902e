#include "ramsey/components.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "ramsey/errors.hpp"
#include "ramsey/paths.hpp"
#include "ramsey/random_graphs.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

// Component sizes and one representative list via BFS, lowest root first.
std::vector<int> component_of(const Graph& g, int root, std::vector<char>& seen) {
    std::vector<int> comp = {root};
    seen[static_cast<std::size_t>(root)] = 1;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbours(v))
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                comp.push_back(u);
                stack.push_back(u);
            }
    }
    return comp;
}

bool is_prime(int q) {
    if (q < 2) return false;
    for (int f = 2; f * f <= q; ++f)
        if (q % f == 0) return false;
    return true;
}

int mod_inverse(int a, int q) { // q prime, a != 0 mod q
    int result = 1, base = a % q, e = q - 2;
    while (e > 0) {
        if (e & 1) result = result * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return result;
}

ExperimentResult run_experiment(const ExperimentConfig& config, bool component_statistic) {
    if (config.n < 1) throw std::invalid_argument("experiment: n must be positive");
    if (config.trials < 1) throw std::invalid_argument("experiment: trials must be positive");
    if (config.r < 1) throw std::invalid_argument("experiment: r must be positive");

    ExperimentResult result;
    result.rows.resize(static_cast<std::size_t>(config.trials) * config.r);
    result.trial_max_ratio.resize(static_cast<std::size_t>(config.trials));

    auto run_trial = [&](int trial) {
        const std::uint64_t trial_seed = derive_seed(config.seed, static_cast<std::uint64_t>(trial));
        RandomSpec spec{RandomModel::gnp, config.n, config.p, 0, trial_seed};
        Graph g = gen_gnp(spec);
        Colouring col =
            colour_with_strategy(g, config.r, config.strategy, derive_seed(trial_seed, 1));
        double best = 0;
        for (int c = 0; c < config.r; ++c) {
            int size;
            if (component_statistic) {
                size = static_cast<int>(largest_component(col.colour_class(c)).size());
            } else {
                const bool exact = config.n <= config.exact_budget;
                size = longest_mono_path(g, col, c, exact, config.exact_budget).size();
            }
            const double ratio = static_cast<double>(size) / config.n;
            result.rows[static_cast<std::size_t>(trial) * config.r + c] =
                TrialRow{trial, trial_seed, c, size, ratio};
            best = std::max(best, ratio);
        }
        result.trial_max_ratio[static_cast<std::size_t>(trial)] = best;
    };

    const int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        for (int t = 0; t < config.trials; ++t) run_trial(t);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (int t = next.fetch_add(1); t < config.trials; t = next.fetch_add(1))
                    run_trial(t);
            });
        for (auto& th : workers) th.join();
    }

    std::vector<double> sorted = result.trial_max_ratio;
    std::sort(sorted.begin(), sorted.end());
    auto quantile = [&](double f) {
        const std::size_t idx =
            std::min(sorted.size() - 1, static_cast<std::size_t>(f * static_cast<double>(sorted.size())));
        return sorted[idx];
    };
    double sum = 0;
    for (double x : sorted) sum += x;
    result.summary = {sum / static_cast<double>(sorted.size()), sorted.front(), quantile(0.25),
                      quantile(0.5), quantile(0.75), sorted.back()};
    return result;
}

} // namespace

std::vector<int> largest_component(const Graph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> best;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        std::vector<int> comp = component_of(g, v, seen);
        if (comp.size() > best.size()) best = std::move(comp);
    }
    std::sort(best.begin(), best.end());
    return best;
}

BipartiteComponentBound bipartite_component_bound(const BipartiteGraph& h) {
    BipartiteComponentBound out;
    if (h.n1 == 0 || h.n2 == 0 || h.g.edge_count() == 0) {
        out.eta = 0.0;
        out.bound = 0.0;
        out.component = h.order() > 0 ? std::vector<int>{0} : std::vector<int>{};
        return out;
    }
    out.eta = static_cast<double>(h.g.edge_count()) /
              (static_cast<double>(h.n1) * static_cast<double>(h.n2));
    out.bound = out.eta * (h.n1 + h.n2);
    out.component = largest_component(h.g);
    return out;
}

std::vector<int> mono_component_spectrum(const Graph& g, const Colouring& col) {
    if (col.vertex_count() != g.vertex_count())
        throw std::invalid_argument("mono_component_spectrum: colouring does not match the graph");
    std::vector<int> sizes(static_cast<std::size_t>(col.colour_count()), 0);
    for (int c = 0; c < col.colour_count(); ++c)
        sizes[static_cast<std::size_t>(c)] =
            static_cast<int>(largest_component(col.colour_class(c)).size());
    return sizes;
}

Colouring affine_sharp_colouring(int q) {
    if (!is_prime(q)) throw std::invalid_argument("affine_sharp_colouring: q must be prime");
    const int n = q * q;
    Graph kn = Graph::complete(n);
    std::vector<int> cols(kn.edges().size());
    for (std::size_t i = 0; i < kn.edges().size(); ++i) {
        const Edge& e = kn.edges()[i];
        const int x1 = e.u / q, y1 = e.u % q;
        const int x2 = e.v / q, y2 = e.v % q;
        if (x1 == x2) {
            cols[i] = q; // vertical parallel class
        } else {
            const int dy = ((y2 - y1) % q + q) % q;
            const int dx = ((x2 - x1) % q + q) % q;
            cols[i] = dy * mod_inverse(dx, q) % q; // slope class
        }
    }
    return Colouring(kn, q + 1, std::move(cols));
}

PerturbedBound perturbed_component_bound(const Graph& g, const Colouring& col, double eps) {
    const int n = g.vertex_count();
    const int r = col.colour_count();
    if (r < 2) throw std::invalid_argument("perturbed_component_bound: r must be at least 2");
    if (!(eps >= 0 && eps <= 1.0 / (static_cast<double>(r) * r) + 1e-12))
        throw std::invalid_argument("perturbed_component_bound: eps must lie in [0, 1/r^2]");
    const double full = static_cast<double>(n) * (n - 1) / 2.0;
    if (static_cast<double>(g.edge_count()) + 1e-9 < (1 - eps) * full)
        throw std::invalid_argument("perturbed_component_bound: graph is not dense enough");

    PerturbedBound out;
    out.threshold = (1.0 / (r - 1) - eps * r * r) * n;
    const std::vector<int> spectrum = mono_component_spectrum(g, col);
    out.achieved = *std::max_element(spectrum.begin(), spectrum.end());
    out.meets = static_cast<double>(out.achieved) >= out.threshold - 1e-9;
    return out;
}

PerturbedBound perturbed_component_bound_exhaustive(const Graph& g, int r, double eps,
                                                    std::uint64_t budget) {
    const std::size_t m = g.edges().size();
    std::uint64_t leaves = 1;
    for (std::size_t i = 1; i < m; ++i) {
        if (leaves > budget) break;
        leaves *= static_cast<std::uint64_t>(r);
    }
    if (leaves > budget)
        throw budget_error("perturbed_component_bound_exhaustive: r^(|E|-1) exceeds the budget");

    PerturbedBound worst;
    worst.achieved = g.vertex_count() + 1;
    std::vector<int> cols(m, 0);
    // Odometer over colourings with the first edge colour fixed.
    for (;;) {
        PerturbedBound cur = perturbed_component_bound(g, Colouring(g, r, cols), eps);
        if (cur.achieved < worst.achieved) worst = cur;
        std::size_t i = m > 1 ? 1 : m;
        while (i < m && cols[i] == r - 1) cols[i++] = 0;
        if (i >= m) break;
        ++cols[i];
    }
    return worst;
}

Colouring colour_with_strategy(const Graph& g, int r, ColouringStrategy strategy,
                               std::uint64_t seed) {
    if (r < 1) throw std::invalid_argument("colour_with_strategy: r must be positive");
    switch (strategy) {
    case ColouringStrategy::uniform:
        return Colouring::uniform_random(g, r, seed);
    case ColouringStrategy::greedy_balanced: {
        // Adversary heuristic: give each edge the colour whose component
        // merge stays smallest (union-find per colour).
        const int n = g.vertex_count();
        std::vector<std::vector<int>> parent(static_cast<std::size_t>(r)),
            size(static_cast<std::size_t>(r));
        for (int c = 0; c < r; ++c) {
            parent[static_cast<std::size_t>(c)].resize(static_cast<std::size_t>(n));
            size[static_cast<std::size_t>(c)].assign(static_cast<std::size_t>(n), 1);
            for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = v;
        }
        auto find = [&](int c, int v) {
            auto& par = parent[static_cast<std::size_t>(c)];
            while (par[static_cast<std::size_t>(v)] != v) {
                par[static_cast<std::size_t>(v)] = par[static_cast<std::size_t>(par[static_cast<std::size_t>(v)])];
                v = par[static_cast<std::size_t>(v)];
            }
            return v;
        };
        std::vector<int> cols(g.edges().size());
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            const Edge& e = g.edges()[i];
            int best_c = 0, best_merged = n + 1;
            for (int c = 0; c < r; ++c) {
                const int ru = find(c, e.u), rv = find(c, e.v);
                const int merged = ru == rv ? size[static_cast<std::size_t>(c)][static_cast<std::size_t>(ru)]
                                            : size[static_cast<std::size_t>(c)][static_cast<std::size_t>(ru)] +
                                                  size[static_cast<std::size_t>(c)][static_cast<std::size_t>(rv)];
                if (merged < best_merged) { best_merged = merged; best_c = c; }
            }
            cols[i] = best_c;
            const int ru = find(best_c, e.u), rv = find(best_c, e.v);
            if (ru != rv) {
                parent[static_cast<std::size_t>(best_c)][static_cast<std::size_t>(ru)] = rv;
                size[static_cast<std::size_t>(best_c)][static_cast<std::size_t>(rv)] +=
                    size[static_cast<std::size_t>(best_c)][static_cast<std::size_t>(ru)];
            }
        }
        return Colouring(g, r, std::move(cols));
    }
    case ColouringStrategy::affine_projection: {
        const int q = r - 1;
        if (!is_prime(q))
            throw std::invalid_argument("affine_projection needs r-1 prime");
        const int block = q * q;
        std::vector<int> cols(g.edges().size());
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            const Edge& e = g.edges()[i];
            const int a = e.u % block, b = e.v % block;
            if (a == b) { cols[i] = 0; continue; }
            const int x1 = a / q, y1 = a % q, x2 = b / q, y2 = b % q;
            if (x1 == x2) {
                cols[i] = q;
            } else {
                const int dy = ((y2 - y1) % q + q) % q;
                const int dx = ((x2 - x1) % q + q) % q;
                cols[i] = dy * mod_inverse(dx, q) % q;
            }
        }
        return Colouring(g, r, std::move(cols));
    }
    }
    throw std::invalid_argument("colour_with_strategy: unknown strategy");
}

ExperimentResult dr_experiment(const ExperimentConfig& config) {
    return run_experiment(config, true);
}

ExperimentResult mono_path_experiment(const ExperimentConfig& config) {
    return run_experiment(config, false);
}

} // namespace ramsey
