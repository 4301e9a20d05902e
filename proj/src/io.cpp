#include "ramsey/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ramsey {

namespace {

nlohmann::json edges_to_json(const std::vector<Edge>& edges) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Edge& e : edges) arr.push_back({e.u, e.v});
    return arr;
}

std::vector<Edge> edges_from_json(const nlohmann::json& arr) {
    std::vector<Edge> edges;
    for (const auto& e : arr) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return edges;
}

const char* kind_name(CertificateKind k) {
    switch (k) {
    case CertificateKind::letzter: return "letzter";
    case CertificateKind::two_holes: return "two_holes";
    case CertificateKind::bipartite_multi: return "bipartite_multi";
    case CertificateKind::exact_arrow: return "exact_arrow";
    }
    return "?";
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::undecided: return "undecided";
    }
    return "?";
}

} // namespace

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph graph_from_edge_list(std::istream& in) {
    int n = 0;
    long long m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        Edge e;
        if (!(in >> e.u >> e.v))
            throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges");
        edges.push_back(e);
    }
    return Graph::from_edges(n, edges);
}

nlohmann::json to_json(const Graph& g) {
    return {{"n", g.vertex_count()}, {"edges", edges_to_json(g.edges())}};
}

Graph graph_from_json(const nlohmann::json& j) {
    return Graph::from_edges(j.at("n").get<int>(), edges_from_json(j.at("edges")));
}

nlohmann::json to_json(const BipartiteGraph& g) {
    return {{"n1", g.n1}, {"n2", g.n2}, {"edges", edges_to_json(g.g.edges())}};
}

BipartiteGraph bipartite_from_json(const nlohmann::json& j) {
    return BipartiteGraph::from_edges(j.at("n1").get<int>(), j.at("n2").get<int>(),
                                      edges_from_json(j.at("edges")));
}

nlohmann::json to_json(const PathWitness& w) {
    nlohmann::json j = {{"vertices", w.vertices}};
    j["colour"] = w.colour ? nlohmann::json(*w.colour) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const Colouring& c) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < c.edges().size(); ++i)
        arr.push_back({c.edges()[i].u, c.edges()[i].v, c.colour_of(i)});
    return {{"n", c.vertex_count()}, {"r", c.colour_count()}, {"edges", arr}};
}

Colouring colouring_from_json(const nlohmann::json& j) {
    std::vector<Edge> edges;
    std::vector<int> cols;
    for (const auto& e : j.at("edges")) {
        edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        cols.push_back(e.at(2).get<int>());
    }
    Graph g = Graph::from_edges(j.at("n").get<int>(), edges);
    // from_edges sorts the canonical edge list; realign the colours.
    std::vector<int> aligned(cols.size());
    std::vector<char> used(cols.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Edge e = edges[i];
        if (e.u > e.v) std::swap(e.u, e.v);
        for (std::size_t k = 0; k < g.edges().size(); ++k)
            if (!used[k] && g.edges()[k] == e) {
                aligned[k] = cols[i];
                used[k] = 1;
                break;
            }
    }
    return Colouring(g, j.at("r").get<int>(), aligned);
}

nlohmann::json to_json(const Certificate& c) {
    nlohmann::json j;
    j["kind"] = kind_name(c.kind);
    j["verdict"] = verdict_name(c.verdict);
    j["params"] = {{"graph_order", c.params.graph_order},
                   {"target_n", c.params.target_n},
                   {"colours", c.params.colours},
                   {"set_size", c.params.set_size},
                   {"mode", c.params.mode == SearchMode::exact ? "exact" : "monte_carlo"}};
    j["seed"] = c.seed;
    j["budget_spent"] = c.budget_spent;
    if (c.pair_witness) {
        j["witness"] = {{"S", c.pair_witness->set_s}, {"T", c.pair_witness->set_t}};
    } else if (c.quad_witness) {
        j["witness"] = {{"S1", c.quad_witness->s1},
                        {"S2", c.quad_witness->s2},
                        {"T1", c.quad_witness->t1},
                        {"T2", c.quad_witness->t2}};
    } else if (c.colouring_witness) {
        j["witness"] = to_json(*c.colouring_witness);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

nlohmann::json to_json(const AdversaryColouring& c) {
    nlohmann::json j = to_json(c.colouring);
    j["metadata"] = {{"U", c.set_u}, {"W", c.blocks}};
    return j;
}

nlohmann::json to_json(const TreeDichotomy& d) {
    if (d.kind == DichotomyKind::deletable_edges)
        return {{"kind", "deletable_edges"}, {"edges", edges_to_json(d.edges)}};
    return {{"kind", "disjoint_subgraphs"}, {"subgraphs", d.subgraphs}};
}

std::string experiment_csv(const ExperimentResult& result, bool component_statistic) {
    std::ostringstream out;
    out << "trial,seed,colour," << (component_statistic ? "comp_size" : "path_size") << ",ratio\n";
    char buf[64];
    for (const TrialRow& row : result.rows) {
        std::snprintf(buf, sizeof buf, "%.6f", row.ratio);
        out << row.trial << ',' << row.seed << ',' << row.colour << ',' << row.size << ',' << buf
            << '\n';
    }
    return out.str();
}

nlohmann::json experiment_summary_json(const ExperimentResult& result) {
    const ExperimentSummary& s = result.summary;
    return {{"trials", result.trial_max_ratio.size()}, {"mean", s.mean}, {"min", s.min},
            {"q25", s.q25},  {"median", s.median},     {"q75", s.q75},  {"max", s.max}};
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

Graph load_graph(const std::string& path) {
    const std::string text = read_file(path);
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return graph_from_json(nlohmann::json::parse(text));
    std::istringstream in(text);
    return graph_from_edge_list(in);
}

BipartiteGraph load_bipartite(const std::string& path) {
    return bipartite_from_json(nlohmann::json::parse(read_file(path)));
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << content;
}

} // namespace ramsey
