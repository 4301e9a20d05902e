#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ramsey/certificates.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/components.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/lower_bounds.hpp"
#include "ramsey/paths.hpp"

namespace ramsey {

// Edge-list text format: header "n m", then one "u v" line per edge.
std::string to_edge_list(const Graph& g);
Graph graph_from_edge_list(std::istream& in);

nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BipartiteGraph& g);
BipartiteGraph bipartite_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PathWitness& w);
nlohmann::json to_json(const Colouring& c);
Colouring colouring_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const AdversaryColouring& c);
nlohmann::json to_json(const TreeDichotomy& d);

std::string experiment_csv(const ExperimentResult& result, bool component_statistic);
nlohmann::json experiment_summary_json(const ExperimentResult& result);

// Reads a graph from a file: JSON when the first non-space byte is '{',
// edge-list text otherwise.
Graph load_graph(const std::string& path);
BipartiteGraph load_bipartite(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

} // namespace ramsey
