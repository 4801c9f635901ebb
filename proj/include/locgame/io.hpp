#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "locgame/decomposition.hpp"
#include "locgame/digraph.hpp"
#include "locgame/hypergraph.hpp"
#include "locgame/play.hpp"

namespace locgame {

enum class GraphFormat { edgelist, json };

/// Edge list: first non-comment line is n, then one "u v" arc per line.
/// '#' starts a comment anywhere on a line.
Digraph read_edgelist(std::istream& in);
void write_edgelist(std::ostream& out, const Digraph& g);

/// {"n": int, "arcs": [[u, v], ...]}
nlohmann::json digraph_to_json(const Digraph& g);
Digraph digraph_from_json(const nlohmann::json& j);

Digraph parse_digraph(const std::string& text, GraphFormat format);
std::string format_digraph(const Digraph& g, GraphFormat format);

/// .json files are JSON, everything else is an edge list.
GraphFormat format_for_path(const std::string& path);
Digraph load_digraph(const std::string& path);
void save_digraph(const std::string& path, const Digraph& g, GraphFormat format);

/// {"n": int, "edges": [[...], ...]} with an optional "labels": [[x, y], ...].
nlohmann::json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

/// {"type": "path", "bags": [[...], ...]}
nlohmann::json path_decomposition_to_json(const PathDecomposition& pd);
/// {"type": "dag", "nodes": m, "arcs": [[a, b], ...], "bags": [[...], ...]}
nlohmann::json dag_decomposition_to_json(const DagDecomposition& dd);
PathDecomposition path_decomposition_from_json(const nlohmann::json& j);
DagDecomposition dag_decomposition_from_json(const nlohmann::json& j);

/// Distances serialise as integers, Infinity as the string "inf".
nlohmann::json distance_to_json(Distance d);
Distance distance_from_json(const nlohmann::json& j);

/// One JSON object per round, then one outcome line.
void write_transcript(std::ostream& out, const GameTranscript& t);
GameTranscript read_transcript(std::istream& in);

std::string read_file(const std::string& path);

}  // namespace locgame
