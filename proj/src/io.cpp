#include "locgame/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "locgame/error.hpp"

namespace locgame {

using nlohmann::json;

namespace {

Error parse_error(const std::string& what) { return Error(ErrorKind::parse, what); }

// Strips a trailing '#' comment and reports whether anything is left.
bool content_of(std::string& line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  return line.find_first_not_of(" \t\r") != std::string::npos;
}

std::vector<Vertex> vertex_list(const json& j) {
  if (!j.is_array()) throw parse_error("expected an array of vertices");
  std::vector<Vertex> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw parse_error("vertex ids must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<Arc> arc_list(const json& j) {
  if (!j.is_array()) throw parse_error("\"arcs\" must be an array");
  std::vector<Arc> arcs;
  for (const auto& a : j) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer()) {
      throw parse_error("each arc must be a pair of integers");
    }
    arcs.push_back({a[0].get<int>(), a[1].get<int>()});
  }
  return arcs;
}

json arcs_to_json(const Digraph& g) {
  json arcs = json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.tail, a.head});
  return arcs;
}

}  // namespace

Digraph read_edgelist(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Arc> arcs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!content_of(line)) continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 0) throw parse_error("line " + std::to_string(lineno) + ": expected vertex count");
    } else {
      Arc a{};
      if (!(fields >> a.tail >> a.head)) {
        throw parse_error("line " + std::to_string(lineno) + ": expected \"u v\"");
      }
      arcs.push_back(a);
    }
    std::string extra;
    if (fields >> extra) throw parse_error("line " + std::to_string(lineno) + ": trailing text");
  }
  if (n < 0) throw parse_error("edge list has no vertex count");
  return Digraph(n, std::move(arcs));
}

void write_edgelist(std::ostream& out, const Digraph& g) {
  out << g.order() << '\n';
  for (const Arc& a : g.arcs()) out << a.tail << ' ' << a.head << '\n';
}

json digraph_to_json(const Digraph& g) { return {{"n", g.order()}, {"arcs", arcs_to_json(g)}}; }

Digraph digraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw parse_error("digraph JSON needs an integer \"n\"");
  }
  return Digraph(j["n"].get<int>(), j.contains("arcs") ? arc_list(j["arcs"]) : std::vector<Arc>{});
}

Digraph parse_digraph(const std::string& text, GraphFormat format) {
  if (format == GraphFormat::json) {
    try {
      return digraph_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw parse_error(e.what());
    }
  }
  std::istringstream in(text);
  return read_edgelist(in);
}

std::string format_digraph(const Digraph& g, GraphFormat format) {
  if (format == GraphFormat::json) return digraph_to_json(g).dump() + "\n";
  std::ostringstream out;
  write_edgelist(out, g);
  return out.str();
}

GraphFormat format_for_path(const std::string& path) {
  const std::string ext = ".json";
  if (path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0) {
    return GraphFormat::json;
  }
  return GraphFormat::edgelist;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Digraph load_digraph(const std::string& path) { return parse_digraph(read_file(path), format_for_path(path)); }

void save_digraph(const std::string& path, const Digraph& g, GraphFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + path);
  out << format_digraph(g, format);
}

json hypergraph_to_json(const Hypergraph& h) {
  json j = {{"n", h.n}, {"edges", h.edges}};
  if (!h.labels.empty()) {
    json labels = json::array();
    for (const auto& [x, y] : h.labels) labels.push_back({x, y});
    j["labels"] = labels;
  }
  return j;
}

Hypergraph hypergraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw parse_error("hypergraph JSON needs \"n\" and \"edges\"");
  }
  Hypergraph h;
  h.n = j["n"].get<int>();
  for (const auto& e : j["edges"]) {
    auto edge = vertex_list(e);
    for (Vertex v : edge) {
      if (v < 0 || v >= h.n) throw parse_error("hyperedge vertex out of range");
    }
    std::sort(edge.begin(), edge.end());
    h.edges.push_back(std::move(edge));
  }
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) h.labels.emplace_back(l.at(0).get<int>(), l.at(1).get<int>());
  }
  return h;
}

json path_decomposition_to_json(const PathDecomposition& pd) {
  return {{"type", "path"}, {"bags", pd.bags}};
}

json dag_decomposition_to_json(const DagDecomposition& dd) {
  json arcs = json::array();
  for (const Arc& a : dd.index_dag.arcs()) arcs.push_back({a.tail, a.head});
  return {{"type", "dag"}, {"nodes", dd.index_dag.order()}, {"arcs", arcs}, {"bags", dd.bags}};
}

PathDecomposition path_decomposition_from_json(const json& j) {
  if (!j.is_object() || j.value("type", "") != "path" || !j.contains("bags")) {
    throw parse_error("expected {\"type\": \"path\", \"bags\": [...]}");
  }
  PathDecomposition pd;
  for (const auto& b : j["bags"]) pd.bags.push_back(vertex_list(b));
  return pd;
}

DagDecomposition dag_decomposition_from_json(const json& j) {
  if (!j.is_object() || j.value("type", "") != "dag" || !j.contains("bags") || !j.contains("nodes")) {
    throw parse_error("expected {\"type\": \"dag\", \"nodes\": m, \"arcs\": [...], \"bags\": [...]}");
  }
  DagDecomposition dd;
  dd.index_dag = Digraph(j["nodes"].get<int>(), j.contains("arcs") ? arc_list(j["arcs"]) : std::vector<Arc>{});
  for (const auto& b : j["bags"]) dd.bags.push_back(vertex_list(b));
  return dd;
}

json distance_to_json(Distance d) {
  if (d.is_infinite()) return "inf";
  return d.hops();
}

Distance distance_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Distance::infinity();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return Distance(j.get<std::uint32_t>());
  throw parse_error("distance must be a nonnegative integer or \"inf\"");
}

void write_transcript(std::ostream& out, const GameTranscript& t) {
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    const Round& r = t.rounds[i];
    json distances = json::array();
    for (Distance d : r.observed.values) distances.push_back(distance_to_json(d));
    json line = {{"round", i + 1},
                 {"probe", r.probe.vertices()},
                 {"distances", distances},
                 {"class", members(r.robber_class)},
                 {"candidates", members(r.next_candidates)}};
    out << line.dump() << '\n';
  }
  json outcome = {{"n", t.n}};
  if (t.outcome.captured) {
    outcome["outcome"] = "captured";
    outcome["round"] = t.outcome.round;
    outcome["vertex"] = t.outcome.vertex;
  } else {
    outcome["outcome"] = "evaded";
    outcome["round"] = t.outcome.round;
  }
  out << outcome.dump() << '\n';
}

namespace {

void read_transcript_line(const json& j, GameTranscript& t, bool& finished) {
  if (j.contains("outcome")) {
    t.n = j.at("n").get<int>();
    t.outcome.captured = j["outcome"] == "captured";
    t.outcome.round = j.at("round").get<int>();
    t.outcome.vertex = t.outcome.captured ? j.at("vertex").get<int>() : -1;
    finished = true;
    return;
  }
  Round r;
  const auto probe = vertex_list(j.at("probe"));
  int limit = 0;
  for (Vertex v : probe) limit = std::max(limit, v + 1);
  r.probe = Probe(probe, limit);
  for (const auto& d : j.at("distances")) r.observed.values.push_back(distance_from_json(d));
  r.robber_class = mask_of(vertex_list(j.at("class")));
  r.next_candidates = mask_of(vertex_list(j.at("candidates")));
  t.rounds.push_back(std::move(r));
}

}  // namespace

GameTranscript read_transcript(std::istream& in) {
  GameTranscript t;
  std::string line;
  bool finished = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (finished) throw parse_error("transcript continues after its outcome line");
    try {
      read_transcript_line(json::parse(line), t, finished);
    } catch (const json::exception& e) {
      throw parse_error(e.what());
    }
  }
  if (!finished) throw parse_error("transcript has no outcome line");
  return t;
}

}  // namespace locgame
