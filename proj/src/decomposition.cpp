#include "locgame/decomposition.hpp"

#include <algorithm>
#include <string>

#include "locgame/structure.hpp"

namespace locgame {
namespace {

std::string vstr(Vertex v) { return std::to_string(v); }

// Rejects out-of-range or repeated vertices inside a bag.
std::string check_bags(int n, const std::vector<Bag>& bags) {
  for (std::size_t i = 0; i < bags.size(); ++i) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex v : bags[i]) {
      if (v < 0 || v >= n) return "bag " + std::to_string(i) + " holds out-of-range vertex " + vstr(v);
      if (seen[static_cast<std::size_t>(v)]) return "bag " + std::to_string(i) + " repeats vertex " + vstr(v);
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  return {};
}

std::string check_coverage(int n, const std::vector<Bag>& bags) {
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (const Bag& b : bags) {
    for (Vertex v : b) covered[static_cast<std::size_t>(v)] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!covered[static_cast<std::size_t>(v)]) return "vertex " + vstr(v) + " is in no bag";
  }
  return {};
}

int max_bag(const std::vector<Bag>& bags) {
  std::size_t best = 0;
  for (const Bag& b : bags) best = std::max(best, b.size());
  return static_cast<int>(best);
}

// reach[a][b] != 0 iff a ⪯ b in the index DAG (reflexive).
std::vector<std::vector<char>> reachability(const Digraph& dag) {
  const int m = dag.order();
  std::vector<std::vector<char>> reach(static_cast<std::size_t>(m),
                                       std::vector<char>(static_cast<std::size_t>(m), 0));
  const auto order = topological_sort(dag);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& row = reach[static_cast<std::size_t>(*it)];
    row[static_cast<std::size_t>(*it)] = 1;
    for (Vertex w : dag.out_neighbors(*it)) {
      const auto& sub = reach[static_cast<std::size_t>(w)];
      for (std::size_t k = 0; k < row.size(); ++k) row[k] |= sub[k];
    }
  }
  return reach;
}

bool contains(const Bag& b, Vertex v) { return std::find(b.begin(), b.end(), v) != b.end(); }

}  // namespace

ValidationResult validate_path_decomposition(const Digraph& g, const PathDecomposition& pd) {
  const int n = g.order();
  ValidationResult r;
  r.width = max_bag(pd.bags) - 1;
  if (auto msg = check_bags(n, pd.bags); !msg.empty()) {
    r.violation = msg;
    return r;
  }
  if (auto msg = check_coverage(n, pd.bags); !msg.empty()) {
    r.violation = "(i) " + msg;
    return r;
  }
  std::vector<int> first(static_cast<std::size_t>(n), -1);
  std::vector<int> last(static_cast<std::size_t>(n), -1);
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < pd.bags.size(); ++i) {
    for (Vertex v : pd.bags[i]) {
      const auto uv = static_cast<std::size_t>(v);
      if (first[uv] == -1) first[uv] = static_cast<int>(i);
      last[uv] = static_cast<int>(i);
      ++count[uv];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto uv = static_cast<std::size_t>(v);
    if (last[uv] - first[uv] + 1 != count[uv]) {
      r.violation = "(ii) bags holding vertex " + vstr(v) + " are not consecutive";
      return r;
    }
  }
  for (const Arc& a : g.arcs()) {
    // Some bag of the tail must come no later than some bag of the head.
    if (first[static_cast<std::size_t>(a.tail)] > last[static_cast<std::size_t>(a.head)]) {
      r.violation = "(iii) arc (" + vstr(a.tail) + "," + vstr(a.head) +
                    ") points from a later bag back to an earlier one";
      return r;
    }
  }
  r.valid = true;
  return r;
}

ValidationResult validate_dag_decomposition(const Digraph& g, const DagDecomposition& dd) {
  const int n = g.order();
  const int m = dd.index_dag.order();
  ValidationResult r;
  r.width = max_bag(dd.bags);
  if (static_cast<int>(dd.bags.size()) != m) {
    r.violation = "bag count differs from index DAG order";
    return r;
  }
  if (!is_acyclic(dd.index_dag)) {
    r.violation = "index digraph is not acyclic";
    return r;
  }
  if (auto msg = check_bags(n, dd.bags); !msg.empty()) {
    r.violation = msg;
    return r;
  }
  if (auto msg = check_coverage(n, dd.bags); !msg.empty()) {
    r.violation = "(i) " + msg;
    return r;
  }
  const auto reach = reachability(dd.index_dag);
  auto below = [&](int a, int b) { return reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; };

  for (int d = 0; d < m; ++d) {
    for (int d2 = 0; d2 < m; ++d2) {
      if (!below(d, d2)) continue;
      for (int d3 = 0; d3 < m; ++d3) {
        if (!below(d2, d3)) continue;
        for (Vertex v : dd.bags[static_cast<std::size_t>(d)]) {
          if (contains(dd.bags[static_cast<std::size_t>(d3)], v) &&
              !contains(dd.bags[static_cast<std::size_t>(d2)], v)) {
            r.violation = "(ii) vertex " + vstr(v) + " in bags " + std::to_string(d) + " and " +
                          std::to_string(d3) + " but not in " + std::to_string(d2);
            return r;
          }
        }
      }
    }
  }

  auto in_successor_bag = [&](int from, Vertex v) {
    for (int k = 0; k < m; ++k) {
      if (below(from, k) && contains(dd.bags[static_cast<std::size_t>(k)], v)) return true;
    }
    return false;
  };
  auto check_leaving = [&](int node, const std::vector<Vertex>& vertices) -> std::string {
    for (Vertex u : vertices) {
      for (Vertex v : g.out_neighbors(u)) {
        if (!in_successor_bag(node, v)) {
          return "(iii) arc (" + vstr(u) + "," + vstr(v) + ") leaves bag " + std::to_string(node) +
                 " for a vertex in no successor bag";
        }
      }
    }
    return {};
  };

  for (int d = 0; d < m; ++d) {
    if (dd.index_dag.is_source(d)) {
      if (auto msg = check_leaving(d, dd.bags[static_cast<std::size_t>(d)]); !msg.empty()) {
        r.violation = msg;
        return r;
      }
    }
  }
  for (const Arc& e : dd.index_dag.arcs()) {
    std::vector<Vertex> fresh;
    for (Vertex u : dd.bags[static_cast<std::size_t>(e.head)]) {
      if (!contains(dd.bags[static_cast<std::size_t>(e.tail)], u)) fresh.push_back(u);
    }
    if (auto msg = check_leaving(e.head, fresh); !msg.empty()) {
      r.violation = msg;
      return r;
    }
  }
  r.valid = true;
  return r;
}

bool dag_guard_condition_holds(const Digraph& g, const DagDecomposition& dd) {
  const int n = g.order();
  const int m = dd.index_dag.order();
  const auto reach = reachability(dd.index_dag);

  auto upward = [&](int d) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < m; ++k) {
      if (!reach[static_cast<std::size_t>(d)][static_cast<std::size_t>(k)]) continue;
      for (Vertex v : dd.bags[static_cast<std::size_t>(k)]) in[static_cast<std::size_t>(v)] = 1;
    }
    return in;
  };
  auto guards = [&](const std::vector<char>& guard, const std::vector<char>& region) {
    for (const Arc& a : g.arcs()) {
      if (region[static_cast<std::size_t>(a.tail)] && !region[static_cast<std::size_t>(a.head)] &&
          !guard[static_cast<std::size_t>(a.head)]) {
        return false;
      }
    }
    return true;
  };

  for (int d = 0; d < m; ++d) {
    if (dd.index_dag.is_source(d) && !guards(std::vector<char>(static_cast<std::size_t>(n), 0), upward(d))) {
      return false;
    }
  }
  for (const Arc& e : dd.index_dag.arcs()) {
    std::vector<char> guard(static_cast<std::size_t>(n), 0);
    std::vector<char> region = upward(e.head);
    for (Vertex v : dd.bags[static_cast<std::size_t>(e.tail)]) {
      region[static_cast<std::size_t>(v)] = 0;
      if (contains(dd.bags[static_cast<std::size_t>(e.head)], v)) guard[static_cast<std::size_t>(v)] = 1;
    }
    if (!guards(guard, region)) return false;
  }
  return true;
}

}  // namespace locgame
