#include "locgame/structure.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "locgame/error.hpp"

namespace locgame {

int SccDecomposition::max_out_degree() const {
  int best = 0;
  for (Vertex c = 0; c < condensation.order(); ++c) {
    best = std::max(best, condensation.out_degree(c));
  }
  return best;
}

SccDecomposition strong_components(const Digraph& g) {
  // Iterative Tarjan. Components are emitted sinks-first, so the emission
  // index is reversed at the end to get a topological numbering.
  const int n = g.order();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> emitted;
  int counter = 0;

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> call;

  for (Vertex root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != -1) continue;
    call.push_back({root, 0});
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto out = g.out_neighbors(f.v);
      const auto fv = static_cast<std::size_t>(f.v);
      if (f.next < out.size()) {
        const Vertex w = out[f.next++];
        const auto uw = static_cast<std::size_t>(w);
        if (index[uw] == -1) {
          index[uw] = low[uw] = counter++;
          stack.push_back(w);
          on_stack[uw] = 1;
          call.push_back({w, 0});
        } else if (on_stack[uw]) {
          low[fv] = std::min(low[fv], index[uw]);
        }
        continue;
      }
      if (low[fv] == index[fv]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          comp.push_back(w);
        } while (w != f.v);
        std::sort(comp.begin(), comp.end());
        emitted.push_back(std::move(comp));
      }
      const Vertex done = f.v;
      call.pop_back();
      if (!call.empty()) {
        const auto parent = static_cast<std::size_t>(call.back().v);
        low[parent] = std::min(low[parent], low[static_cast<std::size_t>(done)]);
      }
    }
  }

  SccDecomposition scc;
  scc.components.assign(emitted.rbegin(), emitted.rend());
  scc.component_of.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < scc.components.size(); ++c) {
    for (Vertex v : scc.components[c]) scc.component_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }
  std::set<Arc> quotient;
  for (const Arc& a : g.arcs()) {
    const int ct = scc.component_of[static_cast<std::size_t>(a.tail)];
    const int ch = scc.component_of[static_cast<std::size_t>(a.head)];
    if (ct != ch) quotient.insert({ct, ch});
  }
  scc.condensation = Digraph(scc.count(), {quotient.begin(), quotient.end()});
  return scc;
}

std::vector<Vertex> topological_sort(const Digraph& g) {
  const int n = g.order();
  std::vector<int> indegree(static_cast<std::size_t>(n));
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    indegree[static_cast<std::size_t>(v)] = g.in_degree(v);
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  while (!ready.empty()) {
    const Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex w : g.out_neighbors(v)) {
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorKind::cyclic, "digraph has a directed cycle");
  }
  return order;
}

bool is_acyclic(const Digraph& g) {
  return strong_components(g).count() == g.order();
}

int out_degeneracy(const Digraph& g) {
  const int n = g.order();
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) degree[static_cast<std::size_t>(v)] = g.out_degree(v);
  int best = 0;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (removed[static_cast<std::size_t>(v)]) continue;
      if (pick == -1 || degree[static_cast<std::size_t>(v)] < degree[static_cast<std::size_t>(pick)]) pick = v;
    }
    best = std::max(best, degree[static_cast<std::size_t>(pick)]);
    removed[static_cast<std::size_t>(pick)] = 1;
    for (Vertex u : g.in_neighbors(pick)) {
      if (!removed[static_cast<std::size_t>(u)]) --degree[static_cast<std::size_t>(u)];
    }
  }
  return best;
}

Spread spread_M(const Digraph& g, const DistanceMatrix& dm) {
  const int n = g.order();
  int widest = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      Distance lo = dm(u, v);
      Distance hi = dm(u, v);
      for (Vertex w : g.out_neighbors(v)) {
        lo = std::min(lo, dm(u, w));
        hi = std::max(hi, dm(u, w));
      }
      if (hi.is_infinite()) {
        if (lo.is_finite()) return {true, 0};
        continue;
      }
      widest = std::max(widest, static_cast<int>(hi.hops() - lo.hops()));
    }
  }
  return {false, widest + 1};
}

Spread spread_M(const Digraph& g) { return spread_M(g, all_pairs_distances(g)); }

}  // namespace locgame
