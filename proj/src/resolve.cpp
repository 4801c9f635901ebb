#include "locgame/resolve.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "locgame/error.hpp"

namespace locgame {

bool distinguishes(const DistanceMatrix& dm, Vertex w, Vertex x, Vertex y, DistinguishConvention conv) {
  if (conv == DistinguishConvention::probe) return dm(w, x) != dm(w, y);
  return dm(x, w) != dm(y, w);
}

bool is_resolving(const DistanceMatrix& dm, const std::vector<Vertex>& w) {
  std::map<std::vector<Distance>, Vertex> seen;
  std::vector<Distance> key(w.size());
  for (Vertex v = 0; v < dm.order(); ++v) {
    for (std::size_t i = 0; i < w.size(); ++i) key[i] = dm(w[i], v);
    if (!seen.emplace(key, v).second) return false;
  }
  return true;
}

bool is_resolving(const Digraph& g, const std::vector<Vertex>& w) {
  return is_resolving(all_pairs_distances(g), w);
}

MetricDimension metric_dimension_exact(const Digraph& g) {
  return metric_dimension_exact(g, all_pairs_distances(g));
}

MetricDimension metric_dimension_exact(const Digraph& g, const DistanceMatrix& dm) {
  const int n = g.order();
  if (n < 1) throw Error(ErrorKind::invalid_argument, "metric dimension needs at least one vertex");
  if (n > 64) throw Error(ErrorKind::resource, "exact metric dimension is limited to 64 vertices");

  // separators[p] = vertices w with d(w, x) != d(w, y) for the p-th pair.
  std::vector<std::uint64_t> separators;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      std::uint64_t mask = 0;
      for (Vertex w = 0; w < n; ++w) {
        if (dm(w, x) != dm(w, y)) mask |= std::uint64_t{1} << w;
      }
      separators.push_back(mask);
    }
  }
  auto resolves = [&](std::uint64_t chosen) {
    return std::all_of(separators.begin(), separators.end(),
                       [chosen](std::uint64_t s) { return (s & chosen) != 0; });
  };

  for (int size = 1; size <= n; ++size) {
    // Lexicographic enumeration of size-subsets of 0..n-1.
    std::vector<Vertex> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::uint64_t chosen = 0;
      for (Vertex v : pick) chosen |= std::uint64_t{1} << v;
      if (resolves(chosen)) return {size, {pick, true}};
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) {
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  // Unreachable: the whole vertex set always resolves (d(v, v) = 0).
  throw Error(ErrorKind::invalid_argument, "no resolving set found");
}

const char* to_string(MetricDimOneCase c) {
  switch (c) {
    case MetricDimOneCase::case1: return "case1";
    case MetricDimOneCase::case2: return "case2";
    case MetricDimOneCase::no: return "no";
  }
  return "no";
}

namespace {

// Case (1): order the vertices by distance from some start s; the order is a
// witness iff the distances are exactly 0..n-1, consecutive vertices are
// joined by arcs and no arc skips forward.
bool has_rigid_hamiltonian_path(const Digraph& g) {
  const int n = g.order();
  const auto dm = all_pairs_distances(g);
  for (Vertex s = 0; s < n; ++s) {
    std::vector<Vertex> order(static_cast<std::size_t>(n), -1);
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      const Distance d = dm(s, v);
      if (d.is_infinite() || d.hops() >= static_cast<std::uint32_t>(n) || order[d.hops()] != -1) {
        ok = false;
      } else {
        order[d.hops()] = v;
      }
    }
    if (!ok) continue;
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i + 1 < n && ok; ++i) {
      ok = g.has_arc(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i) + 1]);
    }
    for (const Arc& a : g.arcs()) {
      if (position[static_cast<std::size_t>(a.tail)] < position[static_cast<std::size_t>(a.head)] - 1) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

MetricDimOneCase metric_dim_one_classifier(const Digraph& g) {
  if (has_rigid_hamiltonian_path(g)) return MetricDimOneCase::case1;
  const int n = g.order();
  for (Vertex x = 0; x < n; ++x) {
    if (!g.is_source(x)) continue;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (v != x) rest.push_back(v);
    }
    if (has_rigid_hamiltonian_path(g.induced(rest))) return MetricDimOneCase::case2;
  }
  return MetricDimOneCase::no;
}

}  // namespace locgame
