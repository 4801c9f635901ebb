#pragma once

#include <vector>

#include "locgame/digraph.hpp"
#include "locgame/distance.hpp"

namespace locgame {

/// Strong components with ids in a topological order of the condensation:
/// an arc between components i and j (i != j) always has i < j.
struct SccDecomposition {
  std::vector<int> component_of;
  std::vector<std::vector<Vertex>> components;  // each sorted ascending
  Digraph condensation;

  int count() const noexcept { return static_cast<int>(components.size()); }

  /// Maximum out-degree of the condensation (Delta^+ of SC(G)).
  int max_out_degree() const;
};

SccDecomposition strong_components(const Digraph& g);

/// Topological order of g. Throws Error(cyclic) if g has a directed cycle.
/// Among all valid orders the lexicographically smallest one is returned.
std::vector<Vertex> topological_sort(const Digraph& g);

bool is_acyclic(const Digraph& g);

/// max over subgraphs H of the minimum out-degree of H, via min-out-degree
/// peeling (ties broken by lowest id).
int out_degeneracy(const Digraph& g);

struct Spread {
  bool infinite = false;
  int value = 1;  // valid when !infinite
};

/// M(G) = 1 + max over (u, v) of the spread of d(u, w) across w in N^+[v].
/// A pair where some w is reachable from u and another is not makes M
/// infinite; a neighbourhood entirely unreachable from u contributes 0.
Spread spread_M(const Digraph& g);
Spread spread_M(const Digraph& g, const DistanceMatrix& dm);

}  // namespace locgame
