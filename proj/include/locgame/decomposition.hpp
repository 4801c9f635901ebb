#pragma once

#include <string>
#include <vector>

#include "locgame/digraph.hpp"

namespace locgame {

using Bag = std::vector<Vertex>;

/// Ordered bags W_1..W_k. Width is max |W_i| - 1.
struct PathDecomposition {
  std::vector<Bag> bags;
};

/// Bags indexed by the nodes of an acyclic digraph. Width is max |X_d|
/// (no minus one, unlike path decompositions).
struct DagDecomposition {
  Digraph index_dag;
  std::vector<Bag> bags;  // bags[d] for node d of index_dag
};

struct ValidationResult {
  bool valid = false;
  int width = 0;
  std::string violation;  // empty when valid
};

/// Checks coverage, the interval property W_i ∩ W_k ⊆ W_j (i < j < k), and
/// that every arc (v, u) either has both ends in one bag or has v in a bag
/// strictly before some bag holding u.
ValidationResult validate_path_decomposition(const Digraph& g, const PathDecomposition& pd);

/// Checks coverage, the convexity property along ⪯_D and the successor-bag
/// form of the guarding condition.
ValidationResult validate_dag_decomposition(const Digraph& g, const DagDecomposition& dd);

/// The guarding condition in its original form: for every index arc (d, d'),
/// X_d ∩ X_d' guards X_{⪰d'} \ X_d, and X_{⪰d} is guarded by ∅ for every
/// source d. Used to cross-check the successor-bag form.
bool dag_guard_condition_holds(const Digraph& g, const DagDecomposition& dd);

}  // namespace locgame
