#pragma once

#include <vector>

#include "locgame/digraph.hpp"
#include "locgame/distance.hpp"

namespace locgame {

/// Which side of d(., .) the distinguishing vertex sits on.
///
/// `probe`: w distinguishes x, y iff d(w, x) != d(w, y) (a cop on w probing
/// the robber). `pair_to_witness`: iff d(x, w) != d(y, w).
enum class DistinguishConvention { probe, pair_to_witness };

bool distinguishes(const DistanceMatrix& dm, Vertex w, Vertex x, Vertex y,
                   DistinguishConvention conv = DistinguishConvention::probe);

/// True iff no two vertices share a distance vector from w (probe direction).
bool is_resolving(const DistanceMatrix& dm, const std::vector<Vertex>& w);
bool is_resolving(const Digraph& g, const std::vector<Vertex>& w);

struct ResolvingSet {
  std::vector<Vertex> vertices;  // sorted
  bool resolved = false;
};

struct MetricDimension {
  int beta = 0;
  ResolvingSet witness;
};

/// Smallest resolving set by cardinality-then-lexicographic subset search.
/// A probe holds at least one cop, so a single vertex has beta 1 with
/// witness {0}. Throws Error(resource) for n > 64.
MetricDimension metric_dimension_exact(const Digraph& g);
MetricDimension metric_dimension_exact(const Digraph& g, const DistanceMatrix& dm);

enum class MetricDimOneCase { case1, case2, no };

const char* to_string(MetricDimOneCase c);

/// Structural test for metric dimension one: (case1) a Hamiltonian path
/// v_1..v_n with no arc v_i -> v_j for i < j-1, or (case2) a source whose
/// removal leaves a case1 digraph.
MetricDimOneCase metric_dim_one_classifier(const Digraph& g);

}  // namespace locgame
