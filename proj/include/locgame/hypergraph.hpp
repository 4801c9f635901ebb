#pragma once

#include <utility>
#include <vector>

#include "locgame/digraph.hpp"
#include "locgame/distance.hpp"
#include "locgame/resolve.hpp"

namespace locgame {

struct Hypergraph {
  int n = 0;
  std::vector<std::vector<Vertex>> edges;           // each sorted
  std::vector<std::pair<Vertex, Vertex>> labels;    // optional, parallel to edges

  /// Largest number of edges containing a single vertex.
  int max_degree() const;
  bool has_empty_edge() const;
};

/// One labelled hyperedge h_xy per pair x < y holding every vertex that
/// distinguishes x from y under `conv`.
Hypergraph distinguisher_hypergraph(const Digraph& g,
                                    DistinguishConvention conv = DistinguishConvention::probe);
Hypergraph distinguisher_hypergraph(const DistanceMatrix& dm,
                                    DistinguishConvention conv = DistinguishConvention::probe);

/// min over pairs of |h_xy| / n; 1 when there are no pairs.
double c_parameter(const Digraph& g, DistinguishConvention conv = DistinguishConvention::probe);
double c_parameter(const Hypergraph& h);

struct FractionalCover {
  double tau_star = 0.0;
  std::vector<double> weight;  // x_v per vertex, in [0, 1]
};

/// Minimise sum x_v subject to sum_{v in e} x_v >= 1 and 0 <= x_v <= 1.
///
/// Solved through the packing dual (max sum y_e, sum_{e ∋ v} y_e <= 1) with a
/// dense tableau simplex and Bland's rule; the cover weights are read back
/// from the slack columns. Throws Error(empty_edge) if some edge is empty.
FractionalCover fractional_vertex_cover(const Hypergraph& h, double tolerance = 1e-9);

/// Greedy max-coverage: repeatedly take the vertex meeting the most uncovered
/// edges (lowest id on ties). Result is sorted. Throws on an empty edge.
std::vector<Vertex> greedy_vertex_cover(const Hypergraph& h);

/// (1 + ln d) * tau_star, with d the maximum vertex degree; 0 for no edges.
double lovasz_bound(const Hypergraph& h, double tau_star);

/// (1 + 2 ln n) / c; +infinity when c = 0.
double lp_upper_bound(const Digraph& g);

}  // namespace locgame
