#pragma once

#include <cstdint>
#include <vector>

#include "locgame/digraph.hpp"

namespace locgame {

/// Arc indicator: +1 if (u, v) is an arc, -1 otherwise (u != v).
int arc_indicator(const Digraph& g, Vertex u, Vertex v);

struct Sameness {
  std::vector<Vertex> same;       // z not in {u, v} with chi(u, z) == chi(v, z)
  std::vector<Vertex> different;  // the rest of V \ {u, v}
  int s() const { return static_cast<int>(same.size()); }
  int s_bar() const { return static_cast<int>(different.size()); }
};

Sameness sameness(const Digraph& g, Vertex u, Vertex v);

/// Partition of V \ {x, y} by (chi(x, .), chi(y, .)).
struct NeighborhoodProfile {
  int pp = 0;  // common out-neighbours
  int pm = 0;
  int mp = 0;
  int mm = 0;  // common in-neighbours
  int total() const { return pp + pm + mp + mm; }
};

NeighborhoodProfile neighborhood_profile(const Digraph& g, Vertex x, Vertex y);

/// Regular tournament in which every pair has exactly (n-3)/4 common out-
/// and (n-3)/4 common in-neighbours.
bool doubly_regular_check(const Digraph& g);

/// Ordered 4-tuples of distinct vertices (w, x, y, z) with
/// chi(w,x) chi(x,y) chi(y,z) chi(z,w) = +1.
std::int64_t e4c_count(const Digraph& g);

/// e4c_count / (n^4 / 2).
double e4c_ratio(const Digraph& g);

/// sum over ordered pairs u != v of |s(u, v) - n/2|.
double quasirandom_deviation(const Digraph& g);

/// Smallest and largest s(u, v) over pairs u < v.
struct SamenessRange {
  int min = 0;
  int max = 0;
};
SamenessRange sameness_range(const Digraph& g);

}  // namespace locgame
