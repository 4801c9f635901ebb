#include "locgame/distance.hpp"

#include <algorithm>

namespace locgame {

DistanceMatrix all_pairs_distances(const Digraph& g) {
  const int n = g.order();
  DistanceMatrix dm(n);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    queue.clear();
    queue.push_back(s);
    dm.at(s, s) = Distance(0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      const Distance next = dm(s, u) + Distance(1);
      for (Vertex v : g.out_neighbors(u)) {
        if (dm(s, v).is_infinite()) {
          dm.at(s, v) = next;
          queue.push_back(v);
        }
      }
    }
  }
  return dm;
}

Distance diameter(const DistanceMatrix& dm) {
  Distance best(0);
  for (Vertex u = 0; u < dm.order(); ++u) {
    for (Vertex v = 0; v < dm.order(); ++v) best = std::max(best, dm(u, v));
  }
  return best;
}

Distance diameter(const Digraph& g) { return diameter(all_pairs_distances(g)); }

}  // namespace locgame
