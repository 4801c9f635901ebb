#include "locgame/tournament.hpp"

#include <algorithm>
#include <cmath>

#include "locgame/error.hpp"

namespace locgame {
namespace {

void require_tournament(const Digraph& g, const char* who) {
  if (!g.is_tournament()) {
    throw Error(ErrorKind::invalid_argument, std::string(who) + ": input must be a tournament");
  }
}

void require_pair(const Digraph& g, Vertex u, Vertex v) {
  if (u == v || u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw Error(ErrorKind::invalid_argument, "expected two distinct vertices");
  }
}

}  // namespace

int arc_indicator(const Digraph& g, Vertex u, Vertex v) { return g.has_arc(u, v) ? 1 : -1; }

Sameness sameness(const Digraph& g, Vertex u, Vertex v) {
  require_tournament(g, "sameness");
  require_pair(g, u, v);
  Sameness s;
  for (Vertex z = 0; z < g.order(); ++z) {
    if (z == u || z == v) continue;
    if (arc_indicator(g, u, z) == arc_indicator(g, v, z)) {
      s.same.push_back(z);
    } else {
      s.different.push_back(z);
    }
  }
  return s;
}

NeighborhoodProfile neighborhood_profile(const Digraph& g, Vertex x, Vertex y) {
  require_tournament(g, "neighborhood_profile");
  require_pair(g, x, y);
  NeighborhoodProfile p;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == x || v == y) continue;
    const bool xv = g.has_arc(x, v);
    const bool yv = g.has_arc(y, v);
    if (xv && yv) {
      ++p.pp;
    } else if (xv) {
      ++p.pm;
    } else if (yv) {
      ++p.mp;
    } else {
      ++p.mm;
    }
  }
  return p;
}

bool doubly_regular_check(const Digraph& g) {
  const int n = g.order();
  if (!g.is_tournament() || n % 4 != 3) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.out_degree(v) != (n - 1) / 2) return false;
  }
  const int target = (n - 3) / 4;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const auto p = neighborhood_profile(g, x, y);
      if (p.pp != target || p.mm != target) return false;
    }
  }
  return true;
}

std::int64_t e4c_count(const Digraph& g) {
  require_tournament(g, "e4c_count");
  const int n = g.order();
  if (n < 4) return 0;
  // walk[w][y] = sum over x outside {w, y} of chi(w, x) chi(x, y).
  std::vector<std::int64_t> walk(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (Vertex w = 0; w < n; ++w) {
    for (Vertex y = 0; y < n; ++y) {
      if (w == y) continue;
      std::int64_t sum = 0;
      for (Vertex x = 0; x < n; ++x) {
        if (x != w && x != y) sum += arc_indicator(g, w, x) * arc_indicator(g, x, y);
      }
      walk[static_cast<std::size_t>(w) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] = sum;
    }
  }
  // Sum of the cyclic product over distinct (w, x, y, z): pair the two
  // 2-walks w->x->y and y->z->w, then drop x == z. Each dropped term is
  // (chi(w,x) chi(x,w)) (chi(x,y) chi(y,x)) = (-1)(-1) = 1.
  std::int64_t product_sum = 0;
  for (Vertex w = 0; w < n; ++w) {
    for (Vertex y = 0; y < n; ++y) {
      if (w == y) continue;
      const auto a = walk[static_cast<std::size_t>(w) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)];
      const auto b = walk[static_cast<std::size_t>(y) * static_cast<std::size_t>(n) + static_cast<std::size_t>(w)];
      product_sum += a * b - (n - 2);
    }
  }
  const std::int64_t tuples = std::int64_t{n} * (n - 1) * (n - 2) * (n - 3);
  return (tuples + product_sum) / 2;
}

double e4c_ratio(const Digraph& g) {
  const double n = g.order();
  return static_cast<double>(e4c_count(g)) / (n * n * n * n / 2.0);
}

double quasirandom_deviation(const Digraph& g) {
  require_tournament(g, "quasirandom_deviation");
  const int n = g.order();
  double total = 0.0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) total += std::abs(sameness(g, u, v).s() - n / 2.0);
    }
  }
  return total;
}

SamenessRange sameness_range(const Digraph& g) {
  require_tournament(g, "sameness_range");
  const int n = g.order();
  SamenessRange r{n, 0};
  if (n < 2) return {0, 0};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int s = sameness(g, u, v).s();
      r.min = std::min(r.min, s);
      r.max = std::max(r.max, s);
    }
  }
  return r;
}

}  // namespace locgame
