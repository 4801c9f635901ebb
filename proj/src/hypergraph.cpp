#include "locgame/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "locgame/error.hpp"

namespace locgame {

int Hypergraph::max_degree() const {
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges) {
    for (Vertex v : e) ++degree[static_cast<std::size_t>(v)];
  }
  return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

bool Hypergraph::has_empty_edge() const {
  return std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.empty(); });
}

Hypergraph distinguisher_hypergraph(const DistanceMatrix& dm, DistinguishConvention conv) {
  Hypergraph h;
  h.n = dm.order();
  for (Vertex x = 0; x < h.n; ++x) {
    for (Vertex y = x + 1; y < h.n; ++y) {
      std::vector<Vertex> edge;
      for (Vertex w = 0; w < h.n; ++w) {
        if (distinguishes(dm, w, x, y, conv)) edge.push_back(w);
      }
      h.edges.push_back(std::move(edge));
      h.labels.emplace_back(x, y);
    }
  }
  return h;
}

Hypergraph distinguisher_hypergraph(const Digraph& g, DistinguishConvention conv) {
  return distinguisher_hypergraph(all_pairs_distances(g), conv);
}

double c_parameter(const Hypergraph& h) {
  if (h.edges.empty() || h.n == 0) return 1.0;
  std::size_t smallest = h.edges.front().size();
  for (const auto& e : h.edges) smallest = std::min(smallest, e.size());
  return static_cast<double>(smallest) / h.n;
}

double c_parameter(const Digraph& g, DistinguishConvention conv) {
  return c_parameter(distinguisher_hypergraph(g, conv));
}

namespace {

void reject_empty_edges(const Hypergraph& h) {
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    if (h.edges[i].empty()) {
      std::string label = std::to_string(i);
      if (i < h.labels.size()) {
        label = "(" + std::to_string(h.labels[i].first) + "," + std::to_string(h.labels[i].second) + ")";
      }
      throw Error(ErrorKind::empty_edge, "hyperedge " + label + " is empty; no cover exists");
    }
  }
}

}  // namespace

FractionalCover fractional_vertex_cover(const Hypergraph& h, double tolerance) {
  reject_empty_edges(h);
  const std::size_t rows = static_cast<std::size_t>(h.n);
  const std::size_t edge_cols = h.edges.size();
  const std::size_t cols = edge_cols + rows;  // edge variables, then slacks

  // Tableau rows: [coefficients | rhs]. Row r is vertex r's packing constraint.
  std::vector<std::vector<double>> tab(rows, std::vector<double>(cols + 1, 0.0));
  for (std::size_t e = 0; e < edge_cols; ++e) {
    for (Vertex v : h.edges[e]) tab[static_cast<std::size_t>(v)][e] = 1.0;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    tab[r][edge_cols + r] = 1.0;
    tab[r][cols] = 1.0;
    basis[r] = edge_cols + r;
  }
  // Reduced costs of the maximisation objective sum y_e.
  std::vector<double> reduced(cols + 1, 0.0);
  for (std::size_t e = 0; e < edge_cols; ++e) reduced[e] = 1.0;

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (reduced[j] > tolerance) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < rows; ++r) {
      if (tab[r][enter] > tolerance) best_ratio = std::min(best_ratio, tab[r][cols] / tab[r][enter]);
    }
    // Bland: among minimum-ratio rows, the lowest-index basic variable leaves.
    std::size_t leave = rows;
    for (std::size_t r = 0; r < rows; ++r) {
      if (tab[r][enter] <= tolerance) continue;
      if (tab[r][cols] / tab[r][enter] > best_ratio + tolerance) continue;
      if (leave == rows || basis[r] < basis[leave]) leave = r;
    }
    // Every column has a positive entry (no empty edges), so the LP is bounded.
    if (leave == rows) throw Error(ErrorKind::empty_edge, "packing LP unbounded");

    const double pivot = tab[leave][enter];
    for (double& x : tab[leave]) x /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || tab[r][enter] == 0.0) continue;
      const double factor = tab[r][enter];
      for (std::size_t j = 0; j <= cols; ++j) tab[r][j] -= factor * tab[leave][j];
    }
    const double factor = reduced[enter];
    for (std::size_t j = 0; j <= cols; ++j) reduced[j] -= factor * tab[leave][j];
    basis[leave] = enter;
  }

  FractionalCover cover;
  cover.weight.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    cover.weight[r] = std::clamp(-reduced[edge_cols + r], 0.0, 1.0);
    cover.tau_star += cover.weight[r];
  }
  return cover;
}

std::vector<Vertex> greedy_vertex_cover(const Hypergraph& h) {
  reject_empty_edges(h);
  std::vector<char> covered(h.edges.size(), 0);
  std::size_t remaining = h.edges.size();
  std::vector<Vertex> cover;
  while (remaining > 0) {
    std::vector<int> hits(static_cast<std::size_t>(h.n), 0);
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      if (covered[e]) continue;
      for (Vertex v : h.edges[e]) ++hits[static_cast<std::size_t>(v)];
    }
    const auto best = static_cast<Vertex>(std::max_element(hits.begin(), hits.end()) - hits.begin());
    cover.push_back(best);
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      if (!covered[e] && std::binary_search(h.edges[e].begin(), h.edges[e].end(), best)) {
        covered[e] = 1;
        --remaining;
      }
    }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

double lovasz_bound(const Hypergraph& h, double tau_star) {
  const int d = h.max_degree();
  if (d == 0) return 0.0;
  return (1.0 + std::log(static_cast<double>(d))) * tau_star;
}

double lp_upper_bound(const Digraph& g) {
  const double c = c_parameter(g);
  if (c <= 0.0) return std::numeric_limits<double>::infinity();
  return (1.0 + 2.0 * std::log(static_cast<double>(g.order()))) / c;
}

}  // namespace locgame
