#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace locgame {

using Vertex = int;

struct Arc {
  Vertex tail;
  Vertex head;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Immutable oriented digraph on the vertices 0..n-1.
///
/// Construction rejects self-loops, digons, duplicate arcs and out-of-range
/// endpoints, so every instance satisfies the orientation invariant.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, std::vector<Arc> arcs);

  int order() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  /// Arcs in lexicographic (tail, head) order.
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  std::span<const Vertex> out_neighbors(Vertex v) const;
  std::span<const Vertex> in_neighbors(Vertex v) const;

  int out_degree(Vertex v) const { return static_cast<int>(out_neighbors(v).size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_neighbors(v).size()); }
  bool is_source(Vertex v) const { return in_neighbors(v).empty(); }
  bool is_sink(Vertex v) const { return out_neighbors(v).empty(); }

  bool has_arc(Vertex tail, Vertex head) const;

  /// Exactly one arc between every pair of distinct vertices.
  bool is_tournament() const noexcept;

  /// Subdigraph induced by `vertices`; vertex vertices[i] becomes i.
  Digraph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offsets_;
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Vertex> in_sources_;
  std::vector<char> adjacency_;
};

}  // namespace locgame
