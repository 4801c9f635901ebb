#include "locgame/digraph.hpp"

#include <algorithm>
#include <string>

#include "locgame/error.hpp"

namespace locgame {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::cyclic: return "cyclic";
    case ErrorKind::resource: return "resource";
    case ErrorKind::empty_edge: return "empty_edge";
    case ErrorKind::strategy: return "strategy";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

Digraph::Digraph(int n) : Digraph(n, {}) {}

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) {
    throw Error(ErrorKind::invalid_argument, "vertex count must be nonnegative");
  }
  const auto un = static_cast<std::size_t>(n);
  adjacency_.assign(un * un, 0);
  std::sort(arcs_.begin(), arcs_.end());
  for (const Arc& a : arcs_) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw Error(ErrorKind::invalid_argument,
                  "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                      ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (a.tail == a.head) {
      throw Error(ErrorKind::invalid_argument,
                  "self-loop at vertex " + std::to_string(a.tail));
    }
    char& slot = adjacency_[static_cast<std::size_t>(a.tail) * un + static_cast<std::size_t>(a.head)];
    if (slot) {
      throw Error(ErrorKind::invalid_argument,
                  "duplicate arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")");
    }
    slot = 1;
  }
  for (const Arc& a : arcs_) {
    if (adjacency_[static_cast<std::size_t>(a.head) * un + static_cast<std::size_t>(a.tail)]) {
      throw Error(ErrorKind::invalid_argument,
                  "digon between " + std::to_string(a.tail) + " and " + std::to_string(a.head));
    }
  }

  out_offsets_.assign(un + 1, 0);
  in_offsets_.assign(un + 1, 0);
  for (const Arc& a : arcs_) {
    ++out_offsets_[static_cast<std::size_t>(a.tail) + 1];
    ++in_offsets_[static_cast<std::size_t>(a.head) + 1];
  }
  for (std::size_t v = 0; v < un; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_targets_.resize(arcs_.size());
  in_sources_.resize(arcs_.size());
  std::vector<std::size_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  // arcs_ is sorted by tail then head, so both lists come out sorted.
  for (const Arc& a : arcs_) {
    out_targets_[out_fill[static_cast<std::size_t>(a.tail)]++] = a.head;
    in_sources_[in_fill[static_cast<std::size_t>(a.head)]++] = a.tail;
  }
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorKind::invalid_argument, "vertex " + std::to_string(v) + " out of range");
  }
}

std::span<const Vertex> Digraph::out_neighbors(Vertex v) const {
  check_vertex(v);
  const auto uv = static_cast<std::size_t>(v);
  return {out_targets_.data() + out_offsets_[uv], out_offsets_[uv + 1] - out_offsets_[uv]};
}

std::span<const Vertex> Digraph::in_neighbors(Vertex v) const {
  check_vertex(v);
  const auto uv = static_cast<std::size_t>(v);
  return {in_sources_.data() + in_offsets_[uv], in_offsets_[uv + 1] - in_offsets_[uv]};
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  check_vertex(tail);
  check_vertex(head);
  return adjacency_[static_cast<std::size_t>(tail) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(head)] != 0;
}

bool Digraph::is_tournament() const noexcept {
  const auto un = static_cast<std::size_t>(n_);
  return arcs_.size() == un * (un - (un > 0 ? 1 : 0)) / 2;
}

Digraph Digraph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    if (index[static_cast<std::size_t>(vertices[i])] != -1) {
      throw Error(ErrorKind::invalid_argument, "induced: repeated vertex");
    }
    index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  }
  std::vector<Arc> sub;
  for (const Arc& a : arcs_) {
    const int t = index[static_cast<std::size_t>(a.tail)];
    const int h = index[static_cast<std::size_t>(a.head)];
    if (t >= 0 && h >= 0) sub.push_back({t, h});
  }
  return Digraph(static_cast<int>(vertices.size()), std::move(sub));
}

}  // namespace locgame
