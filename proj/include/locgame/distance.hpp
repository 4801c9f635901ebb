#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "locgame/digraph.hpp"

namespace locgame {

/// Directed distance: a nonnegative integer or Infinity.
///
/// Infinity equals only itself and orders above every finite value; adding
/// anything to Infinity yields Infinity.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint32_t hops) : raw_(hops) {}

  static constexpr Distance infinity() {
    Distance d;
    d.raw_ = kInfinite;
    return d;
  }

  constexpr bool is_finite() const noexcept { return raw_ != kInfinite; }
  constexpr bool is_infinite() const noexcept { return raw_ == kInfinite; }

  /// Hop count; only meaningful when is_finite().
  constexpr std::uint32_t hops() const noexcept { return raw_; }

  friend constexpr auto operator<=>(Distance, Distance) = default;

  friend constexpr Distance operator+(Distance a, Distance b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Distance(a.raw_ + b.raw_);
  }

  std::string to_string() const {
    return is_finite() ? std::to_string(raw_) : std::string("inf");
  }

 private:
  static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t raw_ = 0;
};

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n)
      : n_(n), dist_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Distance::infinity()) {}

  int order() const noexcept { return n_; }

  Distance operator()(Vertex from, Vertex to) const {
    return dist_[index(from, to)];
  }
  Distance& at(Vertex from, Vertex to) { return dist_[index(from, to)]; }

 private:
  std::size_t index(Vertex from, Vertex to) const {
    return static_cast<std::size_t>(from) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(to);
  }

  int n_ = 0;
  std::vector<Distance> dist_;
};

/// BFS from every vertex; unreachable pairs are Infinity.
DistanceMatrix all_pairs_distances(const Digraph& g);

/// Largest distance over all ordered pairs (Infinity if g is not strong).
Distance diameter(const Digraph& g);
Distance diameter(const DistanceMatrix& dm);

}  // namespace locgame
