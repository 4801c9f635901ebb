#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "locgame/digraph.hpp"
#include "locgame/distance.hpp"

namespace locgame {

/// Vertex set over at most 64 vertices, bit v set iff v is a member.
using VertexMask = std::uint64_t;

inline constexpr int kMaxMaskVertices = 64;

VertexMask mask_of(const std::vector<Vertex>& vertices);
std::vector<Vertex> members(VertexMask mask);
VertexMask full_mask(int n);

/// Cop placements for one round: distinct vertices, kept sorted.
class Probe {
 public:
  Probe() = default;
  /// Throws Error(invalid_argument) on repeated or out-of-range vertices.
  Probe(std::vector<Vertex> vertices, int n);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  int size() const noexcept { return static_cast<int>(vertices_.size()); }

 private:
  std::vector<Vertex> vertices_;
};

/// Probe results ordered like the probe's (sorted) vertices.
struct DistanceVector {
  std::vector<Distance> values;
  friend auto operator<=>(const DistanceVector&, const DistanceVector&) = default;
};

struct ProbeClass {
  DistanceVector observed;
  VertexMask members = 0;
};

/// Splits the candidate set by distance vector (probe -> candidate). Classes
/// are returned in increasing distance-vector order.
std::vector<ProbeClass> partition_by_probe(const DistanceMatrix& dm, VertexMask candidates,
                                           const Probe& probe);

/// Closed out-neighbourhood of a set: every vertex the robber can occupy
/// after one move from somewhere in `from`.
VertexMask robber_step(const Digraph& g, VertexMask from);

/// Instances larger than this are refused with Error(resource).
struct SolverBudget {
  int max_vertices = 24;
  std::uint64_t max_probes = 1'000'000;
};

/// Exact value of the k-cop localization game as a least fixpoint over
/// candidate sets (the sets of robber positions consistent with everything
/// the cops have observed, taken just before a probe).
///
/// S is winning iff some probe of k vertices splits S into classes that are
/// each a singleton or step (via robber_step) to a winning set. Only states
/// reachable from a queried root are materialised; further roots can be
/// queried later and extend the explored graph.
class LocalizationSolver {
 public:
  LocalizationSolver(const Digraph& g, int cops, SolverBudget budget = {});

  /// Whether the cops win from the initial candidate set V.
  bool cops_win();

  /// Whether `candidates` is in the winning region.
  bool is_winning(VertexMask candidates);

  int cops() const noexcept { return cops_; }
  const Digraph& graph() const noexcept { return graph_; }
  const DistanceMatrix& distances() const noexcept { return dm_; }
  std::size_t explored_states() const noexcept { return state_mask_.size(); }

 private:
  int intern(VertexMask s);
  void explore_from(VertexMask root);
  void solve();
  void classes_of(VertexMask s, std::size_t probe, std::vector<VertexMask>& out) const;

  Digraph graph_;
  DistanceMatrix dm_;
  int cops_;
  std::vector<VertexMask> closed_out_;
  std::vector<VertexMask> probes_;
  // Partition of V under each probe, flattened; empty when too large to keep.
  std::vector<VertexMask> probe_parts_;
  std::vector<std::size_t> probe_part_offset_;
  // levels_[p] lists the masks {v : d(p, v) = const} for each distance value.
  std::vector<std::vector<VertexMask>> levels_;

  std::unordered_map<VertexMask, int> state_id_;
  std::vector<VertexMask> state_mask_;
  std::vector<char> immediate_win_;
  // Option o of state s: successors option_succ_[option_begin_[o] .. option_begin_[o+1]).
  std::vector<std::size_t> state_option_begin_;
  std::vector<std::size_t> option_begin_;
  std::vector<int> option_succ_;
  std::vector<int> option_owner_;
  std::vector<char> winning_;
  std::size_t explored_upto_ = 0;
};

bool cops_win(const Digraph& g, int k, SolverBudget budget = {});

struct LocalizationNumber {
  std::optional<int> zeta;  // nullopt when zeta > k_max
  int k_max = 0;
  bool exceeds() const noexcept { return !zeta.has_value(); }
};

/// Least k <= k_max with cops_win(g, k); k is tried in increasing order.
LocalizationNumber localization_number_exact(const Digraph& g, int k_max, SolverBudget budget = {});

std::uint64_t binomial(int n, int k);

}  // namespace locgame
