#include "locgame/game.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "locgame/error.hpp"

namespace locgame {

VertexMask mask_of(const std::vector<Vertex>& vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v >= kMaxMaskVertices) {
      throw Error(ErrorKind::invalid_argument, "vertex " + std::to_string(v) + " does not fit a mask");
    }
    m |= VertexMask{1} << v;
  }
  return m;
}

std::vector<Vertex> members(VertexMask mask) {
  std::vector<Vertex> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

VertexMask full_mask(int n) {
  if (n < 0 || n > kMaxMaskVertices) {
    throw Error(ErrorKind::resource, "vertex masks hold at most 64 vertices");
  }
  return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

Probe::Probe(std::vector<Vertex> vertices, int n) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (vertices_.empty()) throw Error(ErrorKind::invalid_argument, "a probe needs at least one cop");
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(ErrorKind::invalid_argument, "probe places two cops on one vertex");
  }
  if (vertices_.front() < 0 || vertices_.back() >= n) {
    throw Error(ErrorKind::invalid_argument, "probe vertex out of range");
  }
}

std::vector<ProbeClass> partition_by_probe(const DistanceMatrix& dm, VertexMask candidates,
                                           const Probe& probe) {
  if (candidates == 0) throw Error(ErrorKind::invalid_argument, "candidate set is empty");
  std::map<DistanceVector, VertexMask> groups;
  for (Vertex v : members(candidates)) {
    DistanceVector key;
    key.values.reserve(probe.vertices().size());
    for (Vertex p : probe.vertices()) key.values.push_back(dm(p, v));
    groups[key] |= VertexMask{1} << v;
  }
  std::vector<ProbeClass> out;
  out.reserve(groups.size());
  for (auto& [key, mask] : groups) out.push_back({key, mask});
  return out;
}

VertexMask robber_step(const Digraph& g, VertexMask from) {
  VertexMask to = from;
  for (Vertex v : members(from)) {
    for (Vertex w : g.out_neighbors(v)) to |= VertexMask{1} << w;
  }
  return to;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

namespace {

// Above this many stored masks the per-probe partitions are recomputed.
constexpr std::size_t kPartitionCacheLimit = 1u << 22;

std::vector<VertexMask> all_probes(int n, int k) {
  std::vector<VertexMask> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    VertexMask m = 0;
    for (int v : pick) m |= VertexMask{1} << v;
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

LocalizationSolver::LocalizationSolver(const Digraph& g, int cops, SolverBudget budget)
    : graph_(g), cops_(cops) {
  const int n = g.order();
  if (n < 1) throw Error(ErrorKind::invalid_argument, "the game needs at least one vertex");
  if (cops < 1 || cops > n) {
    throw Error(ErrorKind::invalid_argument,
                "cop count " + std::to_string(cops) + " outside 1.." + std::to_string(n));
  }
  if (n > budget.max_vertices) {
    throw Error(ErrorKind::resource, "solver budget: " + std::to_string(n) + " vertices exceeds " +
                                         std::to_string(budget.max_vertices));
  }
  if (binomial(n, cops) > budget.max_probes) {
    throw Error(ErrorKind::resource, "solver budget: C(" + std::to_string(n) + "," + std::to_string(cops) +
                                         ") probes exceeds " + std::to_string(budget.max_probes));
  }
  dm_ = all_pairs_distances(g);
  closed_out_.resize(static_cast<std::size_t>(n));
  levels_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    closed_out_[static_cast<std::size_t>(v)] = robber_step(g, VertexMask{1} << v);
    std::map<Distance, VertexMask> by_distance;
    for (Vertex w = 0; w < n; ++w) by_distance[dm_(v, w)] |= VertexMask{1} << w;
    for (const auto& [d, m] : by_distance) levels_[static_cast<std::size_t>(v)].push_back(m);
  }
  probes_ = all_probes(n, cops);

  if (probes_.size() * static_cast<std::size_t>(n) <= kPartitionCacheLimit) {
    probe_part_offset_.push_back(0);
    std::vector<VertexMask> classes;
    for (VertexMask p : probes_) {
      classes.assign(1, full_mask(n));
      for (Vertex c : members(p)) {
        std::vector<VertexMask> next;
        for (VertexMask cls : classes) {
          for (VertexMask level : levels_[static_cast<std::size_t>(c)]) {
            if (cls & level) next.push_back(cls & level);
          }
        }
        classes.swap(next);
      }
      probe_parts_.insert(probe_parts_.end(), classes.begin(), classes.end());
      probe_part_offset_.push_back(probe_parts_.size());
    }
  }
  state_option_begin_.push_back(0);
  option_begin_.push_back(0);
}

void LocalizationSolver::classes_of(VertexMask s, std::size_t probe, std::vector<VertexMask>& out) const {
  out.clear();
  if (!probe_part_offset_.empty()) {
    for (std::size_t i = probe_part_offset_[probe]; i < probe_part_offset_[probe + 1]; ++i) {
      if (const VertexMask m = probe_parts_[i] & s) out.push_back(m);
    }
    return;
  }
  out.push_back(s);
  std::vector<VertexMask> next;
  for (Vertex c : members(probes_[probe])) {
    next.clear();
    for (VertexMask cls : out) {
      for (VertexMask level : levels_[static_cast<std::size_t>(c)]) {
        if (cls & level) next.push_back(cls & level);
      }
    }
    out.swap(next);
  }
}

int LocalizationSolver::intern(VertexMask s) {
  auto [it, fresh] = state_id_.emplace(s, static_cast<int>(state_mask_.size()));
  if (fresh) {
    state_mask_.push_back(s);
    immediate_win_.push_back(0);
  }
  return it->second;
}

void LocalizationSolver::explore_from(VertexMask root) {
  intern(root);
  std::vector<VertexMask> classes;
  std::vector<VertexMask> targets;
  std::vector<std::vector<int>> options;
  for (; explored_upto_ < state_mask_.size(); ++explored_upto_) {
    const auto s = static_cast<int>(explored_upto_);
    const VertexMask mask = state_mask_[explored_upto_];
    options.clear();
    bool wins = false;
    for (std::size_t p = 0; p < probes_.size() && !wins; ++p) {
      classes_of(mask, p, classes);
      targets.clear();
      bool loops = false;
      for (VertexMask c : classes) {
        if (std::popcount(c) < 2) continue;
        VertexMask t = 0;
        for (VertexMask rest = c; rest; rest &= rest - 1) {
          t |= closed_out_[static_cast<std::size_t>(std::countr_zero(rest))];
        }
        // A class stepping back to this very state can never help it win.
        if (t == mask) {
          loops = true;
          break;
        }
        targets.push_back(t);
      }
      if (loops) continue;
      if (targets.empty()) {
        wins = true;
        break;
      }
      std::vector<int> succ;
      succ.reserve(targets.size());
      for (VertexMask t : targets) succ.push_back(intern(t));
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
      options.push_back(std::move(succ));
    }
    if (wins) {
      immediate_win_[explored_upto_] = 1;
    } else {
      std::sort(options.begin(), options.end());
      options.erase(std::unique(options.begin(), options.end()), options.end());
      for (const auto& succ : options) {
        option_succ_.insert(option_succ_.end(), succ.begin(), succ.end());
        option_begin_.push_back(option_succ_.size());
        option_owner_.push_back(s);
      }
    }
    state_option_begin_.push_back(option_owner_.size());
  }
}

void LocalizationSolver::solve() {
  const std::size_t states = state_mask_.size();
  const std::size_t options = option_owner_.size();
  winning_.assign(states, 0);
  std::vector<int> remaining(options);
  std::vector<std::size_t> rev_offset(states + 1, 0);
  for (std::size_t o = 0; o < options; ++o) {
    remaining[o] = static_cast<int>(option_begin_[o + 1] - option_begin_[o]);
    for (std::size_t i = option_begin_[o]; i < option_begin_[o + 1]; ++i) {
      ++rev_offset[static_cast<std::size_t>(option_succ_[i]) + 1];
    }
  }
  for (std::size_t t = 0; t < states; ++t) rev_offset[t + 1] += rev_offset[t];
  std::vector<int> rev(rev_offset.back());
  std::vector<std::size_t> fill(rev_offset.begin(), rev_offset.end() - 1);
  for (std::size_t o = 0; o < options; ++o) {
    for (std::size_t i = option_begin_[o]; i < option_begin_[o + 1]; ++i) {
      rev[fill[static_cast<std::size_t>(option_succ_[i])]++] = static_cast<int>(o);
    }
  }

  std::vector<int> work;
  for (std::size_t s = 0; s < states; ++s) {
    if (immediate_win_[s]) {
      winning_[s] = 1;
      work.push_back(static_cast<int>(s));
    }
  }
  while (!work.empty()) {
    const auto t = static_cast<std::size_t>(work.back());
    work.pop_back();
    for (std::size_t i = rev_offset[t]; i < rev_offset[t + 1]; ++i) {
      const auto o = static_cast<std::size_t>(rev[i]);
      if (--remaining[o] == 0) {
        const auto owner = static_cast<std::size_t>(option_owner_[o]);
        if (!winning_[owner]) {
          winning_[owner] = 1;
          work.push_back(static_cast<int>(owner));
        }
      }
    }
  }
}

bool LocalizationSolver::is_winning(VertexMask candidates) {
  const VertexMask all = full_mask(graph_.order());
  if (candidates == 0 || (candidates & ~all) != 0) {
    throw Error(ErrorKind::invalid_argument, "candidate set must be a nonempty subset of V");
  }
  auto it = state_id_.find(candidates);
  if (it == state_id_.end() || static_cast<std::size_t>(it->second) >= winning_.size()) {
    explore_from(candidates);
    solve();
    it = state_id_.find(candidates);
  }
  return winning_[static_cast<std::size_t>(it->second)] != 0;
}

bool LocalizationSolver::cops_win() { return is_winning(full_mask(graph_.order())); }

bool cops_win(const Digraph& g, int k, SolverBudget budget) {
  return LocalizationSolver(g, k, budget).cops_win();
}

LocalizationNumber localization_number_exact(const Digraph& g, int k_max, SolverBudget budget) {
  LocalizationNumber result;
  result.k_max = std::min(k_max, g.order());
  for (int k = 1; k <= result.k_max; ++k) {
    if (cops_win(g, k, budget)) {
      result.zeta = k;
      break;
    }
  }
  return result;
}

}  // namespace locgame
