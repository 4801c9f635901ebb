#include "locgame/strategies.hpp"

#include <algorithm>
#include <bit>

#include "locgame/error.hpp"
#include "locgame/resolve.hpp"

namespace locgame {
namespace {

class SequenceStrategy : public CopStrategy {
 public:
  SequenceStrategy(std::string name, int n, int budget, std::vector<std::vector<Vertex>> schedule)
      : name_(std::move(name)), n_(n), budget_(budget), schedule_(std::move(schedule)) {}

  std::string name() const override { return name_; }
  int budget() const override { return budget_; }

  // Round i probes schedule[i]; past the end the last entry repeats.
  Probe next(const GameTranscript& so_far) override {
    if (schedule_.empty()) throw Error(ErrorKind::strategy, name_ + ": nothing to probe");
    const std::size_t i = std::min(so_far.rounds.size(), schedule_.size() - 1);
    return Probe(schedule_[i], n_);
  }

 private:
  std::string name_;
  int n_;
  int budget_;
  std::vector<std::vector<Vertex>> schedule_;
};

class ScComposite : public CopStrategy {
 public:
  explicit ScComposite(const Digraph& g) : n_(g.order()), scc_(strong_components(g)) {
    const int count = scc_.count();
    int widest = 0;
    for (int c = 0; c < count; ++c) {
      const auto& comp = scc_.components[static_cast<std::size_t>(c)];
      const auto basis = metric_dimension_exact(g.induced(comp)).witness.vertices;
      std::vector<Vertex> probe;
      for (Vertex local : basis) probe.push_back(comp[static_cast<std::size_t>(local)]);
      widest = std::max(widest, static_cast<int>(probe.size()));
      for (Vertex child : scc_.condensation.out_neighbors(c)) {
        probe.push_back(scc_.components[static_cast<std::size_t>(child)].front());
      }
      phase_probe_.push_back(std::move(probe));
    }
    budget_ = widest + scc_.max_out_degree();
  }

  std::string name() const override { return "sc_composite"; }
  int budget() const override { return budget_; }

  Probe next(const GameTranscript& so_far) override {
    return Probe(phase_probe_[static_cast<std::size_t>(phase(so_far.current_candidates()))], n_);
  }

  // Lowest-numbered component still holding a candidate.
  int phase(VertexMask candidates) const {
    for (int c = 0; c < scc_.count(); ++c) {
      for (Vertex v : scc_.components[static_cast<std::size_t>(c)]) {
        if (candidates & (VertexMask{1} << v)) return c;
      }
    }
    throw Error(ErrorKind::strategy, "sc_composite: empty candidate set");
  }

 private:
  int n_;
  SccDecomposition scc_;
  std::vector<std::vector<Vertex>> phase_probe_;
  int budget_ = 0;
};

class RotationStrategy : public CopStrategy {
 public:
  RotationStrategy(int m, int cops) : m_(m), n_(2 * m + 1), cops_(cops) {
    if (m < 1) throw Error(ErrorKind::invalid_argument, "rotation_strategy: m must be at least 1");
    if (cops < 1 || cops > m / 2 + 1) {
      throw Error(ErrorKind::invalid_argument, "rotation_strategy: cops must lie in 1..floor(m/2)+1");
    }
  }

  std::string name() const override { return "rotation"; }
  int budget() const override { return cops_; }

  Probe next(const GameTranscript& so_far) override {
    Step step{1, 0};
    for (const Round& r : so_far.rounds) step = advance(step, r.robber_class);
    if (step.move == 1) return placement(0, 4);
    return placement(step.anchor + 1, 2);
  }

 private:
  struct Step {
    int move;    // 1, 2 or 3 within the schedule
    int anchor;  // R for move 2, R' for move 3
  };

  bool strict() const { return cops_ == m_ / 2 + 1; }
  int mod(int x) const { return ((x % n_) + n_) % n_; }

  bool fits(VertexMask cls, int start, int width) const {
    VertexMask window = 0;
    for (int i = 0; i < width; ++i) window |= VertexMask{1} << mod(start + i);
    return (cls & ~window) == 0;
  }

  // Offsets base + stride*s for s = 0..floor(m/2), truncated to the budget.
  Probe placement(int base, int stride) const {
    std::vector<Vertex> at;
    for (int s = 0; s <= m_ / 2 && static_cast<int>(at.size()) < cops_; ++s) at.push_back(mod(base + stride * s));
    return Probe(std::move(at), n_);
  }

  Step advance(Step step, VertexMask cls) const {
    if (step.move == 1) {
      for (int s = 0; s <= m_ / 2; ++s) {
        if (fits(cls, 4 * s + 1, 3)) return {2, mod(4 * s + 1)};
      }
    } else if (step.move == 2) {
      const int next = mod(step.anchor + m_ + 1);
      if (m_ % 2 == 1 && fits(cls, next, 2)) return {3, next};
    }
    if (strict()) {
      throw Error(ErrorKind::strategy, "rotation_strategy: class after move " + std::to_string(step.move) +
                                           " does not fit the expected window");
    }
    return {1, 0};
  }

  int m_;
  int n_;
  int cops_;
};

}  // namespace

std::unique_ptr<CopStrategy> dag_sweep(const Digraph& g) {
  const auto order = topological_sort(g);
  std::vector<std::vector<Vertex>> schedule;
  for (Vertex v : order) schedule.push_back({v});
  return std::make_unique<SequenceStrategy>("dag_sweep", g.order(), 1, std::move(schedule));
}

std::unique_ptr<CopStrategy> sc_composite(const Digraph& g) { return std::make_unique<ScComposite>(g); }

std::unique_ptr<CopStrategy> path_sweep(const Digraph& g, const PathDecomposition& pd) {
  const auto check = validate_path_decomposition(g, pd);
  if (!check.valid) throw Error(ErrorKind::invalid_argument, "path_sweep: " + check.violation);
  std::vector<std::vector<Vertex>> schedule;
  for (const Bag& b : pd.bags) {
    if (!b.empty()) schedule.push_back(b);
  }
  return std::make_unique<SequenceStrategy>("path_sweep", g.order(), check.width + 1, std::move(schedule));
}

std::unique_ptr<CopStrategy> dag_decomp_sweep(const Digraph& g, const DagDecomposition& dd) {
  const auto check = validate_dag_decomposition(g, dd);
  if (!check.valid) throw Error(ErrorKind::invalid_argument, "dag_decomp_sweep: " + check.violation);
  std::vector<std::vector<Vertex>> schedule;
  for (Vertex node : topological_sort(dd.index_dag)) {
    const Bag& b = dd.bags[static_cast<std::size_t>(node)];
    if (!b.empty()) schedule.push_back(b);
  }
  return std::make_unique<SequenceStrategy>("dag_decomp_sweep", g.order(), check.width, std::move(schedule));
}

std::unique_ptr<CopStrategy> rotation_strategy(int m) { return rotation_strategy(m, m / 2 + 1); }

std::unique_ptr<CopStrategy> rotation_strategy(int m, int cops) {
  return std::make_unique<RotationStrategy>(m, cops);
}

int rotation_round_bound(int m) { return m % 2 == 0 ? 2 : 3; }

std::vector<int> sc_composite_phases(const Digraph& g, const GameTranscript& t) {
  ScComposite s(g);
  std::vector<int> phases;
  VertexMask candidates = full_mask(g.order());
  for (const Round& r : t.rounds) {
    phases.push_back(s.phase(candidates));
    candidates = r.next_candidates;
  }
  return phases;
}

}  // namespace locgame
