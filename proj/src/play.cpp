#include "locgame/play.hpp"

#include <algorithm>
#include <bit>

#include "locgame/error.hpp"

namespace locgame {

VertexMask GameTranscript::current_candidates() const {
  if (rounds.empty()) return full_mask(n);
  return rounds.back().next_candidates;
}

bool lexicographically_less(VertexMask a, VertexMask b) {
  const auto ma = members(a);
  const auto mb = members(b);
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

OptimalRobber::OptimalRobber(const Digraph& g, int k, SolverBudget budget) : solver_(g, k, budget) {}

std::size_t OptimalRobber::choose(VertexMask, const Probe&, const std::vector<ProbeClass>& classes) {
  const Digraph& g = solver_.graph();
  std::optional<std::size_t> escape;
  std::optional<std::size_t> stall;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const VertexMask c = classes[i].members;
    if (std::popcount(c) < 2) continue;
    auto better = [&](const std::optional<std::size_t>& cur) {
      if (!cur) return true;
      const VertexMask o = classes[*cur].members;
      if (std::popcount(c) != std::popcount(o)) return std::popcount(c) > std::popcount(o);
      return lexicographically_less(c, o);
    };
    if (!solver_.is_winning(robber_step(g, c))) {
      if (better(escape)) escape = i;
    } else if (better(stall)) {
      stall = i;
    }
  }
  if (escape) return *escape;
  if (stall) return *stall;
  return 0;
}

std::unique_ptr<RobberAdversary> optimal_robber(const Digraph& g, int k, SolverBudget budget) {
  return std::make_unique<OptimalRobber>(g, k, budget);
}

GameTranscript play(const Digraph& g, CopStrategy& cops, RobberAdversary& robber, int max_rounds) {
  GameTranscript t;
  t.n = g.order();
  const DistanceMatrix dm = all_pairs_distances(g);
  for (int round = 1; round <= max_rounds; ++round) {
    const VertexMask candidates = t.current_candidates();
    Probe probe = cops.next(t);
    if (probe.size() > cops.budget()) {
      throw Error(ErrorKind::strategy, cops.name() + " probed " + std::to_string(probe.size()) +
                                           " vertices with a budget of " + std::to_string(cops.budget()));
    }
    if (probe.vertices().back() >= g.order()) {
      throw Error(ErrorKind::strategy, cops.name() + " probed a vertex outside the graph");
    }
    auto classes = partition_by_probe(dm, candidates, probe);
    const std::size_t pick = robber.choose(candidates, probe, classes);
    if (pick >= classes.size()) throw Error(ErrorKind::strategy, "robber chose a nonexistent class");
    Round r{std::move(probe), classes[pick].observed, classes[pick].members, 0};
    if (std::popcount(r.robber_class) == 1) {
      t.outcome = {true, round, std::countr_zero(r.robber_class)};
      t.rounds.push_back(std::move(r));
      return t;
    }
    r.next_candidates = robber_step(g, r.robber_class);
    t.rounds.push_back(std::move(r));
  }
  t.outcome = {false, max_rounds, -1};
  return t;
}

}  // namespace locgame
