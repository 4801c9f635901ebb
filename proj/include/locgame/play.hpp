#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locgame/game.hpp"

namespace locgame {

struct Round {
  Probe probe;
  DistanceVector observed;
  VertexMask robber_class = 0;  // the block of the partition the robber is in
  VertexMask next_candidates = 0;  // robber_step(robber_class); 0 once captured
};

struct GameOutcome {
  bool captured = false;
  int round = 0;       // capture round (1-based) or rounds played
  Vertex vertex = -1;  // capture vertex
};

struct GameTranscript {
  int n = 0;
  std::vector<Round> rounds;
  GameOutcome outcome;

  /// Candidate set the cops face before the next probe.
  VertexMask current_candidates() const;
};

/// A cop strategy chooses the next probe from the transcript so far.
class CopStrategy {
 public:
  virtual ~CopStrategy() = default;
  virtual std::string name() const = 0;
  virtual int budget() const = 0;
  virtual Probe next(const GameTranscript& so_far) = 0;
};

/// Picks the robber's class among the partition blocks of the current
/// candidate set under the cops' probe.
class RobberAdversary {
 public:
  virtual ~RobberAdversary() = default;
  virtual std::size_t choose(VertexMask candidates, const Probe& probe,
                             const std::vector<ProbeClass>& classes) = 0;
};

/// Information-set robber driven by the k-cop solver: prefers a non-singleton
/// class whose robber step lies outside the winning region (largest first,
/// then lexicographically smallest), else any non-singleton class, else the
/// first singleton.
class OptimalRobber : public RobberAdversary {
 public:
  OptimalRobber(const Digraph& g, int k, SolverBudget budget = {});
  std::size_t choose(VertexMask candidates, const Probe& probe,
                     const std::vector<ProbeClass>& classes) override;
  LocalizationSolver& solver() { return solver_; }

 private:
  LocalizationSolver solver_;
};

std::unique_ptr<RobberAdversary> optimal_robber(const Digraph& g, int k, SolverBudget budget = {});

/// Runs the game from candidate set V. Throws Error(strategy) if the
/// strategy exceeds its budget or emits an invalid probe.
GameTranscript play(const Digraph& g, CopStrategy& cops, RobberAdversary& robber, int max_rounds);

/// Orders vertex masks by their sorted member lists.
bool lexicographically_less(VertexMask a, VertexMask b);

}  // namespace locgame
