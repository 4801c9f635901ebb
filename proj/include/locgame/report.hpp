#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "locgame/digraph.hpp"
#include "locgame/game.hpp"

namespace locgame {

/// log_M(k+1) for out-degeneracy k and spread M; 0 when M is infinite or
/// the logarithm degenerates (k = 0 or M = 1).
double degeneracy_lower_bound(const Digraph& g);

/// max_i zeta(G_i) + Delta^+(SC(G)) with exact zeta per strong component;
/// nullopt if some component is outside the solver budget.
std::optional<int> strong_component_upper_bound(const Digraph& g, SolverBudget budget = {});

struct BoundsReport {
  int n = 0;
  std::optional<int> beta;
  std::vector<Vertex> beta_witness;
  std::optional<int> zeta;
  int zeta_k_max = 0;
  std::string zeta_status = "skipped";  // exact | exceeds | budget | skipped
  int out_degeneracy = 0;
  bool spread_infinite = false;
  int spread = 1;
  double lower_dt = 0.0;
  double c = 1.0;
  double upper_lp = 0.0;  // +inf when c = 0
  std::optional<int> upper_sc;
  bool consistent = true;
  std::vector<std::string> violations;
};

struct BoundsRequest {
  bool beta = true;
  bool zeta = true;
  bool upper_sc = true;
  int k_max = 0;  // 0 means n
  SolverBudget budget;
};

/// Computes the requested quantities and checks
/// lower_dt <= zeta <= beta <= upper_lp and zeta <= upper_sc.
BoundsReport compute_bounds(const Digraph& g, const BoundsRequest& request = {});

nlohmann::json to_json(const BoundsReport& r);

}  // namespace locgame
