#include "locgame/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "locgame/error.hpp"
#include "locgame/hypergraph.hpp"
#include "locgame/resolve.hpp"
#include "locgame/structure.hpp"

namespace locgame {

namespace {
constexpr double kSlack = 1e-9;
}

double degeneracy_lower_bound(const Digraph& g) {
  const int k = out_degeneracy(g);
  const Spread m = spread_M(g);
  if (m.infinite || m.value <= 1 || k == 0) return 0.0;
  return std::log(static_cast<double>(k + 1)) / std::log(static_cast<double>(m.value));
}

std::optional<int> strong_component_upper_bound(const Digraph& g, SolverBudget budget) {
  const auto scc = strong_components(g);
  int worst = 0;
  for (const auto& comp : scc.components) {
    const Digraph sub = g.induced(comp);
    try {
      const auto z = localization_number_exact(sub, sub.order(), budget);
      worst = std::max(worst, *z.zeta);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::resource) return std::nullopt;
      throw;
    }
  }
  return worst + scc.max_out_degree();
}

BoundsReport compute_bounds(const Digraph& g, const BoundsRequest& request) {
  BoundsReport r;
  r.n = g.order();
  r.out_degeneracy = out_degeneracy(g);
  const Spread m = spread_M(g);
  r.spread_infinite = m.infinite;
  r.spread = m.value;
  r.lower_dt = degeneracy_lower_bound(g);
  r.c = c_parameter(g);
  r.upper_lp = lp_upper_bound(g);

  if (request.beta && r.n >= 1) {
    const auto md = metric_dimension_exact(g);
    r.beta = md.beta;
    r.beta_witness = md.witness.vertices;
  }
  if (request.zeta && r.n >= 1) {
    r.zeta_k_max = request.k_max > 0 ? std::min(request.k_max, r.n) : r.n;
    try {
      const auto z = localization_number_exact(g, r.zeta_k_max, request.budget);
      r.zeta = z.zeta;
      r.zeta_status = z.exceeds() ? "exceeds" : "exact";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::resource) throw;
      r.zeta_status = "budget";
    }
  }
  if (request.upper_sc && r.n >= 1) r.upper_sc = strong_component_upper_bound(g, request.budget);

  auto fail = [&](const std::string& why) {
    r.consistent = false;
    r.violations.push_back(why);
  };
  if (r.zeta) {
    if (r.lower_dt > *r.zeta + kSlack) fail("lower_dt > zeta");
    if (r.beta && *r.zeta > *r.beta) fail("zeta > beta");
    if (*r.zeta > r.upper_lp + kSlack) fail("zeta > upper_lp");
    if (r.upper_sc && *r.zeta > *r.upper_sc) fail("zeta > upper_sc");
  }
  if (r.beta) {
    if (*r.beta > r.upper_lp + kSlack) fail("beta > upper_lp");
    if (r.lower_dt > *r.beta + kSlack) fail("lower_dt > beta");
  }
  return r;
}

nlohmann::json to_json(const BoundsReport& r) {
  using nlohmann::json;
  json j;
  j["n"] = r.n;
  j["beta"] = r.beta ? json(*r.beta) : json(nullptr);
  j["beta_witness"] = r.beta_witness;
  j["zeta"] = r.zeta ? json(*r.zeta) : json(nullptr);
  j["zeta_status"] = r.zeta_status;
  j["zeta_k_max"] = r.zeta_k_max;
  j["out_degeneracy"] = r.out_degeneracy;
  j["spread_M"] = r.spread_infinite ? json("inf") : json(r.spread);
  j["lower_dt"] = r.lower_dt;
  j["c"] = r.c;
  j["upper_lp"] = std::isinf(r.upper_lp) ? json("inf") : json(r.upper_lp);
  j["upper_sc"] = r.upper_sc ? json(*r.upper_sc) : json(nullptr);
  j["consistent"] = r.consistent;
  j["violations"] = r.violations;
  return j;
}

}  // namespace locgame
