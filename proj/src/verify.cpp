#include "locgame/verify.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "locgame/error.hpp"
#include "locgame/experiment.hpp"
#include "locgame/families.hpp"
#include "locgame/hypergraph.hpp"
#include "locgame/report.hpp"
#include "locgame/resolve.hpp"
#include "locgame/strategies.hpp"
#include "locgame/structure.hpp"
#include "locgame/tournament.hpp"

namespace locgame {
namespace {

constexpr double kTolerance = 1e-9;

struct Instance {
  std::string name;
  Digraph g;
};

std::string describe(const Digraph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " arcs=[";
  bool first = true;
  for (const Arc& a : g.arcs()) {
    out << (first ? "" : ",") << '(' << a.tail << ',' << a.head << ')';
    first = false;
  }
  out << ']';
  return out.str();
}

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

// Exact zeta is the expensive part of several checks; keep one value per
// instance name for the lifetime of the process.
int exact_zeta(const Instance& inst) {
  static std::map<std::string, int> cache;
  if (auto it = cache.find(inst.name); it != cache.end()) return it->second;
  const auto z = localization_number_exact(inst.g, inst.g.order());
  const int value = *z.zeta;
  cache.emplace(inst.name, value);
  return value;
}

struct ExactCase {
  Instance inst;
  int expected;
};

std::vector<ExactCase> rotation_cases() {
  std::vector<ExactCase> out;
  for (int m = 1; m <= 3; ++m) out.push_back({{cat("T_", 2 * m + 1), rotation_tournament(m)}, m / 2 + 1});
  return out;
}

std::vector<ExactCase> d3_cases() {
  return {{{"D_3(1)", tripartite_cycle(1)}, 1}, {{"D_3(2)", tripartite_cycle(2)}, 2}};
}

std::vector<ExactCase> blowup_cases() { return {{{"blowup(C_3,3)", blowup(rotation_tournament(1), 3)}, 3}}; }

std::vector<ExactCase> sc_tight_cases() { return {{{"sc_tight(3,1)", sc_tight(3, 1)}, 3}}; }

std::vector<Instance> random_dags() {
  std::vector<Instance> out;
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + i % 8;
    const double density = 0.25 * (1 + i % 3);
    out.push_back({cat("dag#", i), random_dag(n, density, 100 + static_cast<std::uint64_t>(i))});
  }
  return out;
}

std::vector<Instance> classifier_sample() {
  static const double densities[] = {0.4, 0.6, 0.8, 1.0};
  std::vector<Instance> out;
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 5;
    out.push_back({cat("small#", i), random_digraph(n, densities[i % 4], 500 + static_cast<std::uint64_t>(i))});
  }
  return out;
}

std::vector<Instance> layered_sample() {
  std::vector<Instance> out;
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + i % 8;
    const int max_component = 1 + i % 6;
    out.push_back({cat("layered#", i), random_layered_digraph(n, max_component, 0.6, 900 + static_cast<std::uint64_t>(i))});
  }
  return out;
}

std::vector<Instance> exact_instances() {
  std::vector<Instance> out;
  for (const auto& group : {rotation_cases(), d3_cases(), blowup_cases(), sc_tight_cases()}) {
    for (const auto& c : group) out.push_back(c.inst);
  }
  return out;
}

// Instances of the first three criteria: every one of them is solved exactly.
std::vector<Instance> solved_instances() {
  auto out = exact_instances();
  for (auto& i : random_dags()) out.push_back(std::move(i));
  for (auto& i : classifier_sample()) out.push_back(std::move(i));
  return out;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CheckResult run_exact(const std::vector<ExactCase>& cases) {
  CheckResult r;
  for (const auto& c : cases) {
    Stopwatch clock;
    const int z = exact_zeta(c.inst);
    const std::string line = cat(c.inst.name, ": zeta=", z, " expected=", c.expected, " (", clock.seconds(), "s)");
    if (z == c.expected) {
      r.details.push_back(line);
    } else {
      r.failures.push_back(line);
    }
  }
  return r;
}

CheckResult check_dag() {
  CheckResult r;
  int ones = 0;
  for (const auto& inst : random_dags()) {
    const int z = exact_zeta(inst);
    if (z == 1) {
      ++ones;
    } else {
      r.failures.push_back(cat(inst.name, ": zeta=", z, " on ", describe(inst.g)));
    }
  }
  r.details.push_back(cat(ones, "/50 acyclic digraphs have zeta=1"));
  return r;
}

CheckResult check_classifier() {
  CheckResult r;
  int agree = 0;
  for (const auto& inst : classifier_sample()) {
    const auto verdict = metric_dim_one_classifier(inst.g);
    const auto md = metric_dimension_exact(inst.g);
    const bool says_one = verdict != MetricDimOneCase::no;
    if (says_one == (md.beta == 1)) {
      ++agree;
      continue;
    }
    std::ostringstream w;
    for (Vertex v : md.witness.vertices) w << v << ' ';
    r.failures.push_back(cat(inst.name, ": classifier=", to_string(verdict), " beta=", md.beta, " witness={ ", w.str(),
                             "} ", describe(inst.g)));
  }
  r.details.push_back(cat(agree, "/200 digraphs agree"));
  return r;
}

CheckResult check_bound_chain() {
  CheckResult r;
  int checked = 0;
  for (const auto& inst : solved_instances()) {
    const Digraph& g = inst.g;
    const int n = g.order();
    const int z = exact_zeta(inst);
    const int beta = metric_dimension_exact(g).beta;
    const Spread m = spread_M(g);
    const double lower = degeneracy_lower_bound(g);
    const double c = c_parameter(g);
    const double upper = lp_upper_bound(g);
    auto bad = [&](const std::string& what) {
      r.failures.push_back(cat(inst.name, ": ", what, " (zeta=", z, " beta=", beta, " lower=", lower, " upper_lp=",
                               upper, " n=", n, ")"));
    };
    if (!m.infinite && lower > z + kTolerance) bad("lower bound exceeds zeta");
    if (z > beta) bad("zeta exceeds beta");
    if (beta > n) bad("beta exceeds n");
    if (c > 0 && beta > upper + kTolerance) bad("beta exceeds lp upper bound");
    ++checked;
  }
  r.details.push_back(cat(checked, " instances checked"));
  return r;
}

CheckResult check_sc_bound() {
  CheckResult r;
  int checked = 0;
  int tight = 0;
  for (const auto& inst : layered_sample()) {
    const int z = exact_zeta(inst);
    const auto bound = strong_component_upper_bound(inst.g);
    if (!bound) {
      r.failures.push_back(cat(inst.name, ": component outside solver budget"));
      continue;
    }
    if (z > *bound) r.failures.push_back(cat(inst.name, ": zeta=", z, " > ", *bound, " on ", describe(inst.g)));
    if (z == *bound) ++tight;
    ++checked;
  }
  r.details.push_back(cat(checked, " digraphs checked, bound attained on ", tight));
  return r;
}

struct StrategyCase {
  std::string label;
  Digraph g;
  std::function<std::unique_ptr<CopStrategy>(const Digraph&)> make;
  int round_bound;
  bool expect_capture = true;
  int robber_cops = 0;  // cops the robber plans against; 0 means the strategy budget
};

DagDecomposition per_vertex_bags(const Digraph& g) {
  DagDecomposition dd{g, {}};
  for (Vertex v = 0; v < g.order(); ++v) dd.bags.push_back({v});
  return dd;
}

PathDecomposition singleton_bags(const Digraph& g) {
  PathDecomposition pd;
  for (Vertex v : topological_sort(g)) pd.bags.push_back({v});
  return pd;
}

Digraph joined_cycles() {
  return Digraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

std::vector<StrategyCase> strategy_cases() {
  std::vector<StrategyCase> out;
  const Digraph t4 = transitive_tournament(4);
  const Digraph p5 = directed_path(5);
  const Digraph p6 = directed_path(6);
  const Digraph c3 = rotation_tournament(1);

  out.push_back({"dag_sweep T_4", t4, [](const Digraph& g) { return dag_sweep(g); }, 4});
  out.push_back({"dag_sweep P_6", p6, [](const Digraph& g) { return dag_sweep(g); }, 6});
  out.push_back({"dag_sweep K_1", Digraph(1, {}), [](const Digraph& g) { return dag_sweep(g); }, 1});

  out.push_back({"path_sweep T_4", t4, [](const Digraph& g) { return path_sweep(g, singleton_bags(g)); }, 4});
  out.push_back({"path_sweep P_5", p5, [](const Digraph& g) { return path_sweep(g, singleton_bags(g)); }, 5});
  out.push_back({"path_sweep C_3", c3, [](const Digraph& g) { return path_sweep(g, PathDecomposition{{{0, 1}, {0, 2}}}); },
                 2});

  out.push_back(
      {"dag_decomp_sweep P_5", p5, [](const Digraph& g) { return dag_decomp_sweep(g, per_vertex_bags(g)); }, 5});
  out.push_back({"dag_decomp_sweep C_3", c3,
                 [](const Digraph& g) { return dag_decomp_sweep(g, DagDecomposition{Digraph(1, {}), {{0, 1, 2}}}); },
                 1});
  out.push_back({"dag_decomp_sweep sc_tight(1,1)", sc_tight(1, 1),
                 [](const Digraph& g) {
                   return dag_decomp_sweep(g, DagDecomposition{Digraph(2, {{0, 1}}), {{0, 1, 2}, {3, 4, 5}}});
                 },
                 2});

  const Digraph tight = sc_tight(3, 1);
  out.push_back({"sc_composite sc_tight(3,1)", tight, [](const Digraph& g) { return sc_composite(g); }, tight.order()});
  out.push_back({"sc_composite T_4", t4, [](const Digraph& g) { return sc_composite(g); }, 4});
  out.push_back({"sc_composite joined 3-cycles", joined_cycles(), [](const Digraph& g) { return sc_composite(g); }, 6});

  for (int m = 2; m <= 4; ++m) {
    out.push_back({cat("rotation T_", 2 * m + 1), rotation_tournament(m),
                   [m](const Digraph&) { return rotation_strategy(m); }, rotation_round_bound(m)});
  }
  for (int m = 2; m <= 4; ++m) {
    const int n = 2 * m + 1;
    out.push_back({cat("rotation T_", n, " with ", m / 2, " cops"), rotation_tournament(m),
                   [m](const Digraph&) { return rotation_strategy(m, m / 2); }, 5 * n, false});
  }
  return out;
}

CheckResult check_strategies() {
  CheckResult r;
  for (auto& c : strategy_cases()) {
    auto cops = c.make(c.g);
    const int k = c.robber_cops > 0 ? c.robber_cops : cops->budget();
    OptimalRobber robber(c.g, k);
    const auto t = play(c.g, *cops, robber, c.round_bound);
    const std::string line = cat(c.label, " (", cops->budget(), " cops): ",
                                 t.outcome.captured ? cat("captured in round ", t.outcome.round)
                                                    : cat("evaded ", t.outcome.round, " rounds"),
                                 ", bound ", c.round_bound);
    if (t.outcome.captured == c.expect_capture) {
      r.details.push_back(line);
    } else {
      r.failures.push_back(line);
    }
    if (cops->name() == "sc_composite") {
      const auto phases = sc_composite_phases(c.g, t);
      for (std::size_t i = 1; i < phases.size(); ++i) {
        if (phases[i] < phases[i - 1]) r.failures.push_back(cat(c.label, ": returned to a cleared component"));
      }
    }
  }
  return r;
}

CheckResult check_lovasz() {
  CheckResult r;
  std::vector<Instance> pool = solved_instances();
  for (auto& i : layered_sample()) pool.push_back(std::move(i));
  for (int q : {7, 11, 19}) pool.push_back({cat("P_", q), paley_tournament(q)});
  int checked = 0;
  double worst_ratio = 0.0;
  for (const auto& inst : pool) {
    const auto dm = all_pairs_distances(inst.g);
    const auto h = distinguisher_hypergraph(dm);
    if (h.edges.empty()) continue;
    const auto lp = fractional_vertex_cover(h, kTolerance);
    const auto greedy = greedy_vertex_cover(h);
    const double bound = lovasz_bound(h, lp.tau_star);
    const double size = static_cast<double>(greedy.size());
    if (size > bound + kTolerance) {
      r.failures.push_back(cat(inst.name, ": greedy=", greedy.size(), " > (1+ln d)tau*=", bound));
    }
    if (lp.tau_star > size + kTolerance) {
      r.failures.push_back(cat(inst.name, ": tau*=", lp.tau_star, " exceeds greedy=", greedy.size()));
    }
    if (!is_resolving(dm, greedy)) r.failures.push_back(cat(inst.name, ": greedy cover does not resolve"));
    worst_ratio = std::max(worst_ratio, size / bound);
    ++checked;
  }
  r.details.push_back(cat(checked, " hypergraphs checked, max greedy/bound ratio ", worst_ratio));
  return r;
}

CheckResult check_paley() {
  CheckResult r;
  for (int q : {7, 11, 19}) {
    const Digraph p = paley_tournament(q);
    const std::string name = cat("P_", q);
    if (!doubly_regular_check(p)) r.failures.push_back(name + ": not doubly regular");
    const auto range = sameness_range(p);
    if (range.min != (q - 3) / 2 || range.max != (q - 3) / 2) {
      r.failures.push_back(cat(name, ": s ranges over [", range.min, ", ", range.max, "], expected ", (q - 3) / 2));
    }
    const Distance diam = diameter(p);
    if (diam != Distance(2)) r.failures.push_back(cat(name, ": diameter ", diam.to_string()));
    std::string line = cat(name, ": doubly regular, s=", (q - 3) / 2, ", diameter ", diam.to_string());
    if (q <= 11) {
      const int beta = metric_dimension_exact(p).beta;
      line += cat(", beta=", beta);
      try {
        const auto z = localization_number_exact(p, beta);
        if (z.exceeds()) {
          r.failures.push_back(cat(name, ": zeta exceeds beta=", beta));
        } else {
          line += cat(", zeta=", *z.zeta);
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::resource) throw;
        line += ", zeta outside solver budget";
      }
    }
    r.details.push_back(line);
  }
  return r;
}

CheckResult check_random() {
  CheckResult r;
  ExperimentConfig config;
  config.sizes = {30, 50};
  config.p = 0.5;
  config.trials = 10;
  config.seed = 1;
  const auto rows = run_experiment(config);

  std::ostringstream first;
  std::ostringstream second;
  write_csv(first, rows);
  write_csv(second, run_experiment(config));
  if (first.str() != second.str()) r.failures.push_back("experiment CSV differs between identical runs");
  std::istringstream in(first.str());
  std::ostringstream again;
  write_csv(again, read_csv(in));
  if (again.str() != first.str()) r.failures.push_back("experiment CSV does not round-trip");

  int within_k = 0;
  for (const auto& row : rows) {
    const std::string tag = cat("n=", row.n, " trial ", row.trial);
    if (row.diameter != Distance(2)) r.soft_failures.push_back(cat(tag, ": diameter ", row.diameter.to_string()));
    if (row.e4c_ratio < 0.8 || row.e4c_ratio > 1.2) {
      r.soft_failures.push_back(cat(tag, ": e4c ratio ", row.e4c_ratio, " outside [0.8, 1.2]"));
    }
    const Digraph t = random_tournament(row.n, config.p, config.seed + static_cast<std::uint64_t>(row.trial));
    const double inside = sameness_bracket_fraction(t, config.p, default_epsilon(row.n));
    if (inside < 0.95) r.soft_failures.push_back(cat(tag, ": ", inside * 100, "% of pairs inside the sameness bracket"));
    if (row.n == 50 && row.beta_greedy <= row.k_bound) ++within_k;
  }
  if (within_k < 9) r.soft_failures.push_back(cat("beta_greedy <= k_bound on only ", within_k, "/10 rows at n=50"));
  r.details.push_back(cat(rows.size(), " rows, deterministic; beta_greedy <= k_bound on ", within_k, "/10 rows at n=50"));
  return r;
}

}  // namespace

const std::vector<Check>& verification_checks() {
  static const std::vector<Check> checks = {
      {"rotation", 1, "zeta(T_{2m+1}) = floor(m/2)+1 for m = 1, 2, 3", [] { return run_exact(rotation_cases()); }},
      {"d3", 1, "zeta(D_3(i)) = i for i = 1, 2", [] { return run_exact(d3_cases()); }},
      {"blowup", 1, "zeta of the 3-fold blow-up of the 3-cycle is 3", [] { return run_exact(blowup_cases()); }},
      {"sc_tight", 1, "zeta(sc_tight(3,1)) = 3", [] { return run_exact(sc_tight_cases()); }},
      {"dag", 2, "zeta = 1 on 50 random acyclic digraphs with n <= 8", check_dag},
      {"classifier", 3, "metric-dimension-one classifier matches exact beta on 200 digraphs with n <= 5",
       check_classifier},
      {"bound_chain", 4, "log_M(k+1) <= zeta <= beta <= min(lp bound, n) on every solved instance", check_bound_chain},
      {"sc_bound", 5, "zeta <= max zeta(G_i) + Delta^+(SC) on 100 random digraphs", check_sc_bound},
      {"strategies", 6, "strategies capture within their round bounds; rotation with one cop fewer never does",
       check_strategies},
      {"lovasz", 7, "greedy cover <= (1+ln d) tau* and resolves, on all instance hypergraphs", check_lovasz},
      {"paley", 8, "Paley tournaments: doubly regular, s = (q-3)/2, diameter 2, beta >= zeta", check_paley},
      {"random", 9, "T(n, 1/2) spot checks for n = 30, 50 and CSV determinism", check_random},
  };
  return checks;
}

const Check* find_check(std::string_view id) {
  for (const auto& c : verification_checks()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace locgame
