// Command-line front end: family generation, exact computations, theorem
// checks, game playback and random-tournament experiments.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "locgame/error.hpp"
#include "locgame/experiment.hpp"
#include "locgame/families.hpp"
#include "locgame/io.hpp"
#include "locgame/report.hpp"
#include "locgame/resolve.hpp"
#include "locgame/strategies.hpp"
#include "locgame/tournament.hpp"
#include "locgame/verify.hpp"

namespace {

using namespace locgame;
using nlohmann::json;

struct Options {
  std::string format = "edgelist";
  std::uint64_t seed = 1;
  int max_cops = 0;
  int max_rounds = 0;
  std::string out;
};

// Writes to --out when given, stdout otherwise.
void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw Error(ErrorKind::invalid_argument, "cannot write " + opt.out);
  file << text;
}

GraphFormat parse_format(const std::string& s) {
  if (s == "json") return GraphFormat::json;
  if (s == "edgelist") return GraphFormat::edgelist;
  throw Error(ErrorKind::invalid_argument, "unknown format " + s);
}

int arg_int(const std::vector<std::string>& args, std::size_t i, const std::string& family) {
  if (i >= args.size()) throw Error(ErrorKind::invalid_argument, family + ": missing argument " + std::to_string(i + 1));
  try {
    std::size_t used = 0;
    const int v = std::stoi(args[i], &used);
    if (used == args[i].size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::invalid_argument, family + ": expected an integer, got " + args[i]);
}

double arg_double(const std::vector<std::string>& args, std::size_t i, const std::string& family) {
  if (i >= args.size()) throw Error(ErrorKind::invalid_argument, family + ": missing argument " + std::to_string(i + 1));
  try {
    std::size_t used = 0;
    const double v = std::stod(args[i], &used);
    if (used == args[i].size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::invalid_argument, family + ": expected a number, got " + args[i]);
}

Digraph generate(const std::string& family, const std::vector<std::string>& args, std::uint64_t seed) {
  if (family == "rotation") return rotation_tournament(arg_int(args, 0, family));
  if (family == "paley") return paley_tournament(arg_int(args, 0, family));
  if (family == "tripartite") return tripartite_cycle(arg_int(args, 0, family));
  if (family == "blowup") return blowup(rotation_tournament(arg_int(args, 0, family)), arg_int(args, 1, family));
  if (family == "sc_tight") {
    const int m = arg_int(args, 0, family);
    const int delta = arg_int(args, 1, family);
    if (auto warning = sc_tight_warning(m, delta)) std::cerr << "warning: " << *warning << '\n';
    return sc_tight(m, delta);
  }
  if (family == "binary_source") return binary_source_extension(rotation_tournament(arg_int(args, 0, family)));
  if (family == "transitive") return transitive_tournament(arg_int(args, 0, family));
  if (family == "path") return directed_path(arg_int(args, 0, family));
  if (family == "random") return random_tournament(arg_int(args, 0, family), arg_double(args, 1, family), seed);
  if (family == "random_digraph") return random_digraph(arg_int(args, 0, family), arg_double(args, 1, family), seed);
  if (family == "random_dag") return random_dag(arg_int(args, 0, family), arg_double(args, 1, family), seed);
  throw Error(ErrorKind::invalid_argument, "unknown family " + family);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_gen(const Options& opt, const std::string& family, const std::vector<std::string>& args) {
  emit(opt, format_digraph(generate(family, args, opt.seed), parse_format(opt.format)));
  return 0;
}

int cmd_zeta(const Options& opt, const std::string& path) {
  const Digraph g = load_digraph(path);
  BoundsRequest req;
  req.beta = false;
  req.upper_sc = false;
  req.k_max = opt.max_cops;
  const auto r = compute_bounds(g, req);
  json j = {{"n", r.n}, {"zeta", r.zeta ? json(*r.zeta) : json(nullptr)}, {"k_max", r.zeta_k_max},
            {"status", r.zeta_status}};
  emit(opt, dump(j));
  return r.zeta_status == "exact" ? 0 : 1;
}

int cmd_beta(const Options& opt, const std::string& path) {
  const Digraph g = load_digraph(path);
  const auto md = metric_dimension_exact(g);
  json j = {{"n", g.order()},
            {"beta", md.beta},
            {"witness", md.witness.vertices},
            {"classifier", to_string(metric_dim_one_classifier(g))}};
  emit(opt, dump(j));
  return 0;
}

int cmd_bounds(const Options& opt, const std::string& path) {
  BoundsRequest req;
  req.k_max = opt.max_cops;
  const auto r = compute_bounds(load_digraph(path), req);
  emit(opt, dump(to_json(r)));
  return r.consistent ? 0 : 1;
}

int cmd_stats(const Options& opt, const std::string& path) {
  const Digraph g = load_digraph(path);
  json j = {{"n", g.order()}, {"arcs", g.arc_count()}, {"tournament", g.is_tournament()}};
  const Distance d = diameter(g);
  j["diameter"] = d.is_infinite() ? json("inf") : json(d.hops());
  if (g.is_tournament() && g.order() >= 2) {
    const auto range = sameness_range(g);
    j["doubly_regular"] = doubly_regular_check(g);
    j["s_min"] = range.min;
    j["s_max"] = range.max;
    j["e4c_count"] = e4c_count(g);
    j["e4c_ratio"] = e4c_ratio(g);
    j["quasirandom_deviation"] = quasirandom_deviation(g);
  }
  emit(opt, dump(j));
  return 0;
}

int cmd_verify(const Options& opt, const std::string& id) {
  std::vector<const Check*> selected;
  if (id == "all") {
    for (const auto& c : verification_checks()) selected.push_back(&c);
  } else if (const Check* c = find_check(id)) {
    selected.push_back(c);
  } else {
    std::string known;
    for (const auto& c : verification_checks()) known += " " + c.id;
    throw Error(ErrorKind::invalid_argument, "unknown check " + id + "; known:" + known);
  }
  std::ostringstream out;
  bool all_pass = true;
  for (const Check* c : selected) {
    const auto r = c->run();
    all_pass = all_pass && r.pass();
    out << (r.pass() ? "PASS " : "FAIL ") << c->id << ": " << c->summary << '\n';
    for (const auto& d : r.details) out << "  " << d << '\n';
    for (const auto& f : r.failures) out << "  failure: " << f << '\n';
    for (const auto& f : r.soft_failures) out << "  note: " << f << '\n';
  }
  emit(opt, out.str());
  return all_pass ? 0 : 1;
}

int rotation_parameter(const Digraph& g) {
  const int n = g.order();
  if (n % 2 == 0 || n < 3 || !(g == rotation_tournament((n - 1) / 2))) {
    throw Error(ErrorKind::invalid_argument, "rotation strategy needs a rotation tournament T_{2m+1}");
  }
  return (n - 1) / 2;
}

std::unique_ptr<CopStrategy> make_strategy(const std::string& name, const Digraph& g, const std::string& decomposition,
                                           int max_cops) {
  if (name == "dag_sweep") return dag_sweep(g);
  if (name == "sc_composite") return sc_composite(g);
  if (name == "rotation") {
    const int m = rotation_parameter(g);
    return max_cops > 0 ? rotation_strategy(m, max_cops) : rotation_strategy(m);
  }
  if (name == "path_sweep" || name == "dag_decomp_sweep") {
    if (decomposition.empty()) throw Error(ErrorKind::invalid_argument, name + " needs --decomposition");
    json j;
    try {
      j = json::parse(read_file(decomposition));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::parse, e.what());
    }
    if (name == "path_sweep") return path_sweep(g, path_decomposition_from_json(j));
    return dag_decomp_sweep(g, dag_decomposition_from_json(j));
  }
  throw Error(ErrorKind::invalid_argument, "unknown strategy " + name);
}

int cmd_play(const Options& opt, const std::string& path, const std::string& strategy,
             const std::string& decomposition) {
  const Digraph g = load_digraph(path);
  auto cops = make_strategy(strategy, g, decomposition, opt.max_cops);
  OptimalRobber robber(g, cops->budget());
  const int rounds = opt.max_rounds > 0 ? opt.max_rounds : 5 * std::max(1, g.order());
  const auto t = play(g, *cops, robber, rounds);
  std::ostringstream out;
  write_transcript(out, t);
  emit(opt, out.str());
  return t.outcome.captured ? 0 : 1;
}

std::vector<int> parse_sizes(const std::string& spec) {
  std::vector<int> sizes;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ',');) {
    if (auto dash = part.find('-'); dash != std::string::npos) {
      const int lo = std::stoi(part.substr(0, dash));
      const int hi = std::stoi(part.substr(dash + 1));
      for (int n = lo; n <= hi; ++n) sizes.push_back(n);
    } else {
      sizes.push_back(std::stoi(part));
    }
  }
  return sizes;
}

int cmd_experiment(const Options& opt, const std::string& sizes, double p, int trials, double epsilon) {
  ExperimentConfig config;
  try {
    config.sizes = parse_sizes(sizes);
  } catch (const std::exception&) {
    throw Error(ErrorKind::invalid_argument, "--n expects sizes like 30,50 or 10-20");
  }
  config.p = p;
  config.trials = trials;
  config.seed = opt.seed;
  config.epsilon = epsilon;
  std::ostringstream out;
  write_csv(out, run_experiment(config));
  emit(opt, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Localization game toolkit for oriented digraphs"};
  app.require_subcommand(1);
  Options opt;
  auto common = [&opt](CLI::App* sub) {
    sub->add_option("--out", opt.out, "Write output to this path");
  };

  std::string family;
  std::vector<std::string> family_args;
  auto* gen = app.add_subcommand("gen", "Generate a digraph family member");
  gen->add_option("family", family,
                  "rotation m | paley q | tripartite i | blowup m k | sc_tight m delta | binary_source m | "
                  "transitive n | path n | random n p | random_digraph n density | random_dag n density")
      ->required();
  gen->add_option("args", family_args, "Family parameters");
  gen->add_option("--format", opt.format, "edgelist or json")->check(CLI::IsMember({"edgelist", "json"}));
  gen->add_option("--seed", opt.seed, "Seed for random families");
  common(gen);

  std::string graph;
  auto graph_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", graph, "Graph file (.json or edge list)")->required()->check(CLI::ExistingFile);
    common(sub);
    return sub;
  };
  auto* zeta = graph_cmd("zeta", "Exact localization number");
  zeta->add_option("--max-cops", opt.max_cops, "Largest k to try (default n)");
  auto* beta = graph_cmd("beta", "Exact metric dimension");
  auto* bounds = graph_cmd("bounds", "Bounds report; exits 0 iff consistent");
  bounds->add_option("--max-cops", opt.max_cops, "Largest k to try for zeta (default n)");
  auto* stats = graph_cmd("stats", "Diameter and tournament statistics");

  std::string check_id;
  auto* verify = app.add_subcommand("verify", "Run a verification check; exits 0 iff it passes");
  verify->add_option("check", check_id, "Check id or 'all'")->required();
  common(verify);

  std::string strategy;
  std::string decomposition;
  auto* play_cmd = graph_cmd("play", "Play a cop strategy against the optimal robber; exits 0 iff captured");
  play_cmd->add_option("--strategy", strategy, "Cop strategy")
      ->required()
      ->check(CLI::IsMember({"dag_sweep", "sc_composite", "path_sweep", "dag_decomp_sweep", "rotation"}));
  play_cmd->add_option("--decomposition", decomposition, "Decomposition JSON for the sweep strategies");
  play_cmd->add_option("--max-cops", opt.max_cops, "Cop count for the rotation strategy");
  play_cmd->add_option("--max-rounds", opt.max_rounds, "Round cap (default 5n)");

  std::string sizes = "30";
  double p = 0.5;
  int trials = 10;
  double epsilon = -1.0;
  auto* experiment = app.add_subcommand("experiment", "Random tournament statistics as CSV");
  experiment->add_option("--n", sizes, "Sizes, e.g. 30,50 or 10-20");
  experiment->add_option("--p", p, "Arc probability");
  experiment->add_option("--trials", trials, "Trials per size");
  experiment->add_option("--seed", opt.seed, "Base seed; trial t uses seed + t");
  experiment->add_option("--epsilon", epsilon, "Epsilon in k_bound (default 1/sqrt(ln n))");
  common(experiment);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(opt, family, family_args);
    if (*zeta) return cmd_zeta(opt, graph);
    if (*beta) return cmd_beta(opt, graph);
    if (*bounds) return cmd_bounds(opt, graph);
    if (*stats) return cmd_stats(opt, graph);
    if (*verify) return cmd_verify(opt, check_id);
    if (*play_cmd) return cmd_play(opt, graph, strategy, decomposition);
    if (*experiment) return cmd_experiment(opt, sizes, p, trials, epsilon);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return 2;
  }
  return 2;
}
