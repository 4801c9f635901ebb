#include "locgame/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "locgame/error.hpp"
#include "locgame/families.hpp"
#include "locgame/hypergraph.hpp"
#include "locgame/tournament.hpp"

namespace locgame {
namespace {

std::string fixed(double x) {
  if (std::isinf(x)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

double parse_double(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  return std::stod(s);
}

}  // namespace

void validate(const ExperimentConfig& config) {
  if (config.trials < 1) throw Error(ErrorKind::invalid_argument, "experiment needs at least one trial");
  if (!(config.p >= 0.0 && config.p <= 1.0)) throw Error(ErrorKind::invalid_argument, "p must lie in [0, 1]");
  if (config.sizes.empty()) throw Error(ErrorKind::invalid_argument, "experiment needs at least one size");
  for (int n : config.sizes) {
    if (n < 2) throw Error(ErrorKind::invalid_argument, "experiment sizes must be at least 2");
  }
}

double default_epsilon(int n) { return 1.0 / std::sqrt(std::log(static_cast<double>(n))); }

double k_bound(int n, double p, double epsilon) {
  const double rho = p * p + (1 - p) * (1 - p);
  if (rho >= 1.0) return std::numeric_limits<double>::infinity();
  return (2.0 + epsilon) * std::log(static_cast<double>(n)) / std::log(1.0 / rho);
}

ExperimentRow measure_trial(const Digraph& t, int n, double p, std::uint64_t seed, int trial, double epsilon) {
  ExperimentRow row;
  row.n = n;
  row.p = p;
  row.seed = seed;
  row.trial = trial;
  const auto dm = all_pairs_distances(t);
  row.diameter = diameter(dm);
  const auto h = distinguisher_hypergraph(dm);
  // Tournaments have no twin pairs, but T(n, 0/1) is transitive and may
  // still leave a pair undistinguished only if n < 2; guard anyway.
  row.beta_greedy = h.has_empty_edge() ? -1 : static_cast<int>(greedy_vertex_cover(h).size());
  row.k_bound = k_bound(n, p, epsilon);
  const auto range = sameness_range(t);
  row.s_min = range.min;
  row.s_max = range.max;
  row.e4c_ratio = e4c_ratio(t);
  return row;
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
  validate(config);
  std::vector<ExperimentRow> rows;
  for (int n : config.sizes) {
    const double eps = config.epsilon >= 0 ? config.epsilon : default_epsilon(n);
    for (int trial = 0; trial < config.trials; ++trial) {
      const auto t = random_tournament(n, config.p, config.seed + static_cast<std::uint64_t>(trial));
      rows.push_back(measure_trial(t, n, config.p, config.seed, trial, eps));
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << kExperimentHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << fixed(r.p) << ',' << r.seed << ',' << r.trial << ',' << r.diameter.to_string() << ','
        << r.beta_greedy << ',' << fixed(r.k_bound) << ',' << r.s_min << ',' << r.s_max << ','
        << fixed(r.e4c_ratio) << '\n';
  }
}

std::vector<ExperimentRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kExperimentHeader) {
    throw Error(ErrorKind::parse, "experiment CSV header mismatch");
  }
  std::vector<ExperimentRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 10) throw Error(ErrorKind::parse, "experiment CSV row needs 10 fields");
    ExperimentRow r;
    r.n = std::stoi(f[0]);
    r.p = parse_double(f[1]);
    r.seed = std::stoull(f[2]);
    r.trial = std::stoi(f[3]);
    r.diameter = f[4] == "inf" ? Distance::infinity() : Distance(static_cast<std::uint32_t>(std::stoul(f[4])));
    r.beta_greedy = std::stoi(f[5]);
    r.k_bound = parse_double(f[6]);
    r.s_min = std::stoi(f[7]);
    r.s_max = std::stoi(f[8]);
    r.e4c_ratio = parse_double(f[9]);
    rows.push_back(r);
  }
  return rows;
}

double sameness_bracket_fraction(const Digraph& t, double p, double epsilon) {
  const int n = t.order();
  const double rho = p * p + (1 - p) * (1 - p);
  const double lo = 2.0 * (1 - epsilon) * p * (1 - p) * (n - 2);
  const double hi = (1 + epsilon) * rho * (n - 2);
  long inside = 0;
  long pairs = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const int s = sameness(t, x, y).s();
      ++pairs;
      if (s >= lo && s <= hi) ++inside;
    }
  }
  return pairs == 0 ? 1.0 : static_cast<double>(inside) / static_cast<double>(pairs);
}

}  // namespace locgame
