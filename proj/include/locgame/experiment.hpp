#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "locgame/digraph.hpp"
#include "locgame/distance.hpp"

namespace locgame {

struct ExperimentConfig {
  std::vector<int> sizes{30};
  double p = 0.5;
  int trials = 10;
  std::uint64_t seed = 1;
  double epsilon = -1.0;  // negative: 1/sqrt(ln n) per size
};

struct ExperimentRow {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  int trial = 0;
  Distance diameter;
  int beta_greedy = 0;
  double k_bound = 0.0;
  int s_min = 0;
  int s_max = 0;
  double e4c_ratio = 0.0;
};

/// Throws Error(invalid_argument) unless trials >= 1, 0 <= p <= 1 and every
/// size is at least 2.
void validate(const ExperimentConfig& config);

/// 1 / sqrt(ln n).
double default_epsilon(int n);

/// (2 + eps) ln n / ln(1/rho) with rho = p^2 + (1-p)^2; +inf when rho = 1.
double k_bound(int n, double p, double epsilon);

/// Trial t of size n uses T(n, p) drawn with seed + t. Rows are ordered by
/// size, then trial.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

ExperimentRow measure_trial(const Digraph& t, int n, double p, std::uint64_t seed, int trial, double epsilon);

inline constexpr const char* kExperimentHeader = "n,p,seed,trial,diameter,beta_greedy,k_bound,s_min,s_max,e4c_ratio";

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
std::vector<ExperimentRow> read_csv(std::istream& in);

/// Fraction of pairs x < y with
/// 2(1-eps) p(1-p)(n-2) <= s(x, y) <= (1+eps)(p^2+(1-p)^2)(n-2).
double sameness_bracket_fraction(const Digraph& t, double p, double epsilon);

}  // namespace locgame
