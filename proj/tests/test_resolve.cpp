#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "locgame/error.hpp"
#include "locgame/families.hpp"
#include "locgame/hypergraph.hpp"
#include "locgame/resolve.hpp"
#include "locgame/tournament.hpp"
#include "oracles.hpp"

using namespace locgame;

namespace {

Digraph cycle3() { return rotation_tournament(1); }

// Directed path 0 -> 1 -> 2 -> 3 plus a source 4 pointing at 1.
Digraph path_with_source() { return Digraph(5, {{0, 1}, {1, 2}, {2, 3}, {4, 1}}); }

Hypergraph make(int n, std::vector<std::vector<Vertex>> edges) {
  Hypergraph h;
  h.n = n;
  h.edges = std::move(edges);
  return h;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::parse;
}

}  // namespace

TEST_CASE("resolving sets") {
  CHECK(is_resolving(cycle3(), {0}));
  CHECK_FALSE(is_resolving(transitive_tournament(3), {0}));
  CHECK(is_resolving(directed_path(4), {0}));
  CHECK(is_resolving(transitive_tournament(3), {0, 1, 2}));
}

TEST_CASE("exact metric dimension") {
  CHECK(metric_dimension_exact(directed_path(4)).beta == 1);
  CHECK(metric_dimension_exact(cycle3()).beta == 1);
  const auto t5 = metric_dimension_exact(rotation_tournament(2));
  CHECK(t5.beta == oracle::metric_dimension(rotation_tournament(2)));
  CHECK(t5.beta <= 2);
  CHECK(t5.witness.resolved);
  CHECK(is_resolving(rotation_tournament(2), t5.witness.vertices));

  const auto single = metric_dimension_exact(Digraph(1));
  CHECK(single.beta == 1);
  CHECK(single.witness.vertices == std::vector<Vertex>{0});
}

TEST_CASE("metric dimension witness is the lexicographically least optimum") {
  // d(1, .) = (inf, 0, 1) separates everything in T_3.
  const auto t3 = metric_dimension_exact(transitive_tournament(3));
  CHECK(t3.beta == 1);
  CHECK(t3.witness.vertices == std::vector<Vertex>{1});

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Digraph g = random_digraph(3 + static_cast<int>(seed % 5), 0.7, seed);
    const auto md = metric_dimension_exact(g);
    const auto d = oracle::floyd_warshall(g);
    const int n = g.order();
    // First resolving set of size beta in lexicographic order of sorted lists.
    std::vector<std::vector<Vertex>> optimal;
    for (std::uint32_t w = 1; w < (1u << n); ++w) {
      if (__builtin_popcount(w) != md.beta || !oracle::resolves(d, w)) continue;
      std::vector<Vertex> set;
      for (int v = 0; v < n; ++v)
        if (w >> v & 1) set.push_back(v);
      optimal.push_back(set);
    }
    REQUIRE_FALSE(optimal.empty());
    CHECK(md.witness.vertices == *std::min_element(optimal.begin(), optimal.end()));
  }
}

TEST_CASE("metric dimension agrees with the exhaustive oracle") {
  static const double densities[] = {0.3, 0.6, 0.9};
  for (int i = 0; i < 200; ++i) {
    const Digraph g = random_digraph(1 + i % 5, densities[i % 3], 3000 + static_cast<std::uint64_t>(i));
    CHECK(metric_dimension_exact(g).beta == oracle::metric_dimension(g));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Digraph g = random_digraph(8, 0.6, seed);
    CHECK(metric_dimension_exact(g).beta == oracle::metric_dimension(g));
  }
}

TEST_CASE("metric dimension one classifier") {
  CHECK(metric_dim_one_classifier(directed_path(5)) == MetricDimOneCase::case1);
  CHECK(metric_dim_one_classifier(path_with_source()) == MetricDimOneCase::case2);
  CHECK(metric_dim_one_classifier(transitive_tournament(3)) == MetricDimOneCase::case2);
  CHECK(metric_dim_one_classifier(rotation_tournament(2)) == MetricDimOneCase::no);
  // Hamiltonian path 0, 1, 2, 3 with the forward skip arc (0, 2) and a return arc.
  const Digraph skip(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {3, 1}});
  CHECK((metric_dim_one_classifier(skip) != MetricDimOneCase::no) == (oracle::metric_dimension(skip) == 1));
  CHECK(std::string(to_string(MetricDimOneCase::case2)) == "case2");
}

TEST_CASE("distinguisher hypergraph") {
  const auto h = distinguisher_hypergraph(cycle3());
  REQUIRE(h.edges.size() == 3);
  for (const auto& e : h.edges) CHECK(e == std::vector<Vertex>{0, 1, 2});
  CHECK(h.labels.size() == 3);
  CHECK(c_parameter(cycle3()) == doctest::Approx(1.0));

  const Digraph t5 = rotation_tournament(2);
  const auto h5 = distinguisher_hypergraph(t5);
  CHECK(h5.edges.size() == 10);
  for (const auto& e : h5.edges) CHECK_FALSE(e.empty());
}

TEST_CASE("distinguisher hypergraph matches distances under both conventions") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Digraph g = random_digraph(2 + static_cast<int>(seed % 6), 0.5, seed);
    const auto d = oracle::floyd_warshall(g);
    const int n = g.order();
    for (auto conv : {DistinguishConvention::probe, DistinguishConvention::pair_to_witness}) {
      const auto h = distinguisher_hypergraph(g, conv);
      REQUIRE(h.edges.size() == static_cast<std::size_t>(n * (n - 1) / 2));
      for (std::size_t e = 0; e < h.edges.size(); ++e) {
        const auto [x, y] = h.labels[e];
        std::vector<Vertex> expected;
        for (int w = 0; w < n; ++w) {
          const bool differ = conv == DistinguishConvention::probe ? d[w][x] != d[w][y] : d[x][w] != d[y][w];
          if (differ) expected.push_back(w);
        }
        CHECK(h.edges[e] == expected);
      }
    }
  }
}

TEST_CASE("c parameter of P_7") {
  const Digraph p7 = paley_tournament(7);
  const auto d = oracle::floyd_warshall(p7);
  std::size_t smallest = 7;
  for (int x = 0; x < 7; ++x)
    for (int y = x + 1; y < 7; ++y) {
      std::size_t count = 0;
      for (int w = 0; w < 7; ++w) count += d[w][x] != d[w][y];
      smallest = std::min(smallest, count);
    }
  CHECK(c_parameter(p7) == doctest::Approx(static_cast<double>(smallest) / 7.0));
  CHECK(lp_upper_bound(p7) >= metric_dimension_exact(p7).beta);
}

TEST_CASE("fractional vertex cover") {
  auto lp = fractional_vertex_cover(make(3, {{0, 1, 2}}));
  CHECK(lp.tau_star == doctest::Approx(1.0).epsilon(1e-9));

  lp = fractional_vertex_cover(make(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(lp.tau_star == doctest::Approx(1.5).epsilon(1e-9));
  for (double x : lp.weight) CHECK(x == doctest::Approx(0.5).epsilon(1e-9));

  lp = fractional_vertex_cover(distinguisher_hypergraph(cycle3()));
  CHECK(lp.tau_star == doctest::Approx(1.0).epsilon(1e-9));

  lp = fractional_vertex_cover(make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK(lp.tau_star == doctest::Approx(2.0).epsilon(1e-9));

  CHECK(kind_of([] { fractional_vertex_cover(make(2, {{0}, {}})); }) == ErrorKind::empty_edge);
  CHECK(kind_of([] { greedy_vertex_cover(make(2, {{}})); }) == ErrorKind::empty_edge);
}

TEST_CASE("greedy vertex cover") {
  CHECK(greedy_vertex_cover(make(3, {{0, 1, 2}})).size() == 1);
  const auto tri = make(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(greedy_vertex_cover(tri).size() == 2);
  CHECK(oracle::min_vertex_cover(3, tri.edges) == 2);
  CHECK(lovasz_bound(tri, 1.5) == doctest::Approx((1 + std::log(2.0)) * 1.5));
}

TEST_CASE("LP and greedy properties on random hypergraphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Hypergraph h;
    h.n = n;
    const int m = 1 + static_cast<int>(rng() % 10);
    for (int e = 0; e < m; ++e) {
      std::vector<Vertex> edge;
      for (Vertex v = 0; v < n; ++v)
        if (rng() % 3 == 0) edge.push_back(v);
      if (edge.empty()) edge.push_back(static_cast<Vertex>(rng() % static_cast<unsigned>(n)));
      h.edges.push_back(edge);
    }
    const auto lp = fractional_vertex_cover(h);
    double total = 0;
    for (double x : lp.weight) {
      CHECK(x >= -1e-9);
      CHECK(x <= 1 + 1e-9);
      total += x;
    }
    CHECK(total == doctest::Approx(lp.tau_star).epsilon(1e-9));
    for (const auto& e : h.edges) {
      double covered = 0;
      for (Vertex v : e) covered += lp.weight[static_cast<std::size_t>(v)];
      CHECK(covered >= 1 - 1e-9);
    }
    const auto greedy = greedy_vertex_cover(h);
    const int tau = oracle::min_vertex_cover(n, h.edges);
    CHECK(lp.tau_star <= tau + 1e-9);
    CHECK(tau <= static_cast<int>(greedy.size()));
    CHECK(static_cast<double>(greedy.size()) <= lovasz_bound(h, lp.tau_star) + 1e-9);
    CHECK(static_cast<int>(greedy.size()) <= n);
  }
}

TEST_CASE("greedy distinguisher cover resolves and the LP bound holds") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Digraph g = random_digraph(2 + static_cast<int>(seed % 7), 0.6, seed);
    const auto h = distinguisher_hypergraph(g);
    const auto cover = greedy_vertex_cover(h);
    CHECK(is_resolving(g, cover));
    const double c = c_parameter(g);
    CHECK(c > 0);
    CHECK(metric_dimension_exact(g).beta <= lp_upper_bound(g) + 1e-9);
  }
  CHECK(lp_upper_bound(cycle3()) == doctest::Approx(1 + 2 * std::log(3.0)));
}

TEST_CASE("sameness and neighbourhood profiles") {
  const Digraph p7 = paley_tournament(7);
  for (int x = 0; x < 7; ++x)
    for (int y = x + 1; y < 7; ++y) {
      CHECK(sameness(p7, x, y).s() == 2);
      CHECK(neighborhood_profile(p7, x, y).pp == 1);
    }
  CHECK(sameness(cycle3(), 0, 1).s() == oracle::sameness(cycle3(), 0, 1));
  CHECK(sameness(cycle3(), 0, 1).s() == 0);
  CHECK(sameness(rotation_tournament(2), 0, 1).s() == oracle::sameness(rotation_tournament(2), 0, 1));
  CHECK(neighborhood_profile(cycle3(), 0, 1).total() == 1);

  const Digraph t = random_tournament(20, 0.5, 9);
  for (int x = 0; x < 20; ++x)
    for (int y = x + 1; y < 20; ++y) {
      const auto s = sameness(t, x, y);
      CHECK(s.s() + s.s_bar() == 18);
      CHECK(s.s() == oracle::sameness(t, x, y));
      CHECK(neighborhood_profile(t, x, y).total() == 18);
    }
}

TEST_CASE("doubly regular tournaments") {
  CHECK(doubly_regular_check(paley_tournament(7)));
  CHECK_FALSE(doubly_regular_check(rotation_tournament(2)));
  CHECK(doubly_regular_check(cycle3()));
  CHECK_FALSE(doubly_regular_check(rotation_tournament(3)));
}

TEST_CASE("E4C counts") {
  CHECK(e4c_count(cycle3()) == 0);
  CHECK(e4c_count(paley_tournament(7)) == oracle::e4c(paley_tournament(7)));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Digraph t = random_tournament(4 + static_cast<int>(seed % 6), 0.5, seed);
    CHECK(e4c_count(t) == oracle::e4c(t));
  }
  CHECK(e4c_count(transitive_tournament(6)) == oracle::e4c(transitive_tournament(6)));
  CHECK(e4c_ratio(paley_tournament(7)) ==
        doctest::Approx(static_cast<double>(oracle::e4c(paley_tournament(7))) / (7.0 * 7 * 7 * 7 / 2)));
}

TEST_CASE("E4C count of a random tournament is near its expectation over distinct 4-tuples") {
  const int n = 30;
  const Digraph t = random_tournament(n, 0.5, 1);
  const double distinct = static_cast<double>(n) * (n - 1) * (n - 2) * (n - 3) / 2;
  const double relative = static_cast<double>(e4c_count(t)) / distinct;
  CHECK(relative >= 0.9);
  CHECK(relative <= 1.1);
}

TEST_CASE("quasirandom deviation") {
  CHECK(quasirandom_deviation(paley_tournament(7)) == doctest::Approx(63.0));
  CHECK(quasirandom_deviation(cycle3()) == doctest::Approx(9.0));
  CHECK(quasirandom_deviation(random_tournament(12, 0.5, 4)) >= 0.0);
}

TEST_CASE("tournament statistics reject other digraphs") {
  CHECK(kind_of([] { e4c_count(directed_path(4)); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { sameness(directed_path(4), 0, 1); }) == ErrorKind::invalid_argument);
}
