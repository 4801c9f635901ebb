#include <doctest.h>

#include <algorithm>
#include <random>

#include "locgame/decomposition.hpp"
#include "locgame/distance.hpp"
#include "locgame/error.hpp"
#include "locgame/families.hpp"
#include "locgame/structure.hpp"
#include "oracles.hpp"

using namespace locgame;

namespace {

Digraph cycle3() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::parse;
}

}  // namespace

TEST_CASE("digraph construction enforces orientation") {
  CHECK(kind_of([] { Digraph(2, {{0, 0}}); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { Digraph(2, {{0, 1}, {1, 0}}); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { Digraph(2, {{0, 1}, {0, 1}}); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { Digraph(2, {{0, 2}}); }) == ErrorKind::invalid_argument);

  const Digraph g(4, {{2, 3}, {0, 1}, {0, 2}});
  CHECK(g.arc_count() == 3);
  CHECK(g.arcs().front() == Arc{0, 1});
  CHECK(g.out_degree(0) == 2);
  CHECK(g.in_degree(3) == 1);
  CHECK(g.is_source(0));
  CHECK(g.is_sink(1));
  CHECK(g.has_arc(2, 3));
  CHECK_FALSE(g.has_arc(3, 2));
  CHECK_FALSE(g.is_tournament());
  CHECK(transitive_tournament(4).is_tournament());
}

TEST_CASE("induced subgraph relabels in the given order") {
  const Digraph g = cycle3();
  const std::vector<Vertex> keep{2, 0};
  const Digraph h = g.induced(keep);
  CHECK(h.order() == 2);
  CHECK(h.arcs() == std::vector<Arc>{{0, 1}});
}

TEST_CASE("distance arithmetic and ordering") {
  const Distance inf = Distance::infinity();
  CHECK(inf == Distance::infinity());
  CHECK(Distance(7) < inf);
  CHECK((Distance(3) + Distance(4)) == Distance(7));
  CHECK((Distance(3) + inf).is_infinite());
  CHECK(inf.to_string() == "inf");
}

TEST_CASE("all-pairs distances") {
  const auto d = all_pairs_distances(cycle3());
  CHECK(d(0, 0) == Distance(0));
  CHECK(d(0, 1) == Distance(1));
  CHECK(d(0, 2) == Distance(2));

  const auto two = all_pairs_distances(Digraph(2, {{0, 1}}));
  CHECK(two(1, 0).is_infinite());

  const auto t5 = all_pairs_distances(rotation_tournament(2));
  CHECK(t5(0, 4) == Distance(2));
}

TEST_CASE("distances agree with Floyd-Warshall and satisfy the triangle inequality") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 1 + static_cast<int>(seed % 8);
    const Digraph g = random_digraph(n, 0.5, seed);
    const auto d = all_pairs_distances(g);
    const auto fw = oracle::floyd_warshall(g);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (fw[u][v] >= oracle::kInf) {
          CHECK(d(u, v).is_infinite());
        } else {
          CHECK(d(u, v) == Distance(static_cast<std::uint32_t>(fw[u][v])));
        }
        CHECK((d(u, v) == Distance(1)) == g.has_arc(u, v));
        for (int w = 0; w < n; ++w) CHECK(d(u, w) <= d(u, v) + d(v, w));
      }
  }
}

TEST_CASE("diameter") {
  CHECK(diameter(cycle3()) == Distance(2));
  CHECK(diameter(transitive_tournament(3)).is_infinite());
  CHECK(diameter(paley_tournament(7)) == Distance(2));
}

TEST_CASE("strong components") {
  CHECK(strong_components(cycle3()).count() == 1);

  const auto t4 = strong_components(transitive_tournament(4));
  CHECK(t4.count() == 4);
  CHECK(t4.condensation == transitive_tournament(4));
  CHECK(t4.max_out_degree() == 3);

  const auto tight = strong_components(sc_tight(3, 1));
  REQUIRE(tight.count() == 2);
  CHECK(tight.components[0].size() == 7);
  CHECK(tight.components[1].size() == 7);
  CHECK(tight.condensation.arcs() == std::vector<Arc>{{0, 1}});
}

TEST_CASE("condensation is acyclic with ids in topological order") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Digraph g = random_digraph(2 + static_cast<int>(seed % 9), 0.4, seed);
    const auto scc = strong_components(g);
    CHECK(is_acyclic(scc.condensation));
    for (const Arc& a : scc.condensation.arcs()) CHECK(a.tail < a.head);
    for (const Arc& a : g.arcs()) {
      CHECK(scc.component_of[a.tail] <= scc.component_of[a.head]);
    }
    std::size_t total = 0;
    for (const auto& c : scc.components) total += c.size();
    CHECK(total == static_cast<std::size_t>(g.order()));
  }
}

TEST_CASE("topological sort") {
  CHECK(topological_sort(transitive_tournament(3)) == std::vector<Vertex>{0, 1, 2});
  CHECK(kind_of([] { topological_sort(cycle3()); }) == ErrorKind::cyclic);

  const Digraph ext = binary_source_extension(tripartite_cycle(1));
  CHECK(kind_of([&] { topological_sort(ext); }) == ErrorKind::cyclic);
  const auto scc = strong_components(ext);
  const auto order = topological_sort(scc.condensation);
  // The two added sources are singleton components ahead of the 3-cycle.
  REQUIRE(order.size() == 3);
  CHECK(scc.components[static_cast<std::size_t>(order.back())].size() == 3);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Digraph g = random_dag(1 + static_cast<int>(seed % 8), 0.5, seed);
    const auto t = topological_sort(g);
    std::vector<int> pos(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < t.size(); ++i) pos[static_cast<std::size_t>(t[i])] = static_cast<int>(i);
    for (const Arc& a : g.arcs()) CHECK(pos[a.tail] < pos[a.head]);
  }
}

TEST_CASE("out-degeneracy") {
  CHECK(out_degeneracy(cycle3()) == 1);
  CHECK(out_degeneracy(transitive_tournament(5)) == 0);
  for (int m = 1; m <= 3; ++m) CHECK(out_degeneracy(rotation_tournament(m)) == m);
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 1 + static_cast<int>(seed % 7);
    const Digraph g = random_digraph(n, 0.6, seed);
    CHECK(out_degeneracy(g) == oracle::degeneracy(g));
    CHECK(out_degeneracy(random_dag(n, 0.6, seed)) == 0);
  }
}

TEST_CASE("spread M") {
  const Spread one = spread_M(Digraph(1));
  CHECK_FALSE(one.infinite);
  CHECK(one.value == 1);
  const Spread c3 = spread_M(cycle3());
  CHECK_FALSE(c3.infinite);
  CHECK(c3.value == 3);
  CHECK(spread_M(transitive_tournament(3)).infinite);
}

TEST_CASE("spread M matches the formula on random tournaments") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Digraph g = random_tournament(3 + static_cast<int>(seed % 6), 0.5, seed);
    const auto fw = oracle::floyd_warshall(g);
    const int n = g.order();
    bool infinite = false;
    long widest = 0;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        std::vector<long> ds{fw[u][v]};
        for (Vertex w : g.out_neighbors(v)) ds.push_back(fw[u][w]);
        const long hi = *std::max_element(ds.begin(), ds.end());
        const long lo = *std::min_element(ds.begin(), ds.end());
        if (hi >= oracle::kInf && lo < oracle::kInf) infinite = true;
        if (hi < oracle::kInf) widest = std::max(widest, hi - lo);
      }
    const Spread m = spread_M(g);
    CHECK(m.infinite == infinite);
    if (!infinite) CHECK(m.value == widest + 1);
  }
}

TEST_CASE("path decompositions") {
  const Digraph t4 = transitive_tournament(4);
  auto r = validate_path_decomposition(t4, {{{0}, {1}, {2}, {3}}});
  CHECK(r.valid);
  CHECK(r.width == 0);

  r = validate_path_decomposition(cycle3(), {{{0}, {1}, {2}}});
  CHECK_FALSE(r.valid);
  CHECK(r.violation.rfind("(iii)", 0) == 0);

  r = validate_path_decomposition(directed_path(3), {{{0, 1}, {1, 2}}});
  CHECK(r.valid);
  CHECK(r.width == 1);

  r = validate_path_decomposition(cycle3(), {{{0, 1}, {0, 2}}});
  CHECK(r.valid);
  CHECK(r.width == 1);

  r = validate_path_decomposition(cycle3(), {{{0, 1}}});
  CHECK_FALSE(r.valid);
  CHECK(r.violation.rfind("(i)", 0) == 0);

  r = validate_path_decomposition(directed_path(3), {{{0, 1}, {2}, {1, 2}}});
  CHECK_FALSE(r.valid);
  CHECK(r.violation.rfind("(ii)", 0) == 0);
}

TEST_CASE("path decomposition validator matches the literal checker") {
  std::mt19937_64 rng(7);
  int valid = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Digraph g = random_digraph(n, 0.5, rng());
    const int k = 1 + static_cast<int>(rng() % 4);
    std::vector<Bag> bags(static_cast<std::size_t>(k));
    for (auto& b : bags)
      for (Vertex v = 0; v < n; ++v)
        if (rng() % 2) b.push_back(v);
    const bool expected = oracle::path_decomposition_valid(g, bags);
    CHECK(validate_path_decomposition(g, {bags}).valid == expected);
    valid += expected;
  }
  CHECK(valid > 10);
}

TEST_CASE("DAG decompositions") {
  const Digraph dag = random_dag(6, 0.5, 3);
  std::vector<Bag> own;
  for (Vertex v = 0; v < 6; ++v) own.push_back({v});
  auto r = validate_dag_decomposition(dag, {dag, own});
  CHECK(r.valid);
  CHECK(r.width == 1);

  r = validate_dag_decomposition(cycle3(), {Digraph(1), {{0, 1, 2}}});
  CHECK(r.valid);
  CHECK(r.width == 3);

  r = validate_dag_decomposition(cycle3(), {Digraph(1), {{0, 1}}});
  CHECK_FALSE(r.valid);

  r = validate_dag_decomposition(cycle3(), {Digraph(2, {{0, 1}}), {{0}, {1, 2}}});
  CHECK_FALSE(r.valid);

  r = validate_dag_decomposition(sc_tight(1, 1), {Digraph(2, {{0, 1}}), {{0, 1, 2}, {3, 4, 5}}});
  CHECK(r.valid);
  CHECK(r.width == 3);
}

TEST_CASE("DAG decomposition validator matches the guard definition") {
  std::mt19937_64 rng(11);
  int valid = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const Digraph g = random_digraph(n, 0.5, rng());
    const int m = 1 + static_cast<int>(rng() % 3);
    const Digraph index = random_dag(m, 0.6, rng());
    std::vector<Bag> bags(static_cast<std::size_t>(m));
    for (auto& b : bags)
      for (Vertex v = 0; v < n; ++v)
        if (rng() % 3) b.push_back(v);
    const DagDecomposition dd{index, bags};
    const bool expected = oracle::dag_decomposition_valid(g, index, bags);
    CHECK(validate_dag_decomposition(g, dd).valid == expected);
    if (validate_dag_decomposition(g, dd).valid) CHECK(dag_guard_condition_holds(g, dd));
    valid += expected;
  }
  CHECK(valid > 10);
}
