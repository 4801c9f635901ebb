#include <doctest.h>

#include <algorithm>

#include "locgame/error.hpp"
#include "locgame/families.hpp"
#include "locgame/structure.hpp"
#include "locgame/tournament.hpp"

using namespace locgame;

namespace {

// Arc set of g after relabelling v -> (v + shift) mod n.
std::vector<Arc> shifted(const Digraph& g, int shift) {
  const int n = g.order();
  std::vector<Arc> out;
  for (const Arc& a : g.arcs()) out.push_back({(a.tail + shift) % n, (a.head + shift) % n});
  std::sort(out.begin(), out.end());
  return out;
}

bool throws_invalid(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == ErrorKind::invalid_argument;
  }
  return false;
}

}  // namespace

TEST_CASE("rotation tournaments") {
  CHECK(rotation_tournament(1) == Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  const Digraph t5 = rotation_tournament(2);
  for (Vertex v = 0; v < 5; ++v) CHECK(t5.out_degree(v) == 2);
  CHECK(rotation_tournament(3).has_arc(6, 1));
  CHECK(throws_invalid([] { rotation_tournament(0); }));

  for (int m = 1; m <= 5; ++m) {
    const Digraph t = rotation_tournament(m);
    CHECK(t.is_tournament());
    for (int c = 0; c < t.order(); ++c) CHECK(shifted(t, c) == t.arcs());
  }
}

TEST_CASE("tripartite cycles") {
  CHECK(tripartite_cycle(1) == rotation_tournament(1));
  const Digraph d2 = tripartite_cycle(2);
  CHECK(d2.order() == 6);
  CHECK(d2.arc_count() == 12);
  CHECK(d2.has_arc(1, 2));
  CHECK(d2.has_arc(5, 0));
  CHECK_FALSE(d2.has_arc(0, 1));
}

TEST_CASE("blow-ups") {
  const Digraph b = blowup(rotation_tournament(1), 3);
  CHECK(b.order() == 9);
  CHECK(b.arc_count() == 27);
  CHECK(b.has_arc(0, 5));   // I_0 -> I_1
  CHECK(b.has_arc(8, 2));   // I_2 -> I_0
  CHECK_FALSE(b.has_arc(0, 1));

  const Digraph single = blowup(Digraph(1), 4);
  CHECK(single.order() == 4);
  CHECK(single.arc_count() == 0);

  CHECK(throws_invalid([] { blowup(rotation_tournament(1), 2); }));
  CHECK(throws_invalid([] { blowup(directed_path(3), 3); }));
}

TEST_CASE("tight strong-component construction") {
  const Digraph g = sc_tight(3, 1);
  CHECK(g.order() == 14);
  const auto scc = strong_components(g);
  CHECK(scc.count() == 2);
  CHECK(sc_tight(1, 1).order() == 6);

  const auto star = strong_components(sc_tight(3, 2)).condensation;
  CHECK(star.order() == 3);
  CHECK(star.out_degree(0) == 2);
  CHECK(star.arc_count() == 2);

  const Digraph wide = sc_tight(3, 2);
  for (const auto& comp : strong_components(wide).components) CHECK(wide.induced(comp) == rotation_tournament(3));

  CHECK(throws_invalid([] { sc_tight(2, 1); }));
  CHECK_FALSE(sc_tight_warning(3, 1).has_value());
  CHECK(sc_tight_warning(3, 3).has_value());
}

TEST_CASE("binary source extension") {
  const Digraph four = binary_source_extension(directed_path(4));
  CHECK(four.order() == 6);
  CHECK(four.is_source(4));
  CHECK(four.is_source(5));

  CHECK(binary_source_extension(Digraph(1)) == Digraph(1));

  const Digraph three = binary_source_extension(rotation_tournament(1));
  CHECK(three.order() == 5);
  CHECK(three.has_arc(3, 0));
  CHECK(three.has_arc(4, 0));
  CHECK_FALSE(three.has_arc(3, 1));  // label 01 has bit 0 set
  CHECK(three.has_arc(4, 1));
}

TEST_CASE("Paley tournaments") {
  CHECK(paley_tournament(3) == rotation_tournament(1));
  CHECK(quadratic_residues(7) == std::vector<int>{1, 2, 4});
  for (int q : {3, 7, 11, 19}) {
    const Digraph p = paley_tournament(q);
    CHECK(p.is_tournament());
    for (Vertex v = 0; v < q; ++v) CHECK(p.out_degree(v) == (q - 1) / 2);
    CHECK(doubly_regular_check(p));
  }
  CHECK(neighborhood_profile(paley_tournament(7), 0, 1).pp == 1);
  CHECK(throws_invalid([] { paley_tournament(13); }));
  CHECK(throws_invalid([] { paley_tournament(15); }));
}

TEST_CASE("random tournaments") {
  CHECK(random_tournament(5, 1.0, 3) == transitive_tournament(5));
  const Digraph back = random_tournament(5, 0.0, 3);
  for (const Arc& a : back.arcs()) CHECK(a.tail > a.head);
  CHECK(random_tournament(5, 0.5, 42) == random_tournament(5, 0.5, 42));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Digraph t = random_tournament(1 + static_cast<int>(seed % 12), 0.5, seed);
    CHECK(t.is_tournament());
  }
  CHECK(throws_invalid([] { random_tournament(4, 1.5, 1); }));
}

TEST_CASE("transitive tournaments and paths") {
  CHECK(transitive_tournament(1).order() == 1);
  CHECK(transitive_tournament(3).arcs() == std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(transitive_tournament(4).arc_count() == 6);
  CHECK(directed_path(4).arcs() == std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("random digraph generators") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    CHECK(is_acyclic(random_dag(8, 0.7, seed)));
    const Digraph g = random_layered_digraph(10, 1 + static_cast<int>(seed % 6), 0.6, seed);
    CHECK(g.order() == 10);
    for (const auto& comp : strong_components(g).components) CHECK(comp.size() <= 1 + seed % 6);
    CHECK(random_digraph(7, 0.5, seed) == random_digraph(7, 0.5, seed));
  }
  CHECK(random_digraph(6, 0.0, 1).arc_count() == 0);
  CHECK(random_digraph(6, 1.0, 1).is_tournament());
}
