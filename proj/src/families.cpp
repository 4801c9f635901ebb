#include "locgame/families.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "locgame/error.hpp"

namespace locgame {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::invalid_argument, what);
}

// Index in [0, bound) from one draw.
int bounded(std::mt19937_64& rng, int bound) {
  return static_cast<int>(unit_draw(rng()) * bound);
}

std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(bounded(rng, i + 1))]);
  }
  return perm;
}

}  // namespace

double unit_draw(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

Digraph rotation_tournament(int m) {
  require(m >= 1, "rotation_tournament: m must be at least 1");
  const int n = 2 * m + 1;
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= m; ++j) arcs.push_back({i, (i + j) % n});
  }
  return Digraph(n, std::move(arcs));
}

Digraph tripartite_cycle(int i) {
  require(i >= 1, "tripartite_cycle: i must be at least 1");
  std::vector<Arc> arcs;
  for (int part = 0; part < 3; ++part) {
    const int next = (part + 1) % 3;
    for (int a = 0; a < i; ++a) {
      for (int b = 0; b < i; ++b) arcs.push_back({part * i + a, next * i + b});
    }
  }
  return Digraph(3 * i, std::move(arcs));
}

Digraph blowup(const Digraph& t, int k) {
  require(t.is_tournament(), "blowup: base digraph must be a tournament");
  require(k >= 3, "blowup: independent sets must have size at least 3");
  std::vector<Arc> arcs;
  for (const Arc& a : t.arcs()) {
    for (int x = 0; x < k; ++x) {
      for (int y = 0; y < k; ++y) arcs.push_back({a.tail * k + x, a.head * k + y});
    }
  }
  return Digraph(t.order() * k, std::move(arcs));
}

Digraph sc_tight(int m, int delta) {
  require(m >= 1 && m % 2 == 1, "sc_tight: m must be a positive odd integer");
  require(delta >= 1, "sc_tight: delta must be positive");
  const int width = 2 * m + 1;
  const int layers = delta + 1;
  auto id = [width](int u, int layer) { return (layer - 1) * width + u; };
  std::vector<Arc> arcs;
  for (int layer = 1; layer <= layers; ++layer) {
    for (int u = 0; u < width; ++u) {
      for (int j = 1; j <= m; ++j) {
        const int target = (u + j) % width;
        if (layer == 1) {
          for (int to = 1; to <= layers; ++to) arcs.push_back({id(u, 1), id(target, to)});
        } else {
          arcs.push_back({id(u, layer), id(target, layer)});
        }
      }
    }
  }
  return Digraph(width * layers, std::move(arcs));
}

std::optional<std::string> sc_tight_warning(int m, int delta) {
  if (2 * delta <= m + 1) return std::nullopt;
  return "delta=" + std::to_string(delta) + " exceeds (m+1)/2=" + std::to_string((m + 1) / 2) +
         "; the tightness side condition delta*k <= (m+1)/2 fails for every k >= 1";
}

Digraph binary_source_extension(const Digraph& d) {
  const int m = d.order();
  require(m >= 1, "binary_source_extension: digraph must be nonempty");
  int bits = 0;
  while ((1 << bits) < m) ++bits;
  std::vector<Arc> arcs = d.arcs();
  for (int i = 0; i < bits; ++i) {
    for (Vertex v = 0; v < m; ++v) {
      if (((v >> i) & 1) == 0) arcs.push_back({m + i, v});
    }
  }
  return Digraph(m + bits, std::move(arcs));
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int f = 2; f * f <= q; ++f) {
    if (q % f == 0) return false;
  }
  return true;
}

std::vector<int> quadratic_residues(int q) {
  std::set<int> squares;
  for (long long x = 1; x < q; ++x) squares.insert(static_cast<int>((x * x) % q));
  return {squares.begin(), squares.end()};
}

Digraph paley_tournament(int q) {
  require(is_prime(q), "paley_tournament: q must be prime");
  require(q % 4 == 3, "paley_tournament: q must be 3 mod 4");
  const auto residues = quadratic_residues(q);
  std::vector<Arc> arcs;
  for (int i = 0; i < q; ++i) {
    for (int r : residues) arcs.push_back({i, (i + r) % q});
  }
  return Digraph(q, std::move(arcs));
}

Digraph random_tournament(int n, double p, std::uint64_t seed) {
  require(n >= 1, "random_tournament: n must be at least 1");
  require(p >= 0.0 && p <= 1.0, "random_tournament: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (unit_draw(rng()) < p) {
        arcs.push_back({i, j});
      } else {
        arcs.push_back({j, i});
      }
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph transitive_tournament(int n) {
  require(n >= 1, "transitive_tournament: n must be at least 1");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) arcs.push_back({i, j});
  }
  return Digraph(n, std::move(arcs));
}

Digraph directed_path(int n) {
  require(n >= 1, "directed_path: n must be at least 1");
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  return Digraph(n, std::move(arcs));
}

Digraph random_digraph(int n, double density, std::uint64_t seed) {
  require(n >= 0, "random_digraph: n must be nonnegative");
  std::mt19937_64 rng(seed);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double draw = unit_draw(rng());
      if (draw < density / 2) {
        arcs.push_back({i, j});
      } else if (draw < density) {
        arcs.push_back({j, i});
      }
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph random_dag(int n, double density, std::uint64_t seed) {
  require(n >= 0, "random_dag: n must be nonnegative");
  std::mt19937_64 rng(seed);
  const auto perm = random_permutation(n, rng);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (unit_draw(rng()) < density) {
        arcs.push_back({perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]});
      }
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph random_layered_digraph(int n, int max_component, double density, std::uint64_t seed) {
  require(n >= 0, "random_layered_digraph: n must be nonnegative");
  require(max_component >= 1, "random_layered_digraph: max_component must be positive");
  std::mt19937_64 rng(seed);
  std::vector<int> block(static_cast<std::size_t>(n));
  int current = 0;
  for (int start = 0; start < n; ++current) {
    const int size = std::min(n - start, 1 + bounded(rng, max_component));
    for (int v = start; v < start + size; ++v) block[static_cast<std::size_t>(v)] = current;
    start += size;
  }
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double draw = unit_draw(rng());
      if (block[static_cast<std::size_t>(i)] == block[static_cast<std::size_t>(j)]) {
        if (draw < density / 2) {
          arcs.push_back({i, j});
        } else if (draw < density) {
          arcs.push_back({j, i});
        }
      } else if (draw < density / 2) {
        arcs.push_back({i, j});
      }
    }
  }
  // Relabel so component structure is not readable off the vertex ids.
  const auto perm = random_permutation(n, rng);
  for (Arc& a : arcs) {
    a = {perm[static_cast<std::size_t>(a.tail)], perm[static_cast<std::size_t>(a.head)]};
  }
  return Digraph(n, std::move(arcs));
}

}  // namespace locgame
