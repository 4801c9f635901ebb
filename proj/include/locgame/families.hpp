#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locgame/digraph.hpp"

namespace locgame {

/// T_{2m+1}: vertex i has arcs to i+1, ..., i+m (mod 2m+1).
Digraph rotation_tournament(int m);

/// D_3(i): parts V_j = {j*i, ..., j*i+i-1}, complete arcs V_j -> V_{j+1 mod 3}.
Digraph tripartite_cycle(int i);

/// Replaces vertex v of tournament t by the independent set
/// I_v = {v*k, ..., v*k+k-1}; x in I_u -> y in I_v iff (u, v) is an arc of t.
Digraph blowup(const Digraph& t, int k);

/// Z_{2m+1} x [delta+1]: (u, a) -> (u+j, b) for 1 <= j <= m whenever a is the
/// first layer or a == b. Vertex (u, layer) has id (layer-1)*(2m+1) + u.
Digraph sc_tight(int m, int delta);

/// The side condition delta*k <= (m+1)/2 attached to sc_tight; returns a
/// human-readable warning when it cannot hold for k >= 1, nullopt otherwise.
std::optional<std::string> sc_tight_warning(int m, int delta);

/// Adds ceil(log2 m) sources after the m vertices of d. Source i (id m+i)
/// points at every original vertex whose label has bit i clear.
Digraph binary_source_extension(const Digraph& d);

/// Paley tournament on Z_q for a prime q = 3 mod 4.
Digraph paley_tournament(int q);

/// T(n, p): for i < j in lexicographic pair order one draw decides
/// (i, j) (probability p) versus (j, i).
Digraph random_tournament(int n, double p, std::uint64_t seed);

Digraph transitive_tournament(int n);

/// 0 -> 1 -> ... -> n-1.
Digraph directed_path(int n);

/// Oriented digraph: each pair independently gets no arc (1 - density) or an
/// arc of uniformly random direction.
Digraph random_digraph(int n, double density, std::uint64_t seed);

/// Acyclic digraph: a random vertex permutation fixes the order, then each
/// forward pair gets an arc with probability density.
Digraph random_dag(int n, double density, std::uint64_t seed);

/// Random digraph whose strong components all have at most max_component
/// vertices: vertices are split into consecutive blocks, each block is a
/// random oriented digraph and arcs between blocks only point forward.
Digraph random_layered_digraph(int n, int max_component, double density, std::uint64_t seed);

bool is_prime(int q);

/// Quadratic residues of Z_q (q prime), sorted.
std::vector<int> quadratic_residues(int q);

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
double unit_draw(std::uint64_t bits);

}  // namespace locgame
