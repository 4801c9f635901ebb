#pragma once

#include <memory>

#include "locgame/decomposition.hpp"
#include "locgame/play.hpp"
#include "locgame/structure.hpp"

namespace locgame {

/// One cop walking a topological order: round i probes x_i. Captures within
/// n rounds on any acyclic digraph. Throws Error(cyclic) otherwise.
std::unique_ptr<CopStrategy> dag_sweep(const Digraph& g);

/// Phases follow the condensation's topological order. In the phase of
/// component G_i the cops probe an exact metric basis of G_i plus one marker
/// vertex in every child component; a finite marker reading means the robber
/// has left G_i. Budget: max_i beta(G_i) + Delta^+(SC(G)).
std::unique_ptr<CopStrategy> sc_composite(const Digraph& g);

/// Probes W_1, W_2, ... in order with width+1 cops. Throws
/// Error(invalid_argument) if the decomposition does not validate.
std::unique_ptr<CopStrategy> path_sweep(const Digraph& g, const PathDecomposition& pd);

/// Probes the bags of a DAG-decomposition in a topological order of its
/// index DAG with width cops.
std::unique_ptr<CopStrategy> dag_decomp_sweep(const Digraph& g, const DagDecomposition& dd);

/// floor(m/2)+1 cops on T_{2m+1}: probe {4s}, then {R+2s+1} around the
/// three-vertex window R the first probe left, then (m odd) {R'+2s+1} with
/// R' = R+m+1. Capture within three probes.
///
/// With fewer cops (cops < floor(m/2)+1) each placement keeps its first
/// `cops` vertices and the schedule restarts whenever the observed class does
/// not fit the expected window; at full strength a misfit raises
/// Error(strategy).
std::unique_ptr<CopStrategy> rotation_strategy(int m);
std::unique_ptr<CopStrategy> rotation_strategy(int m, int cops);

/// Round bound each strategy guarantees on its instance.
int rotation_round_bound(int m);

/// Component sequence probed by an sc_composite transcript, one entry per round.
std::vector<int> sc_composite_phases(const Digraph& g, const GameTranscript& t);

}  // namespace locgame
