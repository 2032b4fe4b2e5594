#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "graphpot/graph.hpp"
#include "graphpot/laurent.hpp"

namespace graphpot {

/// Sum over the four sign vectors s in F2^3 with s_i + s_j + s_k = color of
/// x_i^{(-1)^{s_i}} x_j^{(-1)^{s_j}} x_k^{(-1)^{s_k}}. A loop fills two slots
/// with the same edge id; repeated variables are multiplied out.
LaurentPoly vertex_potential(std::span<const EdgeId> slots, int color, int num_vars);

/// The four sign vectors (as bit triples) summing to `color` mod 2, in a fixed order.
std::vector<std::array<int, 3>> sign_vectors(int color);

struct GraphPotential {
  TrivalentGraph graph;
  Coloring coloring;
  LaurentPoly poly;
  std::vector<LaurentPoly> vertex_terms;  // provenance: vertex potential of each vertex

  int genus() const { return graphpot::genus(graph); }
  int parity() const { return coloring.parity(); }
};

/// Requires a closed graph (remove the half-edge first).
GraphPotential graph_potential(const TrivalentGraph& g, const Coloring& c);

/// W(1,...,1); equals 8g - 8.
mpz_class conifold_value(const GraphPotential& p);

/// (vertex potentials of the endpoints of e, all other vertex potentials).
std::pair<LaurentPoly, LaurentPoly> mutation_split(const GraphPotential& p, EdgeId e);

}  // namespace graphpot
