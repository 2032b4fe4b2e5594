#include "graphpot/potential.hpp"

#include "graphpot/error.hpp"

namespace graphpot {

std::vector<std::array<int, 3>> sign_vectors(int color) {
  std::vector<std::array<int, 3>> out;
  for (int bits = 0; bits < 8; ++bits) {
    std::array<int, 3> s{bits & 1, (bits >> 1) & 1, (bits >> 2) & 1};
    if ((s[0] + s[1] + s[2]) % 2 == (color & 1)) out.push_back(s);
  }
  return out;
}

LaurentPoly vertex_potential(std::span<const EdgeId> slots, int color, int num_vars) {
  if (slots.size() != 3) throw PreconditionError("a vertex potential needs exactly three edge slots");
  for (EdgeId e : slots) {
    if (e < 0 || e >= num_vars) throw PreconditionError("edge slot outside the variable range");
  }
  LaurentPoly w(num_vars);
  for (const auto& s : sign_vectors(color)) {
    ExponentVector x(num_vars);
    for (std::size_t i = 0; i < 3; ++i) x.add(slots[i], s[i] ? -1 : 1);
    w.add_term(x, 1);
  }
  return w;
}

GraphPotential graph_potential(const TrivalentGraph& g, const Coloring& c) {
  check_coloring(g, c);
  if (!g.is_closed()) throw PreconditionError("graph potential needs a graph without half-edge");
  GraphPotential p{g, c, LaurentPoly(g.num_edges()), {}};
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& slots = g.slots(v);
    auto wv = vertex_potential(slots, c.bits[static_cast<std::size_t>(v)], g.num_edges());
    p.poly += wv;
    p.vertex_terms.push_back(std::move(wv));
  }
  return p;
}

mpz_class conifold_value(const GraphPotential& p) {
  std::vector<mpq_class> ones(static_cast<std::size_t>(p.poly.num_vars()), mpq_class(1));
  const mpq_class value = evaluate(p.poly, ones);
  return value.get_num();
}

std::pair<LaurentPoly, LaurentPoly> mutation_split(const GraphPotential& p, EdgeId e) {
  if (e < 0 || e >= p.graph.num_edges()) throw PreconditionError("edge id out of range");
  const Edge& ed = p.graph.edge(e);
  if (ed.is_loop()) throw UnsupportedMoveError("mutation split along a loop");
  LaurentPoly mut(p.poly.num_vars()), frozen(p.poly.num_vars());
  for (VertexId v = 0; v < p.graph.num_vertices(); ++v) {
    if (v == ed.u || v == ed.v) {
      mut += p.vertex_terms[static_cast<std::size_t>(v)];
    } else {
      frozen += p.vertex_terms[static_cast<std::size_t>(v)];
    }
  }
  return {std::move(mut), std::move(frozen)};
}

}  // namespace graphpot
