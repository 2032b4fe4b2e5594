#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "graphpot/error.hpp"
#include "graphpot/graph.hpp"

using namespace graphpot;

namespace {

/// Same graph with vertices renamed by `perm` and edges listed in reverse.
TrivalentGraph relabel(const TrivalentGraph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (auto it = g.edges().rbegin(); it != g.edges().rend(); ++it) edges.push_back({perm[it->v], perm[it->u]});
  std::optional<VertexId> half;
  if (g.half_edge()) half = perm[*g.half_edge()];
  return TrivalentGraph(g.num_vertices(), edges, half);
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("construction rejects non-trivalent input") {
    CHECK_THROWS_AS(TrivalentGraph(2, {{0, 1}, {0, 1}}), StructuralError);
    CHECK_THROWS_AS(TrivalentGraph(2, {{0, 1}, {0, 1}, {0, 2}}), StructuralError);
    CHECK_THROWS_AS(TrivalentGraph(4, {{0, 0}, {0, 1}, {1, 1}, {2, 2}, {2, 3}, {3, 3}}), StructuralError);
  }

  TEST_CASE("genus, loops and bridges of the builtin graphs") {
    CHECK(genus(graphs::theta()) == 2);
    CHECK(genus(graphs::dumbbell()) == 2);
    CHECK(graphs::dumbbell().num_loops() == 2);
    CHECK(bridges(graphs::dumbbell()) == std::vector<EdgeId>{0});
    CHECK(bridges(graphs::theta()).empty());
    CHECK(genus(graphs::tetrahedron()) == 3);
    CHECK(genus(graphs::bipartite_k33()) == 4);
    for (int g = 3; g <= 8; ++g) {
      CHECK(genus(graphs::ladder(g)) == g);
      CHECK(bridges(graphs::ladder(g)).empty());
    }
    CHECK(genus(graphs::theta_with_tail()) == 2);
    CHECK_FALSE(graphs::theta_with_tail().is_closed());
  }

  TEST_CASE("coloring parity") {
    CHECK(Coloring::with_parity(4, 1).parity() == 1);
    CHECK(Coloring::with_parity(4, 0).parity() == 0);
    CHECK(Coloring{{1, 1, 0, 1}}.parity() == 1);
    CHECK_THROWS_AS(check_coloring(graphs::theta(), Coloring{{1, 0, 0}}), StructuralError);
  }

  TEST_CASE("enumeration counts") {
    CHECK(enumerate_trivalent(2).size() == 2);
    CHECK(enumerate_trivalent(3).size() == 5);
    CHECK(enumerate_trivalent(4).size() == 17);
    CHECK(enumerate_trivalent(5).size() == 71);
    CHECK_THROWS(enumerate_trivalent(6));
  }

  TEST_CASE("enumerated graphs are pairwise non-isomorphic") {
    for (int g = 2; g <= 4; ++g) {
      const auto all = enumerate_trivalent(g);
      std::vector<std::string> forms;
      for (const auto& x : all) {
        CHECK(genus(x) == g);
        forms.push_back(canonical_form(x, Coloring::with_parity(x.num_vertices(), 0)));
      }
      std::sort(forms.begin(), forms.end());
      CHECK(std::adjacent_find(forms.begin(), forms.end()) == forms.end());
    }
  }

  TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(7);
    for (const auto& g : enumerate_trivalent(4)) {
      std::vector<int> perm(static_cast<std::size_t>(g.num_vertices()));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto h = relabel(g, perm);
      const Coloring c = Coloring::with_parity(g.num_vertices(), 0);
      CHECK(canonical_form(g, c) == canonical_form(h, c));
      const auto cert = find_isomorphism(g, c, h, c);
      REQUIRE(cert);
      CHECK(verify_isomorphism(g, c, h, c, *cert));
      CHECK(canonical_relabel(g, c) == canonical_relabel(h, c));
    }
  }

  TEST_CASE("non-isomorphic graphs have different forms") {
    const auto c = Coloring::with_parity(2, 0);
    CHECK(canonical_form(graphs::theta(), c) != canonical_form(graphs::dumbbell(), c));
    CHECK_FALSE(find_isomorphism(graphs::theta(), c, graphs::dumbbell(), c));
  }

  TEST_CASE("elementary transformation") {
    const auto c = Coloring::with_parity(2, 1);
    const auto [t, tc] = elementary_transformation(graphs::dumbbell(), c, 0);
    CHECK(canonical_form(t, tc) == canonical_form(graphs::theta(), tc));
    CHECK(tc == c);
    CHECK_THROWS_AS(elementary_transformation(graphs::dumbbell(), c, 1), UnsupportedMoveError);
    for (const auto& g : enumerate_trivalent(3)) {
      const auto gc = Coloring::with_parity(g.num_vertices(), 1);
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (g.edge(e).is_loop()) continue;
        const auto [h, hc] = elementary_transformation(g, gc, e);
        CHECK(genus(h) == 3);
        CHECK(h.num_edges() == g.num_edges());
      }
    }
  }

  TEST_CASE("half-edge removal") {
    const auto r = remove_half_edge(graphs::theta_with_tail());
    CHECK(r.graph.is_closed());
    CHECK(genus(r.graph) == 2);
    CHECK(r.graph.num_vertices() == 2);
    CHECK(r.coloring.parity() == 1);
    CHECK(r.edge_map[static_cast<std::size_t>(r.second_edge)] == -1);
    const auto t = remove_half_edge(graphs::tetrahedron_with_tail());
    const auto c = Coloring::with_parity(4, 0);
    CHECK(canonical_form(t.graph, c) == canonical_form(graphs::tetrahedron(), c));
    CHECK_THROWS(remove_half_edge(graphs::theta()));
  }
}
