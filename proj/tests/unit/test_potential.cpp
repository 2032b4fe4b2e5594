#include <vector>

#include "doctest.h"

#include "graphpot/potential.hpp"

using namespace graphpot;

TEST_SUITE("potential") {
  TEST_CASE("sign vectors") {
    for (int color : {0, 1}) {
      const auto s = sign_vectors(color);
      CHECK(s.size() == 4);
      for (const auto& v : s) CHECK((v[0] + v[1] + v[2]) % 2 == color);
    }
  }

  TEST_CASE("vertex potential of a plain vertex") {
    const std::vector<EdgeId> slots{0, 1, 2};
    const auto p = vertex_potential(slots, 0, 3);
    CHECK(p.num_terms() == 4);
    CHECK(p.coefficient({1, 1, 1}) == 1);
    CHECK(p.coefficient({1, -1, -1}) == 1);
    const auto q = vertex_potential(slots, 1, 3);
    CHECK(q.coefficient({-1, -1, -1}) == 1);
    CHECK(q.coefficient({1, 1, 1}) == 0);
  }

  TEST_CASE("vertex potential with a loop multiplies out") {
    // slots (0,1,1): the loop variable appears twice
    const std::vector<EdgeId> slots{0, 1, 1};
    const auto even = vertex_potential(slots, 0, 2);
    CHECK(even.coefficient({1, 2}) == 1);
    CHECK(even.coefficient({1, -2}) == 1);
    CHECK(even.coefficient({-1, 0}) == 2);
    const auto odd = vertex_potential(slots, 1, 2);
    CHECK(odd.coefficient({-1, 2}) == 1);
    CHECK(odd.coefficient({1, 0}) == 2);
  }

  TEST_CASE("theta potential") {
    const auto p = graph_potential(graphs::theta(), Coloring::with_parity(2, 1));
    CHECK(p.genus() == 2);
    CHECK(p.parity() == 1);
    CHECK(p.vertex_terms.size() == 2);
    CHECK(p.poly.num_terms() == 8);
    CHECK(p.poly == p.vertex_terms[0] + p.vertex_terms[1]);
  }

  TEST_CASE("conifold value is 8g-8") {
    for (int g = 2; g <= 4; ++g)
      for (const auto& x : enumerate_trivalent(g))
        for (int parity : {0, 1})
          CHECK(conifold_value(graph_potential(x, Coloring::with_parity(x.num_vertices(), parity))) == 8 * g - 8);
  }

  TEST_CASE("mutation split") {
    const auto g = graphs::ladder(3);
    const auto p = graph_potential(g, Coloring::with_parity(g.num_vertices(), 1));
    const auto [near, far] = mutation_split(p, 0);
    CHECK(near + far == p.poly);
    CHECK_FALSE(near.is_zero());
  }

  TEST_CASE("half-edge graphs are rejected") {
    CHECK_THROWS(graph_potential(graphs::theta_with_tail(), Coloring::with_parity(3, 1)));
  }
}
