#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "graphpot/error.hpp"
#include "graphpot/polytope.hpp"
#include "graphpot/potential.hpp"

using namespace graphpot;

namespace {
Coloring odd(const TrivalentGraph& g) { return Coloring::with_parity(g.num_vertices(), 1); }

std::vector<IntVec> cube() {
  std::vector<IntVec> v;
  for (int s = 0; s < 8; ++s) v.push_back({(s & 1) ? 1 : -1, (s & 2) ? 1 : -1, (s & 4) ? 1 : -1});
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_SUITE("lattices") {
  TEST_CASE("index is 2^genus") {
    for (int g = 2; g <= 4; ++g)
      for (const auto& x : enumerate_trivalent(g)) {
        const LatticeSystem lat(x);
        CHECK(lat.quotient_dim() == g);
        CHECK(lat.index() == (1LL << g));
        CHECK(static_cast<int>(lat.cycle_basis().size()) == g);
      }
  }

  TEST_CASE("both membership tests agree on random vectors") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long long> coord(-5, 5);
    for (int g = 2; g <= 4; ++g)
      for (const auto& x : enumerate_trivalent(g)) {
        const LatticeSystem lat(x);
        int disagreements = 0;
        for (int trial = 0; trial < 10000; ++trial) {
          IntVec v(static_cast<std::size_t>(x.num_edges()));
          for (auto& e : v) e = coord(rng);
          if (lat.contains(v) != lat.contains_via_cycles(v)) ++disagreements;
        }
        CHECK(disagreements == 0);
      }
  }

  TEST_CASE("support points lie in N, 2Z^E lies in N") {
    for (const auto& x : enumerate_trivalent(3)) {
      const LatticeSystem lat(x);
      const auto pp = polar_dual(x, odd(x));
      for (const auto& s : pp.support) CHECK(lat.contains(s));
      for (EdgeId e = 0; e < x.num_edges(); ++e) {
        IntVec v(static_cast<std::size_t>(x.num_edges()), 0);
        v[static_cast<std::size_t>(e)] = 2;
        CHECK(lat.contains(v));
      }
    }
  }

  TEST_CASE("bridge indicators") {
    for (int g = 2; g <= 4; ++g)
      for (const auto& x : enumerate_trivalent(g)) {
        const LatticeSystem lat(x);
        const auto br = bridges(x);
        const auto pp = polar_dual(x, odd(x));
        for (EdgeId e = 0; e < x.num_edges(); ++e) {
          IntVec v(static_cast<std::size_t>(x.num_edges()), 0);
          v[static_cast<std::size_t>(e)] = 1;
          CHECK(lat.contains(v) == std::binary_search(br.begin(), br.end(), e));
          CHECK(in_polar(pp, v));
          v[static_cast<std::size_t>(e)] = -1;
          CHECK(in_polar(pp, v));
        }
      }
  }

  TEST_CASE("dual lattice") {
    const LatticeSystem lat(graphs::theta());
    const std::vector<mpq_class> half{mpq_class(1, 2), mpq_class(1, 2), mpq_class(0)};
    const std::vector<mpq_class> quarter{mpq_class(1, 4), 0, 0};
    const std::vector<mpq_class> one{1, 0, 0};
    CHECK(lat.dual_contains(half));
    CHECK_FALSE(lat.dual_contains(quarter));
    CHECK(lat.dual_contains(one));
  }
}

TEST_SUITE("polytope") {
  TEST_CASE("H-representation has four rows per vertex") {
    const auto g = graphs::ladder(3);
    const auto rows = hrep(g, odd(g));
    CHECK(rows.size() == 4u * static_cast<std::size_t>(g.num_vertices()));
    for (const auto& r : rows) CHECK((r.signs[0] + r.signs[1] + r.signs[2]) % 2 == (r.vertex == 0 ? 1 : 0));
  }

  TEST_CASE("theta: P is the octahedron, its polar the cube") {
    const auto g = graphs::theta();
    const auto pp = polar_dual(g, odd(g));
    CHECK(pp.dim == 3);
    CHECK(pp.polar_vertices == cube());
    CHECK(pp.p_vertices.size() == 6);
    CHECK(pp.polar_facets.size() == 6);
    CHECK(pp.duality_ok);
    const auto even = polar_dual(g, Coloring::with_parity(2, 0));
    CHECK(even.polar_vertices.size() == 4);
  }

  TEST_CASE("colored dumbbell") {
    const auto pp = polar_dual(graphs::dumbbell(), Coloring{{0, 1}});
    std::vector<IntVec> listed{{1, 2, 0}, {1, -2, 0}, {-1, 0, 0}, {-1, 0, -2}, {1, 0, 0}, {-1, 0, 2}};
    std::sort(listed.begin(), listed.end());
    CHECK(pp.support == listed);
    CHECK(pp.polar_vertices.size() == 4);
    CHECK(pp.polar_facets == geom::hull_facets(listed));
    const auto t = is_terminal(graphs::dumbbell(), Coloring{{0, 1}});
    CHECK_FALSE(t.terminal);
    REQUIRE(t.witness);
    CHECK(*t.witness == IntVec{-1, 0, 0});
    CHECK_FALSE(t.criterion_applies);
  }

  TEST_CASE("polar duality round trip up to genus 4") {
    for (int g = 2; g <= 4; ++g)
      for (const auto& x : enumerate_trivalent(g))
        for (int parity : {0, 1}) CHECK(polar_dual(x, Coloring::with_parity(x.num_vertices(), parity)).duality_ok);
  }

  TEST_CASE("lattice point counts for genus 3") {
    for (const auto& x : enumerate_trivalent(3)) {
      const auto r = classify_lattice_points(x, odd(x));
      CHECK(r.counts_consistent);
      CHECK(r.num_origin == 1);
      CHECK(r.num_rays == 16 - 2 * x.num_loops());
      CHECK(r.num_bridge_points == 2 * static_cast<int>(bridges(x).size()));
      CHECK(r.num_other == 0);
      CHECK(is_terminal(x, odd(x)).terminal == bridges(x).empty());
    }
    const auto l = classify_lattice_points(graphs::ladder(3), odd(graphs::ladder(3)));
    CHECK(l.num_rays == 16);
  }

  TEST_CASE("theta is terminal") {
    const auto t = is_terminal(graphs::theta(), odd(graphs::theta()));
    CHECK(t.terminal);
    CHECK_FALSE(t.witness);
  }

  TEST_CASE("Pi_n lattice points") {
    const auto r3 = pi_n_polytope_points(3);
    CHECK(r3.by_weight == std::array<int, 4>{1, 6, 12, 8});
    CHECK(r3.points.size() == 27);
    CHECK(r3.only_expected);
    CHECK(r3.separation_ok);
    const auto r4 = pi_n_polytope_points(4);
    CHECK(r4.by_weight == std::array<int, 4>{1, 8, 24, 32});
    CHECK(r4.vertices.size() == 32);
    CHECK(r4.only_expected);
    CHECK_THROWS_AS(pi_n_polytope_points(5), RangeError);
  }

  TEST_CASE("Manon identification") {
    for (const auto& g : {graphs::theta_with_tail(), graphs::tetrahedron_with_tail()}) {
      const auto r = manon_original(g);
      CHECK(r.slice_forced);
      CHECK(r.vertices_equal);
      CHECK(r.facets_equal);
      CHECK(r.lattice_round_trip);
      CHECK(r.lattice_points_checked > 0);
      CHECK(r.dim == r.removal.graph.num_edges());
    }
    CHECK_THROWS(manon_original(graphs::theta()));
  }

  TEST_CASE("plain-text export") {
    const auto pp = polar_dual(graphs::theta(), odd(graphs::theta()));
    const auto text = export_text(pp);
    CHECK(text.rfind("dim 3\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 8 + 8);
    CHECK(text.find("vertex -1 -1 -1") != std::string::npos);
  }
}

TEST_SUITE("triangulation") {
  TEST_CASE("square cone") {
    const std::vector<IntVec> square{{1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {1, -1, -1}};
    const auto t = placing_triangulation(square);
    CHECK(t.size() == 2);
    for (const auto& s : t) CHECK(s.size() == 3);
    CHECK(has_unimodular_triangulation(square, 4));
    CHECK_FALSE(has_unimodular_triangulation(square, 2));
    // halves of one split meet along the diagonal; halves of different splits overlap
    CHECK(proper_intersection(square, {0, 1, 3}, {0, 2, 3}));
    CHECK_FALSE(proper_intersection(square, {0, 1, 3}, {0, 1, 2}));
  }

  TEST_CASE("regular subdivision follows the heights") {
    const std::vector<IntVec> square{{1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {1, -1, -1}};
    CHECK(regular_subdivision(square, {0, 1, 1, 0}).size() == 2);
    CHECK(regular_subdivision(square, {0, 0, 0, 0}).size() == 1);
  }

  TEST_CASE("theta is small") {
    const auto r = triangulate_fan(graphs::theta(), odd(graphs::theta()));
    CHECK(r.verdict == SmallVerdict::kSmall);
    CHECK(r.lattice_index == 4);
    CHECK(r.cones.size() == 6);
    for (const auto& c : r.cones) {
      CHECK(c.simplices.size() == 2);
      CHECK(c.unimodular);
      CHECK(c.volume == 8);
    }
  }

  TEST_CASE("bridges rule out a small resolution") {
    const auto r = triangulate_fan(graphs::dumbbell(), Coloring{{0, 1}});
    CHECK(r.verdict == SmallVerdict::kNo);
  }

  TEST_CASE("tetrahedron is not refuted, and the search is deterministic") {
    TriangulationOptions opts;
    opts.seed = 5;
    const auto a = triangulate_fan(graphs::tetrahedron(), odd(graphs::tetrahedron()), opts);
    const auto b = triangulate_fan(graphs::tetrahedron(), odd(graphs::tetrahedron()), opts);
    CHECK(a.verdict != SmallVerdict::kNo);
    CHECK(a.seed == 5);
    CHECK(a.ray_order == b.ray_order);
    CHECK(a.heights == b.heights);
    CHECK(a.bad_simplices == b.bad_simplices);
  }
}
