#include <vector>

#include "doctest.h"

#include "graphpot/error.hpp"
#include "graphpot/golden.hpp"
#include "graphpot/periods.hpp"

using namespace graphpot;

namespace {
Coloring odd(const TrivalentGraph& g) { return Coloring::with_parity(g.num_vertices(), 1); }
Coloring even(const TrivalentGraph& g) { return Coloring::with_parity(g.num_vertices(), 0); }
}  // namespace

TEST_SUITE("periods") {
  TEST_CASE("genus-2 odd values") {
    const std::vector<long> want{1, 0, 8, 0, 216, 0, 8000, 0, 343000, 0, 16003008};
    for (const auto& g : enumerate_trivalent(2))
      for (int n = 0; n <= 10; ++n) CHECK(period_contract(g, odd(g), n) == want[static_cast<std::size_t>(n)]);
  }

  TEST_CASE("genus-3 odd and even values") {
    const auto g = graphs::tetrahedron();
    CHECK(period_contract(g, odd(g), 4) == 384);
    CHECK(period_contract(g, odd(g), 6) == 23040);
    CHECK(period_contract(g, odd(g), 8) == 3265920);
    CHECK(period_contract(g, even(g), 4) == 576);
    CHECK(period_contract(g, even(g), 8) == 6350400);
  }

  TEST_CASE("engines agree") {
    for (int genus : {2, 3})
      for (const auto& g : enumerate_trivalent(genus))
        for (int parity : {0, 1}) {
          const auto c = Coloring::with_parity(g.num_vertices(), parity);
          const auto p = graph_potential(g, c);
          for (int n = 0; n <= 6; ++n) CHECK(period_naive(p, n) == period_contract(g, c, n));
        }
  }

  TEST_CASE("large genus through the contraction engine") {
    const auto g = graphs::ladder(10);
    CHECK(period_contract(g, odd(g), 4) == 192 * 9);
    CHECK(contraction_plan(g).order.size() == static_cast<std::size_t>(g.num_vertices()));
    CHECK(contraction_plan(g).max_frontier <= 4);
  }

  TEST_CASE("period sequences") {
    const auto g = graphs::theta();
    const auto s = period_sequence(g, even(g), 12, Engine::kBoth);
    CHECK(s.values.size() == 13);
    CHECK(s.values[4] == 384);
    CHECK(s.values[8] == 645120);
    CHECK(s.values[6] == 0);
    CHECK(s.genus == 2);
    CHECK(s.parity == 0);
    CHECK_FALSE(s.graph_id.empty());
    CHECK_NOTHROW(validate(s));
    auto bad = s;
    bad.values[3] = 1;
    CHECK_THROWS_AS(validate(bad), PreconditionError);
    bad = s;
    bad.values[0] = 2;
    CHECK_THROWS_AS(validate(bad), PreconditionError);
    CHECK_THROWS(period_sequence(g, even(g), -1, Engine::kContract));
  }

  TEST_CASE("engine names") {
    CHECK(parse_engine("naive") == Engine::kNaive);
    CHECK(parse_engine("both") == Engine::kBoth);
    CHECK(to_string(Engine::kContract) == "contract");
    CHECK_THROWS_AS(parse_engine("fast"), PreconditionError);
  }

  TEST_CASE("quantum period coefficients") {
    const auto g = graphs::theta();
    const auto q = quantum_series(period_sequence(g, odd(g), 8, Engine::kContract));
    CHECK(q.p[2] == mpq_class(4));
    CHECK(q.p[4] == mpq_class(9));
    CHECK(q.p[8] == mpq_class(1225, 144));
    CHECK(q.c[8] == 343000);
    CHECK(q.radius_bound == mpq_class(1, 8));
  }

  TEST_CASE("growth estimate on the genus-2 row") {
    PeriodSequence s;
    s.genus = 2;
    s.parity = 1;
    s.values = GoldenTable::embedded().row(1, 2);
    const auto est = growth_estimate(s);
    CHECK(est.limit == 8);
    CHECK(est.nondecreasing);
    CHECK(est.bounded);
    CHECK(est.indices.front() == 4);
    CHECK(est.roots.back() < 8.0);
  }
}
