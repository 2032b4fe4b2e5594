#include "doctest.h"

#include "graphpot/error.hpp"
#include "graphpot/io.hpp"

using namespace graphpot;

TEST_SUITE("io") {
  TEST_CASE("graph JSON round trip") {
    const auto j = Json::parse(R"({"vertices": 2, "edges": [[0,0],[0,1],[1,1]], "coloring": [0,1]})");
    const auto spec = graph_from_json(j);
    CHECK(spec.graph.num_edges() == 3);
    REQUIRE(spec.coloring);
    CHECK(spec.coloring->parity() == 1);
    const auto back = graph_from_json(graph_to_json(spec.graph, spec.coloring));
    CHECK(back.graph == spec.graph);
    CHECK(back.coloring == spec.coloring);
    CHECK(bridges(spec.graph) == std::vector<EdgeId>{1});
  }

  TEST_CASE("malformed graphs name the problem") {
    CHECK_THROWS_AS(graph_from_json(Json::parse("[1,2]")), StructuralError);
    CHECK_THROWS_WITH_AS(graph_from_json(Json::parse(R"({"edges": []})")), doctest::Contains("vertices"),
                         StructuralError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": 2, "edges": [[0,1],[0,1]]})")), StructuralError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": 2, "edges": [[0,1,2]]})")), StructuralError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": 2, "edges": [[0,1],[0,1],[0,1]], "coloring": [2,0]})")),
                    StructuralError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": 2, "edges": [[0,1],[0,1],[0,1]], "coloring": [1]})")),
                    StructuralError);
  }

  TEST_CASE("half-edge graphs") {
    const auto j = graph_to_json(graphs::theta_with_tail());
    CHECK(j.at("half_edge").is_number_integer());
    CHECK(graph_from_json(j).graph == graphs::theta_with_tail());
  }

  TEST_CASE("builtin names") {
    CHECK(named_graph("theta") == graphs::theta());
    CHECK(named_graph("ladder5") == graphs::ladder(5));
    CHECK(named_graph("k33") == graphs::bipartite_k33());
    CHECK_FALSE(named_graph("ladder"));
    CHECK_FALSE(named_graph("ladderx"));
    CHECK_FALSE(named_graph("cube"));
  }

  TEST_CASE("Laurent polynomial round trip with big coefficients") {
    LaurentPoly p(2);
    p.add_term({1, -1}, mpz_class("123456789012345678901234567890"));
    p.add_term({0, 2}, -3);
    const auto j = laurent_to_json(p);
    CHECK(j.size() == 2);
    CHECK(laurent_from_json(j, 2) == p);
    CHECK_THROWS_AS(laurent_from_json(j, 3), DimensionError);
    CHECK_THROWS(laurent_from_json(Json::parse(R"([{"exp":[0,0],"coef":"x"}])"), 2));
  }

  TEST_CASE("potential JSON") {
    const auto j = potential_to_json(graph_potential(graphs::theta(), Coloring::with_parity(2, 1)));
    CHECK(j.at("genus") == 2);
    CHECK(j.at("parity") == 1);
    CHECK(j.at("terms").size() == 8);
    CHECK(j.at("vertex_terms").size() == 2);
  }

  TEST_CASE("period output is exact") {
    const auto s = period_sequence(graphs::theta(), Coloring::with_parity(2, 1), 8, Engine::kContract);
    const auto j = to_json(s);
    CHECK(j.at("pi")[8] == "343000");
    CHECK(j.at("p")[8] == "1225/144");
    const auto csv = to_csv(s);
    CHECK(csv.rfind("n,pi_n,p_n\n0,1,1\n", 0) == 0);
    CHECK(csv.find("6,8000,100/9") != std::string::npos);
  }

  TEST_CASE("polytope reports serialize") {
    const auto g = graphs::theta();
    const auto c = Coloring::with_parity(2, 1);
    const auto pp = polar_dual(g, c);
    const auto j = to_json(pp);
    CHECK(j.at("polar_vertices").size() == 8);
    CHECK(j.at("duality_ok") == true);
    CHECK(to_json(classify_lattice_points(pp, g)).at("rays") == 8);
    CHECK(to_json(is_terminal(g, c)).at("terminal") == true);
    CHECK(to_json(triangulate_fan(g, c)).at("verdict") == "SMALL");
    CHECK(to_json(pi_n_polytope_points(3)).at("points").size() == 27);
    CHECK(to_json(manon_original(graphs::theta_with_tail())).at("facets_equal") == true);
  }
}
