#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "graphpot/graph.hpp"
#include "graphpot/laurent.hpp"
#include "graphpot/periods.hpp"
#include "graphpot/polytope.hpp"
#include "graphpot/potential.hpp"

namespace graphpot {

using Json = nlohmann::json;

struct GraphSpec {
  TrivalentGraph graph;
  std::optional<Coloring> coloring;
};

/// {"vertices": N, "edges": [[u,v],...], "half_edge": u|null, "coloring": [0|1,...]}.
/// "half_edge" and "coloring" are optional. Throws StructuralError naming the
/// first violated invariant.
GraphSpec graph_from_json(const Json& j);
Json graph_to_json(const TrivalentGraph& g, const std::optional<Coloring>& c = std::nullopt);

/// Builtin graphs by name: theta, dumbbell, tetrahedron, k33, theta_with_tail,
/// ladder<g> (e.g. ladder4). Returns nullopt for an unknown name.
std::optional<TrivalentGraph> named_graph(const std::string& name);

/// [{"exp": [...], "coef": "decimal"}], terms in exponent order.
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j, int num_vars);

Json potential_to_json(const GraphPotential& p);

Json to_json(const PeriodSequence& s);
/// Header "n,pi_n,p_n"; p_n = pi_n / n! as an exact fraction.
std::string to_csv(const PeriodSequence& s);
Json to_json(const QuantumPeriodSeries& q);
Json to_json(const GrowthEstimate& g);

Json to_json(const RationalPoint& p);
Json to_json(const PolytopePair& pp);
Json to_json(const LatticePointReport& r);
Json to_json(const TerminalityReport& r);
Json to_json(const TriangulationReport& r);
Json to_json(const ManonReport& r);
Json to_json(const PiNReport& r);

std::string rational_string(const mpq_class& q);

}  // namespace graphpot
