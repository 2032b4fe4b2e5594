#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "graphpot/graph.hpp"
#include "graphpot/potential.hpp"

namespace graphpot {

enum class Engine { kNaive, kContract, kBoth };

std::string to_string(Engine e);
/// Parses "naive", "contract" or "both"; throws PreconditionError otherwise.
Engine parse_engine(std::string_view name);

/// Constant term of W^n by repeated pruned multiplication.
mpz_class period_naive(const GraphPotential& p, int n);

/// Constant term of W^n by contracting per-vertex exponent tensors along the
/// edges, vertices taken in greedy minimum-frontier order. Exact; agrees with
/// period_naive.
mpz_class period_contract(const TrivalentGraph& g, const Coloring& c, int n);

/// Vertex order used by period_contract and the largest frontier it reaches.
struct ContractionPlan {
  std::vector<VertexId> order;
  int max_frontier = 0;
};
ContractionPlan contraction_plan(const TrivalentGraph& g);

struct PeriodSequence {
  std::string graph_id;  // canonical form of the colored graph, hex encoded
  int genus = 0;
  int parity = 0;
  std::vector<mpz_class> values;  // pi_0 .. pi_N
  Engine engine = Engine::kContract;
};

/// pi_0..pi_max_n. Odd indices, and indices not divisible by 4 for even
/// parity, are filled with zero without being computed.
PeriodSequence period_sequence(const TrivalentGraph& g, const Coloring& c, int max_n,
                               Engine engine);

/// Throws PreconditionError naming the first violated sequence invariant.
void validate(const PeriodSequence& seq);

struct QuantumPeriodSeries {
  int genus = 0;
  int order = 0;                   // truncation order N
  std::vector<mpq_class> p;        // coefficients of G(t): p_d = c_d / d!
  std::vector<mpz_class> c;        // coefficients of the regularized series
  mpq_class radius_bound;          // 1 / (8g - 8)
};

QuantumPeriodSeries quantum_series(const PeriodSequence& seq);

struct GrowthEstimate {
  std::vector<int> indices;   // n = 4k with pi_n != 0
  std::vector<double> roots;  // pi_n^{1/n}
  bool nondecreasing = false; // decided exactly: pi_a^b <= pi_b^a
  bool bounded = false;       // pi_n < (8g-8)^n for every listed n
  int limit = 0;              // 8g - 8
};

GrowthEstimate growth_estimate(const PeriodSequence& seq);

}  // namespace graphpot
