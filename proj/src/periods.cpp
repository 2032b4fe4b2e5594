#include "graphpot/periods.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "graphpot/error.hpp"

namespace graphpot {

std::string to_string(Engine e) {
  switch (e) {
    case Engine::kNaive:
      return "naive";
    case Engine::kContract:
      return "contract";
    case Engine::kBoth:
      return "both";
  }
  return "?";
}

Engine parse_engine(std::string_view name) {
  if (name == "naive") return Engine::kNaive;
  if (name == "contract") return Engine::kContract;
  if (name == "both") return Engine::kBoth;
  throw PreconditionError("unknown engine '" + std::string(name) + "'");
}

mpz_class period_naive(const GraphPotential& p, int n) {
  if (n < 0) throw DomainError("negative period index");
  return pow_constant_term(p.poly, n, Pruning::kEnabled);
}

namespace {

constexpr int kMaxFrontier = 16;
using Key = std::array<std::int8_t, kMaxFrontier>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto b : k) {
      h ^= static_cast<std::uint8_t>(b);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// Distinct non-loop edges at each vertex, ascending.
std::vector<std::vector<EdgeId>> open_edges(const TrivalentGraph& g) {
  std::vector<std::vector<EdgeId>> out(static_cast<std::size_t>(g.num_vertices()));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::set<EdgeId> s;
    for (EdgeId e : g.slots(v)) {
      if (e != kHalfEdgeSlot && !g.edge(e).is_loop()) s.insert(e);
    }
    out[static_cast<std::size_t>(v)].assign(s.begin(), s.end());
  }
  return out;
}

// Distribution of W_v^k over the exponents of v's non-loop edges, restricted to
// terms whose loop exponents vanish. Entry [k] lists (exponents, coefficient).
struct VertexTensor {
  std::vector<EdgeId> edges;
  std::vector<std::vector<std::pair<std::vector<int>, mpz_class>>> by_power;
};

VertexTensor vertex_tensor(const TrivalentGraph& g, const Coloring& c, VertexId v,
                           const std::vector<EdgeId>& edges, int n) {
  // Local variables: the non-loop edges first, then loop edges.
  std::vector<EdgeId> local = edges;
  for (EdgeId e : g.slots(v)) {
    if (e != kHalfEdgeSlot && g.edge(e).is_loop() &&
        std::find(local.begin(), local.end(), e) == local.end()) {
      local.push_back(e);
    }
  }
  std::array<EdgeId, 3> slots{};
  for (std::size_t i = 0; i < 3; ++i) {
    const EdgeId e = g.slots(v)[i];
    slots[i] = static_cast<EdgeId>(std::find(local.begin(), local.end(), e) - local.begin());
  }
  const int dim = static_cast<int>(local.size());
  const LaurentPoly wv = vertex_potential(slots, c.bits[static_cast<std::size_t>(v)], dim);

  VertexTensor t;
  t.edges = edges;
  t.by_power.resize(static_cast<std::size_t>(n) + 1);
  LaurentPoly power = LaurentPoly::constant(dim, 1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) power = power * wv;
    for (const auto& [e, coef] : power.terms()) {
      bool loops_vanish = true;
      for (int i = static_cast<int>(edges.size()); i < dim; ++i) loops_vanish = loops_vanish && e[i] == 0;
      if (!loops_vanish) continue;
      std::vector<int> x(edges.size());
      for (std::size_t i = 0; i < edges.size(); ++i) x[i] = e[static_cast<int>(i)];
      t.by_power[static_cast<std::size_t>(k)].push_back({std::move(x), coef});
    }
  }
  return t;
}

}  // namespace

ContractionPlan contraction_plan(const TrivalentGraph& g) {
  const auto open = open_edges(g);
  const int n = g.num_vertices();
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<int> ends_done(static_cast<std::size_t>(g.num_edges()), 0);
  ContractionPlan plan;
  int frontier = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1, best_size = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (done[static_cast<std::size_t>(v)]) continue;
      int size = frontier;
      for (EdgeId e : open[static_cast<std::size_t>(v)]) size += ends_done[static_cast<std::size_t>(e)] ? -1 : 1;
      if (best < 0 || size < best_size) {
        best = v;
        best_size = size;
      }
    }
    done[static_cast<std::size_t>(best)] = 1;
    for (EdgeId e : open[static_cast<std::size_t>(best)]) ++ends_done[static_cast<std::size_t>(e)];
    frontier = best_size;
    plan.order.push_back(best);
    plan.max_frontier = std::max(plan.max_frontier, frontier);
  }
  return plan;
}

mpz_class period_contract(const TrivalentGraph& g, const Coloring& c, int n) {
  check_coloring(g, c);
  if (!g.is_closed()) throw PreconditionError("periods need a graph without half-edge");
  if (n < 0) throw DomainError("negative period index");
  if (n == 0) return 1;
  if (2 * n + 1 > 255) throw RangeError("period index too large for the contraction engine");

  const auto open = open_edges(g);
  const ContractionPlan plan = contraction_plan(g);
  if (plan.max_frontier > kMaxFrontier) throw RangeError("contraction frontier too wide");

  std::vector<std::vector<mpz_class>> binom(static_cast<std::size_t>(n) + 1);
  for (int a = 0; a <= n; ++a) {
    binom[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(a) + 1);
    binom[static_cast<std::size_t>(a)][0] = binom[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = 1;
    for (int b = 1; b < a; ++b) {
      binom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          binom[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b) - 1] +
          binom[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b)];
    }
  }

  // state[k] maps the exponents on the frontier edges to the weighted count of
  // ways to pick k factors from the processed vertices; choosing which of the n
  // factors go to which vertex contributes the binomial weights.
  using StateMap = std::unordered_map<Key, mpz_class, KeyHash>;
  std::vector<StateMap> state(static_cast<std::size_t>(n) + 1);
  state[0][Key{}] = 1;
  std::vector<EdgeId> frontier;

  for (VertexId v : plan.order) {
    const VertexTensor t = vertex_tensor(g, c, v, open[static_cast<std::size_t>(v)], n);
    // Classify v's edges: those already on the frontier close here.
    std::vector<int> close_pos_frontier, close_pos_local, open_pos_local;
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      auto it = std::find(frontier.begin(), frontier.end(), t.edges[i]);
      if (it != frontier.end()) {
        close_pos_frontier.push_back(static_cast<int>(it - frontier.begin()));
        close_pos_local.push_back(static_cast<int>(i));
      } else {
        open_pos_local.push_back(static_cast<int>(i));
      }
    }
    std::vector<EdgeId> next_frontier;
    std::vector<int> keep_pos;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      if (std::find(close_pos_frontier.begin(), close_pos_frontier.end(), static_cast<int>(i)) ==
          close_pos_frontier.end()) {
        keep_pos.push_back(static_cast<int>(i));
        next_frontier.push_back(frontier[i]);
      }
    }
    for (int i : open_pos_local) next_frontier.push_back(t.edges[static_cast<std::size_t>(i)]);

    // Index the tensor entries by their exponents on the closing edges.
    std::vector<std::unordered_map<Key, std::vector<std::size_t>, KeyHash>> index(
        static_cast<std::size_t>(n) + 1);
    for (int kv = 0; kv <= n; ++kv) {
      const auto& entries = t.by_power[static_cast<std::size_t>(kv)];
      for (std::size_t j = 0; j < entries.size(); ++j) {
        Key k{};
        for (std::size_t q = 0; q < close_pos_local.size(); ++q) {
          k[q] = static_cast<std::int8_t>(entries[j].first[static_cast<std::size_t>(close_pos_local[q])]);
        }
        index[static_cast<std::size_t>(kv)][k].push_back(j);
      }
    }

    std::vector<StateMap> next(static_cast<std::size_t>(n) + 1);
    mpz_class weighted;
    for (int k = 0; k <= n; ++k) {
      for (const auto& [key, coef] : state[static_cast<std::size_t>(k)]) {
        Key need{};
        for (std::size_t q = 0; q < close_pos_frontier.size(); ++q) {
          need[q] = static_cast<std::int8_t>(-key[static_cast<std::size_t>(close_pos_frontier[q])]);
        }
        for (int kv = 0; k + kv <= n; ++kv) {
          const int k2 = k + kv;
          const int remaining = n - k2;
          auto hit = index[static_cast<std::size_t>(kv)].find(need);
          if (hit == index[static_cast<std::size_t>(kv)].end()) continue;
          // Kept frontier exponents must still be cancellable.
          bool kept_ok = true;
          for (int p : keep_pos) {
            if (std::abs(key[static_cast<std::size_t>(p)]) > remaining) {
              kept_ok = false;
              break;
            }
          }
          if (!kept_ok) continue;
          weighted = coef * binom[static_cast<std::size_t>(k2)][static_cast<std::size_t>(kv)];
          const auto& entries = t.by_power[static_cast<std::size_t>(kv)];
          for (std::size_t j : hit->second) {
            const auto& [y, tc] = entries[j];
            Key out{};
            std::size_t w = 0;
            for (int p : keep_pos) out[w++] = key[static_cast<std::size_t>(p)];
            bool ok = true;
            for (int i : open_pos_local) {
              const int val = y[static_cast<std::size_t>(i)];
              if (std::abs(val) > remaining) {
                ok = false;
                break;
              }
              out[w++] = static_cast<std::int8_t>(val);
            }
            if (!ok) continue;
            mpz_class& slot = next[static_cast<std::size_t>(k2)][out];
            mpz_addmul(slot.get_mpz_t(), weighted.get_mpz_t(), tc.get_mpz_t());
          }
        }
      }
    }
    state = std::move(next);
    frontier = std::move(next_frontier);
  }
  auto it = state[static_cast<std::size_t>(n)].find(Key{});
  return it == state[static_cast<std::size_t>(n)].end() ? mpz_class(0) : it->second;
}

namespace {

std::string hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

}  // namespace

PeriodSequence period_sequence(const TrivalentGraph& g, const Coloring& c, int max_n,
                               Engine engine) {
  if (max_n < 0) throw DomainError("negative sequence length");
  check_coloring(g, c);
  PeriodSequence seq;
  seq.graph_id = hex(canonical_form(g, c));
  seq.genus = genus(g);
  seq.parity = c.parity();
  seq.engine = engine;
  const GraphPotential pot = graph_potential(g, c);
  for (int n = 0; n <= max_n; ++n) {
    if (n % 2 == 1 || (seq.parity == 0 && n % 4 != 0)) {
      seq.values.emplace_back(0);
      continue;
    }
    switch (engine) {
      case Engine::kNaive:
        seq.values.push_back(period_naive(pot, n));
        break;
      case Engine::kContract:
        seq.values.push_back(period_contract(g, c, n));
        break;
      case Engine::kBoth: {
        mpz_class a = period_naive(pot, n);
        mpz_class b = period_contract(g, c, n);
        if (a != b) {
          throw Error("engines disagree at n=" + std::to_string(n) + ": naive " + a.get_str() +
                      ", contract " + b.get_str());
        }
        seq.values.push_back(a);
        break;
      }
    }
  }
  return seq;
}

void validate(const PeriodSequence& seq) {
  if (seq.values.empty() || seq.values[0] != 1) throw PreconditionError("pi_0 must be 1");
  for (std::size_t n = 0; n < seq.values.size(); ++n) {
    if (seq.values[n] < 0) throw PreconditionError("negative period at n=" + std::to_string(n));
    if (n % 2 == 1 && seq.values[n] != 0) {
      throw PreconditionError("nonzero odd period at n=" + std::to_string(n));
    }
    if (seq.parity == 0 && n % 4 != 0 && seq.values[n] != 0) {
      throw PreconditionError("even-parity period nonzero at n=" + std::to_string(n));
    }
  }
}

QuantumPeriodSeries quantum_series(const PeriodSequence& seq) {
  validate(seq);
  if (seq.genus < 2) throw PreconditionError("genus must be at least 2");
  QuantumPeriodSeries q;
  q.genus = seq.genus;
  q.order = static_cast<int>(seq.values.size()) - 1;
  mpz_class factorial = 1;
  for (std::size_t d = 0; d < seq.values.size(); ++d) {
    if (d > 0) factorial *= static_cast<unsigned long>(d);
    mpq_class p(seq.values[d], factorial);
    p.canonicalize();
    q.p.push_back(p);
    q.c.push_back(seq.values[d]);
  }
  q.radius_bound = mpq_class(1, 8 * seq.genus - 8);
  return q;
}

GrowthEstimate growth_estimate(const PeriodSequence& seq) {
  GrowthEstimate est;
  est.limit = 8 * seq.genus - 8;
  for (std::size_t n = 4; n < seq.values.size(); n += 4) {
    if (seq.values[n] != 0) est.indices.push_back(static_cast<int>(n));
  }
  if (est.indices.size() < 2) throw PreconditionError("growth estimate needs at least two nonzero entries");
  for (int n : est.indices) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, seq.values[static_cast<std::size_t>(n)].get_mpz_t());
    est.roots.push_back(std::exp((std::log(mant) + static_cast<double>(exp) * std::log(2.0)) / n));
  }
  est.nondecreasing = true;
  for (std::size_t i = 0; i + 1 < est.indices.size(); ++i) {
    const int a = est.indices[i], b = est.indices[i + 1];
    mpz_class lhs, rhs;
    mpz_pow_ui(lhs.get_mpz_t(), seq.values[static_cast<std::size_t>(a)].get_mpz_t(), static_cast<unsigned long>(b));
    mpz_pow_ui(rhs.get_mpz_t(), seq.values[static_cast<std::size_t>(b)].get_mpz_t(), static_cast<unsigned long>(a));
    if (lhs > rhs) est.nondecreasing = false;
  }
  est.bounded = true;
  for (int n : est.indices) {
    mpz_class cap;
    mpz_ui_pow_ui(cap.get_mpz_t(), static_cast<unsigned long>(est.limit), static_cast<unsigned long>(n));
    if (seq.values[static_cast<std::size_t>(n)] >= cap) est.bounded = false;
  }
  return est;
}

}  // namespace graphpot
