#include "graphpot/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "graphpot/error.hpp"
#include "graphpot/potential.hpp"

namespace graphpot {

namespace {

void require_closed(const TrivalentGraph& g, const char* what) {
  if (!g.is_closed()) throw PreconditionError(std::string(what) + " needs a graph without half-edge");
}

}  // namespace

// ---------------------------------------------------------------------------
// Lattices

LatticeSystem::LatticeSystem(const TrivalentGraph& g) : num_edges_(g.num_edges()) {
  require_closed(g, "lattice_system");
  const auto E = static_cast<std::size_t>(num_edges_);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    slots_.push_back(g.slots(v));
    std::vector<std::uint8_t> row(E, 0);
    for (EdgeId e : g.slots(v)) row[static_cast<std::size_t>(e)] ^= 1;  // a loop cancels
    coboundary_.push_back(std::move(row));
  }

  // Row-reduce over F2.
  auto rows = coboundary_;
  std::size_t r = 0;
  for (std::size_t c = 0; c < E && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i][c]) {
        for (std::size_t j = 0; j < E; ++j) rows[i][j] ^= rows[r][j];
      }
    }
    image_pivots_.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(r);
  image_basis_ = std::move(rows);

  // Fundamental cycles of a BFS spanning tree.
  const auto V = static_cast<std::size_t>(g.num_vertices());
  std::vector<int> parent_edge(V, -1), depth(V, -1);
  std::vector<bool> tree(E, false);
  std::queue<VertexId> q;
  depth[0] = 0;
  q.push(0);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (EdgeId e : g.slots(v)) {
      VertexId w = g.other_end(e, v);
      if (depth[static_cast<std::size_t>(w)] < 0) {
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
        parent_edge[static_cast<std::size_t>(w)] = e;
        tree[static_cast<std::size_t>(e)] = true;
        q.push(w);
      }
    }
  }
  for (EdgeId e = 0; e < num_edges_; ++e) {
    if (tree[static_cast<std::size_t>(e)]) continue;
    std::vector<std::uint8_t> z(E, 0);
    z[static_cast<std::size_t>(e)] = 1;
    VertexId a = g.edge(e).u, b = g.edge(e).v;
    while (a != b) {
      if (depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)]) std::swap(a, b);
      EdgeId pe = parent_edge[static_cast<std::size_t>(a)];
      z[static_cast<std::size_t>(pe)] ^= 1;
      a = g.other_end(pe, a);
    }
    cycle_basis_.push_back(std::move(z));
  }
}

bool LatticeSystem::contains(std::span<const long long> v) const {
  if (static_cast<int>(v.size()) != num_edges_) throw DimensionError("lattice membership: dimension");
  std::vector<std::uint8_t> x(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) x[i] = static_cast<std::uint8_t>(v[i] & 1);
  for (std::size_t r = 0; r < image_basis_.size(); ++r) {
    if (x[static_cast<std::size_t>(image_pivots_[r])]) {
      for (std::size_t j = 0; j < x.size(); ++j) x[j] ^= image_basis_[r][j];
    }
  }
  return std::all_of(x.begin(), x.end(), [](std::uint8_t b) { return b == 0; });
}

bool LatticeSystem::contains_via_cycles(std::span<const long long> v) const {
  if (static_cast<int>(v.size()) != num_edges_) throw DimensionError("lattice membership: dimension");
  for (const auto& z : cycle_basis_) {
    long long s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (z[i]) s += v[i];
    if (s & 1) return false;
  }
  return true;
}

bool LatticeSystem::dual_contains(std::span<const mpq_class> w) const {
  if (static_cast<int>(w.size()) != num_edges_) throw DimensionError("dual lattice membership: dimension");
  std::vector<mpz_class> twice;
  for (const auto& x : w) {
    mpq_class t = 2 * x;
    if (t.get_den() != 1) return false;
    twice.push_back(t.get_num());
  }
  for (const auto& s : slots_) {
    mpz_class sum = 0;
    for (EdgeId e : s) sum += twice[static_cast<std::size_t>(e)];
    if (mpz_odd_p(sum.get_mpz_t())) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// P and P°

std::vector<HrepRow> hrep(const TrivalentGraph& g, const Coloring& c) {
  require_closed(g, "hrep");
  check_coloring(g, c);
  std::vector<HrepRow> rows;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& slots = g.slots(v);
    for (const auto& s : sign_vectors(c.bits[static_cast<std::size_t>(v)])) {
      HrepRow row{v, s, IntVec(static_cast<std::size_t>(g.num_edges()), 0)};
      for (std::size_t i = 0; i < 3; ++i) row.normal[static_cast<std::size_t>(slots[i])] += s[i] ? -1 : 1;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

PolytopePair polar_dual(const TrivalentGraph& g, const Coloring& c) {
  PolytopePair pp;
  pp.dim = g.num_edges();
  pp.rows = hrep(g, c);

  std::vector<HalfSpace> ineqs;
  for (const auto& r : pp.rows) {
    ineqs.push_back(HalfSpace{r.normal, -1});
    pp.support.push_back(r.normal);
  }
  std::sort(pp.support.begin(), pp.support.end());
  pp.support.erase(std::unique(pp.support.begin(), pp.support.end()), pp.support.end());

  pp.p_vertices = geom::hrep_vertices(ineqs, pp.dim);
  pp.facet_rows = geom::irredundant(ineqs, pp.p_vertices);
  pp.polar_facets = geom::hull_facets(pp.support);

  // Facets of P° and vertices of P are the same objects.
  std::vector<HalfSpace> from_p;
  for (const auto& v : pp.p_vertices) from_p.push_back(HalfSpace{v.numer, -v.denom});
  std::sort(from_p.begin(), from_p.end());
  pp.duality_ok = from_p == pp.polar_facets;

  for (const auto& s : pp.support) {
    std::vector<IntVec> tight;
    for (const auto& f : pp.polar_facets)
      if (geom::dot(f.normal, s) == f.offset) tight.push_back(f.normal);
    if (!tight.empty() && geom::rank(tight) == pp.dim) pp.polar_vertices.push_back(s);
  }
  return pp;
}

bool in_polar(const PolytopePair& pp, std::span<const long long> x) {
  const IntVec v(x.begin(), x.end());
  for (const auto& f : pp.polar_facets)
    if (geom::dot(f.normal, v) < f.offset) return false;
  return true;
}

std::string export_text(const PolytopePair& pp) {
  std::ostringstream os;
  os << "dim " << pp.dim << "\n";
  for (std::size_t i : pp.facet_rows) {
    os << "ineq";
    for (long long a : pp.rows[i].normal) os << ' ' << a;
    os << " -1\n";
  }
  for (const auto& v : pp.polar_vertices) {
    os << "vertex";
    for (long long a : v) os << ' ' << a;
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Lattice points

std::string to_string(PointKind k) {
  switch (k) {
    case PointKind::kOrigin: return "origin";
    case PointKind::kRay: return "ray";
    case PointKind::kBridge: return "bridge";
    case PointKind::kOther: return "other";
  }
  return "other";
}

LatticePointReport classify_lattice_points(const PolytopePair& pp, const TrivalentGraph& g) {
  const LatticeSystem lat(g);
  LatticePointReport rep;
  rep.genus = genus(g);
  const auto br = bridges(g);
  rep.expected_rays = 8 * rep.genus - 8 - 2 * g.num_loops();
  rep.expected_extra = 2 * static_cast<int>(br.size());

  const auto n = static_cast<std::size_t>(pp.dim);
  IntVec bound(n, 0);
  for (const auto& s : pp.support)
    for (std::size_t i = 0; i < n; ++i) bound[i] = std::max(bound[i], std::llabs(s[i]));

  const std::set<IntVec> vertices(pp.polar_vertices.begin(), pp.polar_vertices.end());
  IntVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bound[i];
  while (true) {
    if (lat.contains(x) && in_polar(pp, x)) {
      LatticePoint lp{x, PointKind::kOther, -1};
      int nonzero = 0;
      std::size_t last = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (x[i] != 0) ++nonzero, last = i;
      if (nonzero == 0) {
        lp.kind = PointKind::kOrigin;
      } else if (vertices.count(x)) {
        lp.kind = PointKind::kRay;
      } else if (nonzero == 1 && std::llabs(x[last]) == 1) {
        lp.kind = PointKind::kBridge;
        lp.edge = static_cast<EdgeId>(last);
      }
      rep.points.push_back(std::move(lp));
    }
    std::size_t i = 0;
    while (i < n && x[i] == bound[i]) x[i] = -bound[i], ++i;
    if (i == n) break;
    ++x[i];
  }
  std::sort(rep.points.begin(), rep.points.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return a.point < b.point; });
  for (const auto& p : rep.points) {
    switch (p.kind) {
      case PointKind::kOrigin: ++rep.num_origin; break;
      case PointKind::kRay: ++rep.num_rays; break;
      case PointKind::kBridge: ++rep.num_bridge_points; break;
      case PointKind::kOther: ++rep.num_other; break;
    }
  }
  rep.counts_consistent = rep.num_origin == 1 && rep.num_rays == rep.expected_rays &&
                          rep.num_bridge_points == rep.expected_extra && rep.num_other == 0;
  return rep;
}

LatticePointReport classify_lattice_points(const TrivalentGraph& g, const Coloring& c) {
  return classify_lattice_points(polar_dual(g, c), g);
}

TerminalityReport is_terminal(const TrivalentGraph& g, const Coloring& c) {
  const auto rep = classify_lattice_points(g, c);
  TerminalityReport t;
  t.bridges = bridges(g);
  t.terminal = true;
  for (const auto& p : rep.points) {
    if (p.kind == PointKind::kBridge || p.kind == PointKind::kOther) {
      t.terminal = false;
      t.witness = p.point;
      break;
    }
  }
  t.criterion_applies = rep.genus >= 3;
  t.criterion_consistent = !t.criterion_applies || t.terminal == t.bridges.empty();
  return t;
}

// ---------------------------------------------------------------------------
// Manon's polytope

namespace {

// a.w + c for weights w; the half-edge slot is the constant 2.
struct Affine {
  IntVec a;
  long long c = 0;
};

HalfSpace as_halfspace(const Affine& f) { return HalfSpace{f.a, -f.c}; }

}  // namespace

ManonReport manon_original(const TrivalentGraph& g) {
  if (g.is_closed()) throw PreconditionError("manon_original needs exactly one half-edge");
  ManonReport rep{.removal = remove_half_edge(g), .dim = 0, .manon_hrep = {}, .image_hrep = {},
                  .image_vertices = {}, .target_vertices = {}};
  const auto E = static_cast<std::size_t>(g.num_edges());
  const auto& rm = rep.removal;
  rep.dim = rm.graph.num_edges();

  auto slot_form = [&](EdgeId e) {
    Affine f{IntVec(E, 0), 0};
    if (e == kHalfEdgeSlot) f.c = 2;
    else f.a[static_cast<std::size_t>(e)] = 1;
    return f;
  };
  auto combine = [&](const Affine& x, long long sx, const Affine& y, long long sy) {
    Affine f{IntVec(E, 0), sx * x.c + sy * y.c};
    for (std::size_t i = 0; i < E; ++i) f.a[i] = sx * x.a[i] + sy * y.a[i];
    return f;
  };

  std::vector<Affine> forms;
  for (std::size_t e = 0; e < E; ++e) {
    Affine f{IntVec(E, 0), 0};
    f.a[e] = 1;
    forms.push_back(f);  // w_e >= 0
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& s = g.slots(v);
    std::array<Affine, 3> x{slot_form(s[0]), slot_form(s[1]), slot_form(s[2])};
    for (int i = 0; i < 3; ++i) {
      // w_j + w_k - w_i >= 0
      forms.push_back(combine(combine(x[(i + 1) % 3], 1, x[(i + 2) % 3], 1), 1, x[i], -1));
    }
    // 4 - (w_1 + w_2 + w_3) >= 0
    Affine sum = combine(combine(x[0], 1, x[1], 1), 1, x[2], 1);
    Affine f = combine(sum, -1, sum, 0);
    f.c += 4;
    forms.push_back(f);
  }
  for (const auto& f : forms) rep.manon_hrep.push_back(as_halfspace(f));

  // The half-edge vertex forces w1 + w2 = 2.
  {
    IntVec s(E, 0);
    s[static_cast<std::size_t>(rm.first_edge)] += 1;
    s[static_cast<std::size_t>(rm.second_edge)] += 1;
    IntVec neg(E);
    for (std::size_t i = 0; i < E; ++i) neg[i] = -s[i];
    bool lower = false, upper = false;
    for (const auto& h : rep.manon_hrep) {
      if (h.normal == s && h.offset == 2) lower = true;
      if (h.normal == neg && h.offset == -2) upper = true;
    }
    rep.slice_forced = lower && upper;
  }

  // w = T(u): w_e = 1 - u_{map(e)}, w_{e2} = 1 - u_m, w_{e1} = 1 + u_m.
  const auto D = static_cast<std::size_t>(rep.dim);
  const EdgeId m = rm.merged_edge;
  std::vector<std::pair<long long, std::size_t>> lin(E);  // w_e = 1 + coef * u_idx
  for (std::size_t e = 0; e < E; ++e) {
    if (static_cast<EdgeId>(e) == rm.first_edge) lin[e] = {1, static_cast<std::size_t>(m)};
    else if (static_cast<EdgeId>(e) == rm.second_edge) lin[e] = {-1, static_cast<std::size_t>(m)};
    else lin[e] = {-1, static_cast<std::size_t>(rm.edge_map[e])};
  }
  for (const auto& f : forms) {
    IntVec a(D, 0);
    long long c = f.c;
    for (std::size_t e = 0; e < E; ++e) {
      c += f.a[e];
      a[lin[e].second] += f.a[e] * lin[e].first;
    }
    if (std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; })) {
      if (c < 0) throw Error("manon_original: inconsistent constant inequality");
      continue;
    }
    rep.image_hrep.push_back(HalfSpace{std::move(a), -c});
  }

  rep.image_vertices = geom::hrep_vertices(rep.image_hrep, rep.dim);
  const PolytopePair target = polar_dual(rm.graph, rm.coloring);
  rep.target_vertices = target.p_vertices;
  rep.vertices_equal = rep.image_vertices == rep.target_vertices;

  auto facet_set = [](const std::vector<HalfSpace>& hs, const std::vector<RationalPoint>& vs) {
    std::vector<std::pair<std::vector<mpq_class>, mpq_class>> out;
    for (std::size_t i : geom::irredundant(hs, vs)) out.push_back(geom::normalized(hs[i]));
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<HalfSpace> target_hs;
  for (const auto& r : target.rows) target_hs.push_back(HalfSpace{r.normal, -1});
  rep.facets_equal =
      facet_set(rep.image_hrep, rep.image_vertices) == facet_set(target_hs, target.p_vertices);

  // Integer weights in the polytope: Manon's parity lattice <-> 2 M of the closed graph.
  const LatticeSystem lat(rm.graph);
  bool ok = true;
  IntVec w(E, 0);
  while (true) {
    bool inside = true;
    for (const auto& h : rep.manon_hrep)
      if (geom::dot(h.normal, w) < h.offset) { inside = false; break; }
    if (inside) {
      ++rep.lattice_points_checked;
      bool manon_parity = true;
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        long long s = 0;
        for (EdgeId e : g.slots(v)) s += e == kHalfEdgeSlot ? 2 : w[static_cast<std::size_t>(e)];
        if (s & 1) manon_parity = false;
      }
      std::vector<mpq_class> half(D);
      IntVec u(D);
      for (std::size_t e = 0; e < E; ++e) {
        if (static_cast<EdgeId>(e) == rm.first_edge) continue;
        std::size_t idx = lin[e].second;
        half[idx] = mpq_class(static_cast<long>(w[e]), 2);
        u[idx] = (w[e] - 1) * lin[e].first;  // inverse of w = 1 + coef * u
      }
      if (manon_parity != lat.dual_contains(half)) ok = false;
      // Round trip u -> w and membership of u in P.
      for (std::size_t e = 0; e < E; ++e)
        if (1 + lin[e].first * u[lin[e].second] != w[e]) ok = false;
      for (const auto& h : target_hs)
        if (geom::dot(h.normal, u) < h.offset) ok = false;
    }
    std::size_t i = 0;
    while (i < E && w[i] == 2) w[i] = 0, ++i;
    if (i == E) break;
    ++w[i];
  }
  rep.lattice_round_trip = ok && rep.lattice_points_checked > 0;
  return rep;
}

// ---------------------------------------------------------------------------
// conv{±e_i ± e_j ± e_k}

PiNReport pi_n_polytope_points(int n) {
  if (n < 3 || n > 4) throw RangeError("pi_n_polytope_points supports n = 3 and 4");
  PiNReport rep;
  rep.n = n;
  const auto N = static_cast<std::size_t>(n);
  std::vector<IntVec> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int s = 0; s < 8; ++s) {
          IntVec v(N, 0);
          v[static_cast<std::size_t>(i)] = (s & 1) ? -1 : 1;
          v[static_cast<std::size_t>(j)] = (s & 2) ? -1 : 1;
          v[static_cast<std::size_t>(k)] = (s & 4) ? -1 : 1;
          gens.push_back(v);
        }
  std::sort(gens.begin(), gens.end());
  const auto facets = geom::hull_facets(gens);
  for (const auto& p : gens) {
    std::vector<IntVec> tight;
    for (const auto& f : facets)
      if (geom::dot(f.normal, p) == f.offset) tight.push_back(f.normal);
    if (geom::rank(tight) == n) rep.vertices.push_back(p);
  }

  rep.only_expected = true;
  IntVec x(N, -2);
  while (true) {
    bool inside = std::all_of(facets.begin(), facets.end(),
                              [&](const HalfSpace& f) { return geom::dot(f.normal, x) >= f.offset; });
    if (inside) {
      rep.points.push_back(x);
      int w = 0;
      bool units = true;
      for (long long a : x) {
        if (a != 0) ++w;
        if (std::llabs(a) > 1) units = false;
      }
      if (units && w <= 3) ++rep.by_weight[static_cast<std::size_t>(w)];
      else rep.only_expected = false;
    }
    std::size_t i = 0;
    while (i < N && x[i] == 2) x[i] = -2, ++i;
    if (i == N) break;
    ++x[i];
  }

  rep.separation_ok = true;
  for (const auto& v : rep.vertices) {
    for (const auto& p : rep.points) {
      long long h = geom::dot(v, p);
      if (h > 3 || (h == 3 && p != v)) rep.separation_ok = false;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Triangulations

std::string to_string(SmallVerdict v) {
  switch (v) {
    case SmallVerdict::kSmall: return "SMALL";
    case SmallVerdict::kUnknown: return "UNKNOWN";
    case SmallVerdict::kNo: return "NO";
  }
  return "UNKNOWN";
}

std::vector<std::vector<int>> placing_triangulation(const std::vector<IntVec>& vectors) {
  std::vector<std::vector<int>> tri;
  std::vector<IntVec> placed;
  int current_rank = 0;
  for (int r = 0; r < static_cast<int>(vectors.size()); ++r) {
    const IntVec& p = vectors[static_cast<std::size_t>(r)];
    placed.push_back(p);
    const int new_rank = geom::rank(placed);
    if (tri.empty()) {
      if (new_rank == 1) tri.push_back({r});
      current_rank = new_rank;
      continue;
    }
    if (new_rank > current_rank) {
      for (auto& s : tri) s.push_back(r);
      current_rank = new_rank;
      continue;
    }
    // Facets of the current triangulation lying on its boundary.
    std::map<std::vector<int>, std::pair<int, std::size_t>> facet_count;  // facet -> (count, simplex)
    for (std::size_t si = 0; si < tri.size(); ++si) {
      for (std::size_t drop = 0; drop < tri[si].size(); ++drop) {
        std::vector<int> f;
        for (std::size_t k = 0; k < tri[si].size(); ++k)
          if (k != drop) f.push_back(tri[si][k]);
        std::sort(f.begin(), f.end());
        auto& slot = facet_count[f];
        ++slot.first;
        slot.second = si;
      }
    }
    std::vector<std::vector<int>> added;
    for (const auto& [f, cnt] : facet_count) {
      if (cnt.first != 1) continue;
      const auto& s = tri[cnt.second];
      int opposite = -1;
      for (int x : s)
        if (!std::binary_search(f.begin(), f.end(), x)) opposite = x;
      std::vector<IntVec> basis;
      for (int x : s) basis.push_back(vectors[static_cast<std::size_t>(x)]);
      auto coords = geom::coordinates_in_span(basis, p);
      if (!coords) throw Error("placing triangulation: point outside the current span");
      std::size_t pos = static_cast<std::size_t>(std::find(s.begin(), s.end(), opposite) - s.begin());
      if ((*coords)[pos] < 0) {
        auto ns = f;
        ns.push_back(r);
        added.push_back(std::move(ns));
      }
    }
    for (auto& s : added) tri.push_back(std::move(s));
  }
  for (auto& s : tri) std::sort(s.begin(), s.end());
  std::sort(tri.begin(), tri.end());
  return tri;
}

namespace {

struct Circuit {
  std::uint32_t plus = 0, minus = 0;  // bitmasks over the configuration
};

std::vector<Circuit> circuits(const std::vector<IntVec>& vectors) {
  const int k = static_cast<int>(vectors.size());
  if (k > 20) throw RangeError("circuit enumeration limited to 20 vectors");
  const int d = vectors.empty() ? 0 : static_cast<int>(vectors[0].size());
  std::vector<Circuit> out;
  std::vector<int> rank_of(1u << k, -1);
  auto rk = [&](std::uint32_t mask) {
    if (rank_of[mask] < 0) {
      std::vector<IntVec> rows;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1) rows.push_back(vectors[static_cast<std::size_t>(i)]);
      rank_of[mask] = geom::rank(rows);
    }
    return rank_of[mask];
  };
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    const int size = std::popcount(mask);
    if (size < 2 || size > d + 1) continue;
    if (rk(mask) != size - 1) continue;
    bool minimal = true;
    for (int i = 0; i < k && minimal; ++i)
      if ((mask >> i & 1) && rk(mask & ~(1u << i)) != size - 1) minimal = false;
    if (!minimal) continue;
    const int first = std::countr_zero(mask);
    std::vector<IntVec> basis;
    std::vector<int> idx;
    for (int i = first + 1; i < k; ++i)
      if (mask >> i & 1) basis.push_back(vectors[static_cast<std::size_t>(i)]), idx.push_back(i);
    auto coords = geom::coordinates_in_span(basis, vectors[static_cast<std::size_t>(first)]);
    // v_first - sum coords_i v_i = 0
    Circuit c;
    c.plus |= 1u << first;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if ((*coords)[j] > 0) c.minus |= 1u << idx[j];
      else c.plus |= 1u << idx[j];
    }
    out.push_back(c);
  }
  return out;
}

bool proper(const std::vector<Circuit>& cs, std::uint32_t a, std::uint32_t b) {
  for (const auto& c : cs) {
    if ((c.plus & ~a) == 0 && (c.minus & ~b) == 0) return false;
    if ((c.minus & ~a) == 0 && (c.plus & ~b) == 0) return false;
  }
  return true;
}

mpz_class abs_det(const std::vector<IntVec>& vectors, const std::vector<int>& simplex) {
  std::vector<IntVec> m;
  for (int i : simplex) m.push_back(vectors[static_cast<std::size_t>(i)]);
  return abs(geom::determinant(m));
}

}  // namespace

bool proper_intersection(const std::vector<IntVec>& vectors, const std::vector<int>& a,
                         const std::vector<int>& b) {
  std::vector<int> all(a);
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<IntVec> sub;
  for (int i : all) sub.push_back(vectors[static_cast<std::size_t>(i)]);
  auto mask_of = [&](const std::vector<int>& s) {
    std::uint32_t m = 0;
    for (int i : s) m |= 1u << (std::lower_bound(all.begin(), all.end(), i) - all.begin());
    return m;
  };
  return proper(circuits(sub), mask_of(a), mask_of(b));
}

bool has_unimodular_triangulation(const std::vector<IntVec>& vectors, long long unit) {
  const int k = static_cast<int>(vectors.size());
  const int d = static_cast<int>(vectors.at(0).size());
  mpz_class volume = 0;
  for (const auto& s : placing_triangulation(vectors)) volume += abs_det(vectors, s);
  const mpz_class u(static_cast<long>(unit));
  if (volume % u != 0) return false;
  const long long need = mpz_class(volume / u).get_si();

  std::vector<std::uint32_t> cand;
  std::vector<int> pick;
  std::function<void(int)> choose = [&](int from) {
    if (static_cast<int>(pick.size()) == d) {
      if (abs_det(vectors, pick) == u) {
        std::uint32_t m = 0;
        for (int i : pick) m |= 1u << i;
        cand.push_back(m);
      }
      return;
    }
    for (int i = from; i < k; ++i) {
      pick.push_back(i);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
  if (static_cast<long long>(cand.size()) < need) return false;

  const auto cs = circuits(vectors);
  const std::size_t C = cand.size();
  std::vector<std::vector<bool>> compat(C, std::vector<bool>(C, false));
  for (std::size_t i = 0; i < C; ++i)
    for (std::size_t j = i + 1; j < C; ++j) compat[i][j] = compat[j][i] = proper(cs, cand[i], cand[j]);

  std::vector<std::size_t> clique;
  std::function<bool(std::size_t)> grow = [&](std::size_t from) {
    if (static_cast<long long>(clique.size()) == need) return true;
    for (std::size_t i = from; i < C; ++i) {
      if (static_cast<long long>(clique.size() + (C - i)) < need) return false;
      bool ok = std::all_of(clique.begin(), clique.end(), [&](std::size_t j) { return compat[i][j]; });
      if (!ok) continue;
      clique.push_back(i);
      if (grow(i + 1)) return true;
      clique.pop_back();
    }
    return false;
  };
  return grow(0);
}

std::vector<std::vector<int>> regular_subdivision(const std::vector<IntVec>& vectors,
                                                  const std::vector<long long>& heights) {
  if (vectors.size() != heights.size()) throw DimensionError("regular_subdivision: one height per vector");
  const int d = static_cast<int>(vectors.at(0).size());
  std::vector<IntVec> lifted;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    IntVec r = vectors[i];
    r.push_back(heights[i]);
    lifted.push_back(std::move(r));
  }
  std::vector<std::vector<int>> cells;
  if (geom::rank(lifted) <= d) {  // all heights linear on the cone: one cell
    std::vector<int> all(vectors.size());
    std::iota(all.begin(), all.end(), 0);
    cells.push_back(std::move(all));
    return cells;
  }
  for (const auto& ray : geom::extreme_rays(lifted, d + 1)) {
    if (ray.back() <= 0) continue;  // only lower facets
    std::vector<int> cell;
    for (std::size_t i = 0; i < lifted.size(); ++i)
      if (geom::dot(ray, lifted[i]) == 0) cell.push_back(static_cast<int>(i));
    cells.push_back(std::move(cell));
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

namespace {

struct FanContext {
  const PolytopePair& pp;
  mpz_class unit;
  std::vector<std::vector<int>> cone_rays;  // ascending global ray ids
  std::vector<mpz_class> cone_volume;
};

// Builds the report entry of cone ci from cells given as local indices into
// `order_rays` (the cone's rays in the order the cells refer to).
ConeTriangulation make_cone(const FanContext& fc, std::size_t ci, const std::vector<int>& order_rays,
                            const std::vector<std::vector<int>>& cells) {
  const auto& rays = fc.pp.polar_vertices;
  std::vector<IntVec> vecs;
  for (int i : order_rays) vecs.push_back(rays[static_cast<std::size_t>(i)]);
  const auto& f = fc.pp.polar_facets[ci];
  ConeTriangulation ct;
  ct.facet = RationalPoint{f.normal, -f.offset};
  ct.rays = fc.cone_rays[ci];
  ct.unimodular = true;
  ct.volume = 0;
  const std::size_t d = static_cast<std::size_t>(fc.pp.dim);
  for (const auto& cell : cells) {
    std::vector<std::vector<int>> simplices;
    if (cell.size() == d) {
      simplices.push_back(cell);
    } else {
      // Non-generic heights: refine the cell by placing in ascending ray id.
      std::vector<int> sub(cell);
      std::sort(sub.begin(), sub.end(), [&](int a, int b) {
        return order_rays[static_cast<std::size_t>(a)] < order_rays[static_cast<std::size_t>(b)];
      });
      std::vector<IntVec> sv;
      for (int i : sub) sv.push_back(vecs[static_cast<std::size_t>(i)]);
      for (const auto& s : placing_triangulation(sv)) {
        std::vector<int> local;
        for (int i : s) local.push_back(sub[static_cast<std::size_t>(i)]);
        simplices.push_back(std::move(local));
      }
    }
    for (const auto& s : simplices) {
      std::vector<int> global;
      for (int i : s) global.push_back(order_rays[static_cast<std::size_t>(i)]);
      std::sort(global.begin(), global.end());
      mpz_class det = abs_det(vecs, s);
      if (det != fc.unit) ct.unimodular = false;
      ct.volume += det;
      ct.simplices.push_back(std::move(global));
      ct.determinants.push_back(std::move(det));
    }
  }
  if (!fc.cone_volume.empty() && ct.volume != fc.cone_volume[ci])
    throw Error("triangulation does not cover its cone");
  return ct;
}

long long count_bad(const ConeTriangulation& ct, const mpz_class& unit) {
  long long bad = 0;
  for (const auto& d : ct.determinants)
    if (d != unit) ++bad;
  return bad;
}

std::vector<ConeTriangulation> placing_fan(const FanContext& fc, const std::vector<int>& order) {
  std::vector<int> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<ConeTriangulation> cones;
  for (std::size_t ci = 0; ci < fc.cone_rays.size(); ++ci) {
    auto cr = fc.cone_rays[ci];
    std::sort(cr.begin(), cr.end(), [&](int a, int b) {
      return position[static_cast<std::size_t>(a)] < position[static_cast<std::size_t>(b)];
    });
    std::vector<IntVec> vecs;
    for (int i : cr) vecs.push_back(fc.pp.polar_vertices[static_cast<std::size_t>(i)]);
    cones.push_back(make_cone(fc, ci, cr, placing_triangulation(vecs)));
  }
  return cones;
}

ConeTriangulation regular_cone(const FanContext& fc, std::size_t ci, const std::vector<long long>& heights) {
  const auto& cr = fc.cone_rays[ci];
  std::vector<IntVec> vecs;
  std::vector<long long> h;
  for (int i : cr) {
    vecs.push_back(fc.pp.polar_vertices[static_cast<std::size_t>(i)]);
    h.push_back(heights[static_cast<std::size_t>(i)]);
  }
  return make_cone(fc, ci, cr, regular_subdivision(vecs, h));
}

}  // namespace

TriangulationReport triangulate_fan(const PolytopePair& pp, const LatticeSystem& lat,
                                    const TriangulationOptions& opts) {
  TriangulationReport rep;
  rep.lattice_index = lat.index();
  rep.seed = opts.seed;
  const auto& rays = pp.polar_vertices;
  const int R = static_cast<int>(rays.size());

  FanContext fc{pp, mpz_class(static_cast<long>(rep.lattice_index)), {}, {}};
  for (const auto& f : pp.polar_facets) {
    std::vector<int> cr;
    for (int i = 0; i < R; ++i)
      if (geom::dot(f.normal, rays[static_cast<std::size_t>(i)]) == f.offset) cr.push_back(i);
    fc.cone_rays.push_back(std::move(cr));
  }

  auto total_bad = [&](const std::vector<ConeTriangulation>& cones) {
    long long bad = 0;
    for (const auto& ct : cones) bad += count_bad(ct, fc.unit);
    return bad;
  };

  std::mt19937_64 rng(opts.seed);
  std::vector<int> order(static_cast<std::size_t>(R));
  std::iota(order.begin(), order.end(), 0);

  // Placing triangulations; the lexicographic one also fixes the cone volumes.
  long long best_bad = -1;
  for (int attempt = 0; attempt <= opts.shuffles; ++attempt) {
    if (attempt > 0) std::shuffle(order.begin(), order.end(), rng);
    auto cones = placing_fan(fc, order);
    if (attempt == 0)
      for (const auto& ct : cones) fc.cone_volume.push_back(ct.volume);
    ++rep.orderings_tried;
    const long long bad = total_bad(cones);
    if (best_bad < 0 || bad < best_bad) {
      best_bad = bad;
      rep.cones = std::move(cones);
      rep.method = "placing";
      rep.ray_order = order;
    }
    if (bad == 0) break;
  }

  // A small cone without any unimodular triangulation settles the question.
  if (best_bad > 0) {
    for (auto& ct : rep.cones) {
      if (ct.unimodular || static_cast<int>(ct.rays.size()) > opts.exhaustive_max_rays) continue;
      std::vector<IntVec> vecs;
      for (int i : ct.rays) vecs.push_back(rays[static_cast<std::size_t>(i)]);
      ct.exhaustive_exists = has_unimodular_triangulation(vecs, rep.lattice_index);
      if (!*ct.exhaustive_exists) {
        rep.bad_simplices = best_bad;
        rep.verdict = SmallVerdict::kNo;
        return rep;
      }
    }
  }

  // Local search over height functions: change one height, keep it unless the
  // number of non-unimodular simplices grows.
  if (best_bad > 0 && opts.height_steps > 0) {
    std::vector<long long> heights(static_cast<std::size_t>(R));
    for (auto& h : heights) h = static_cast<long long>(rng() % 1000);
    std::vector<ConeTriangulation> cones;
    for (std::size_t ci = 0; ci < fc.cone_rays.size(); ++ci) cones.push_back(regular_cone(fc, ci, heights));
    long long bad = total_bad(cones);
    auto keep_if_best = [&]() {
      if (bad < best_bad) {
        best_bad = bad;
        rep.cones = cones;
        rep.method = "regular";
        rep.ray_order.clear();
        rep.heights = heights;
      }
    };
    keep_if_best();
    for (int step = 0; step < opts.height_steps && bad > 0; ++step) {
      ++rep.height_steps_used;
      const auto r = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(R));
      const long long old = heights[r];
      heights[r] = static_cast<long long>(rng() % 1000);
      long long next = bad;
      std::vector<std::pair<std::size_t, ConeTriangulation>> changed;
      for (std::size_t ci = 0; ci < fc.cone_rays.size(); ++ci) {
        const auto& cr = fc.cone_rays[ci];
        if (!std::binary_search(cr.begin(), cr.end(), static_cast<int>(r))) continue;
        auto ct = regular_cone(fc, ci, heights);
        next += count_bad(ct, fc.unit) - count_bad(cones[ci], fc.unit);
        changed.emplace_back(ci, std::move(ct));
      }
      if (next <= bad) {
        bad = next;
        for (auto& [ci, ct] : changed) cones[ci] = std::move(ct);
        keep_if_best();
      } else {
        heights[r] = old;
      }
    }
  }

  rep.bad_simplices = best_bad;
  rep.verdict = best_bad == 0 ? SmallVerdict::kSmall : SmallVerdict::kUnknown;
  return rep;
}

TriangulationReport triangulate_fan(const TrivalentGraph& g, const Coloring& c,
                                    const TriangulationOptions& opts) {
  return triangulate_fan(polar_dual(g, c), LatticeSystem(g), opts);
}

}  // namespace graphpot
