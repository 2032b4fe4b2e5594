#include <algorithm>
#include <functional>
#include <map>

#include "graphpot/error.hpp"
#include "graphpot/graph.hpp"

namespace graphpot {
namespace {

struct Incidence {
  int n = 0;
  std::vector<std::vector<int>> mult;  // off-diagonal edge multiplicities
  std::vector<int> loops, half, color;
  std::vector<std::vector<int>> neighbors;  // distinct, ascending
};

Incidence incidence(const TrivalentGraph& g, const Coloring& c) {
  check_coloring(g, c);
  Incidence inc;
  inc.n = g.num_vertices();
  const auto n = static_cast<std::size_t>(inc.n);
  inc.mult.assign(n, std::vector<int>(n, 0));
  inc.loops.assign(n, 0);
  inc.half.assign(n, 0);
  inc.color.assign(n, 0);
  inc.neighbors.assign(n, {});
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      ++inc.loops[static_cast<std::size_t>(e.u)];
    } else {
      ++inc.mult[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
      ++inc.mult[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)];
    }
  }
  if (g.half_edge()) inc.half[static_cast<std::size_t>(*g.half_edge())] = 1;
  for (std::size_t v = 0; v < n; ++v) {
    inc.color[v] = c.bits[v];
    for (std::size_t w = 0; w < n; ++w) {
      if (inc.mult[v][w] > 0) inc.neighbors[v].push_back(static_cast<int>(w));
    }
  }
  return inc;
}

std::string encode(const Incidence& inc, const std::vector<int>& order) {
  std::string s;
  s.push_back(static_cast<char>(inc.n));
  for (std::size_t p = 0; p < order.size(); ++p) {
    const auto w = static_cast<std::size_t>(order[p]);
    s.push_back(static_cast<char>(inc.color[w]));
    s.push_back(static_cast<char>(inc.loops[w]));
    s.push_back(static_cast<char>(inc.half[w]));
    for (std::size_t q = 0; q < p; ++q) {
      s.push_back(static_cast<char>(inc.mult[w][static_cast<std::size_t>(order[q])]));
    }
  }
  return s;
}

// Minimum encoding over every breadth-first labeling (all roots, all orders of
// newly discovered neighbours). The set of such labelings is invariant under
// isomorphism, so the minimum is a complete invariant.
std::pair<std::string, std::vector<int>> canonical_order(const Incidence& inc) {
  std::string best;
  std::vector<int> best_order;
  std::vector<int> order;
  std::vector<char> labeled(static_cast<std::size_t>(inc.n), 0);

  std::function<void(std::size_t)> explore = [&](std::size_t pos) {
    if (order.size() == static_cast<std::size_t>(inc.n)) {
      std::string s = encode(inc, order);
      if (best_order.empty() || s < best) {
        best = std::move(s);
        best_order = order;
      }
      return;
    }
    if (pos >= order.size()) return;  // disconnected; cannot happen for valid graphs
    const int w = order[pos];
    std::vector<int> fresh;
    for (int x : inc.neighbors[static_cast<std::size_t>(w)]) {
      if (!labeled[static_cast<std::size_t>(x)]) fresh.push_back(x);
    }
    std::sort(fresh.begin(), fresh.end());
    do {
      for (int x : fresh) {
        order.push_back(x);
        labeled[static_cast<std::size_t>(x)] = 1;
      }
      explore(pos + 1);
      for (int x : fresh) {
        order.pop_back();
        labeled[static_cast<std::size_t>(x)] = 0;
      }
    } while (std::next_permutation(fresh.begin(), fresh.end()));
  };

  for (int root = 0; root < inc.n; ++root) {
    order = {root};
    labeled.assign(static_cast<std::size_t>(inc.n), 0);
    labeled[static_cast<std::size_t>(root)] = 1;
    explore(0);
  }
  return {best, best_order};
}

}  // namespace

std::string canonical_form(const TrivalentGraph& g, const Coloring& c) {
  return canonical_order(incidence(g, c)).first;
}

std::pair<TrivalentGraph, Coloring> canonical_relabel(const TrivalentGraph& g, const Coloring& c) {
  const Incidence inc = incidence(g, c);
  const auto order = canonical_order(inc).second;
  std::vector<int> pos(static_cast<std::size_t>(inc.n));
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (int i = 0; i < inc.n; ++i) {
    const auto wi = static_cast<std::size_t>(order[static_cast<std::size_t>(i)]);
    for (int k = 0; k < inc.loops[wi]; ++k) edges.push_back({i, i});
    for (int j = i + 1; j < inc.n; ++j) {
      const auto wj = static_cast<std::size_t>(order[static_cast<std::size_t>(j)]);
      for (int k = 0; k < inc.mult[wi][wj]; ++k) edges.push_back({i, j});
    }
  }
  std::optional<VertexId> half;
  if (g.half_edge()) half = pos[static_cast<std::size_t>(*g.half_edge())];
  Coloring out;
  for (int i = 0; i < inc.n; ++i) {
    out.bits.push_back(c.bits[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
  }
  return {TrivalentGraph(inc.n, std::move(edges), half), std::move(out)};
}

std::optional<GraphIsoCertificate> find_isomorphism(const TrivalentGraph& a, const Coloring& ca,
                                                    const TrivalentGraph& b, const Coloring& cb) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return std::nullopt;
  const auto [sa, oa] = canonical_order(incidence(a, ca));
  const auto [sb, ob] = canonical_order(incidence(b, cb));
  if (sa != sb) return std::nullopt;
  GraphIsoCertificate cert;
  cert.vertex_map.assign(static_cast<std::size_t>(a.num_vertices()), -1);
  for (std::size_t i = 0; i < oa.size(); ++i) cert.vertex_map[static_cast<std::size_t>(oa[i])] = ob[i];
  std::vector<char> used(static_cast<std::size_t>(b.num_edges()), 0);
  for (const Edge& e : a.edges()) {
    const VertexId x = cert.vertex_map[static_cast<std::size_t>(e.u)];
    const VertexId y = cert.vertex_map[static_cast<std::size_t>(e.v)];
    EdgeId hit = -1;
    for (EdgeId f = 0; f < b.num_edges(); ++f) {
      const Edge& fe = b.edge(f);
      if (used[static_cast<std::size_t>(f)]) continue;
      if ((fe.u == x && fe.v == y) || (fe.u == y && fe.v == x)) {
        hit = f;
        break;
      }
    }
    if (hit < 0) return std::nullopt;
    used[static_cast<std::size_t>(hit)] = 1;
    cert.edge_map.push_back(hit);
  }
  return cert;
}

bool verify_isomorphism(const TrivalentGraph& a, const Coloring& ca, const TrivalentGraph& b,
                        const Coloring& cb, const GraphIsoCertificate& cert) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  if (cert.vertex_map.size() != static_cast<std::size_t>(a.num_vertices()) ||
      cert.edge_map.size() != static_cast<std::size_t>(a.num_edges())) {
    return false;
  }
  std::vector<char> vseen(static_cast<std::size_t>(b.num_vertices()), 0);
  for (VertexId v = 0; v < a.num_vertices(); ++v) {
    const VertexId w = cert.vertex_map[static_cast<std::size_t>(v)];
    if (w < 0 || w >= b.num_vertices() || vseen[static_cast<std::size_t>(w)]) return false;
    vseen[static_cast<std::size_t>(w)] = 1;
    if (ca.bits[static_cast<std::size_t>(v)] != cb.bits[static_cast<std::size_t>(w)]) return false;
  }
  if (a.half_edge().has_value() != b.half_edge().has_value()) return false;
  if (a.half_edge() &&
      cert.vertex_map[static_cast<std::size_t>(*a.half_edge())] != *b.half_edge()) {
    return false;
  }
  std::vector<char> eseen(static_cast<std::size_t>(b.num_edges()), 0);
  for (EdgeId e = 0; e < a.num_edges(); ++e) {
    const EdgeId f = cert.edge_map[static_cast<std::size_t>(e)];
    if (f < 0 || f >= b.num_edges() || eseen[static_cast<std::size_t>(f)]) return false;
    eseen[static_cast<std::size_t>(f)] = 1;
    const VertexId x = cert.vertex_map[static_cast<std::size_t>(a.edge(e).u)];
    const VertexId y = cert.vertex_map[static_cast<std::size_t>(a.edge(e).v)];
    const Edge& fe = b.edge(f);
    if (!((fe.u == x && fe.v == y) || (fe.u == y && fe.v == x))) return false;
  }
  return true;
}

std::vector<TrivalentGraph> enumerate_trivalent(int genus) {
  if (genus < 2 || genus > 5) throw RangeError("enumeration supports genus 2..5");
  const int n = 2 * genus - 2;
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> free_stubs(un, 3), loops(un, 0), touched(un, 0), last_partner(un, 0);
  std::vector<std::vector<int>> mult(un, std::vector<int>(un, 0));
  int next_untouched = 1;
  touched[0] = 1;
  std::map<std::string, TrivalentGraph> found;
  const Coloring blank = Coloring::with_parity(n, 0);

  // Stub pairing in breadth-first label order: the lowest vertex with free stubs
  // is always paired next, partners are non-decreasing, and an untouched partner
  // must be the next fresh label. Every connected graph has such a labeling.
  std::function<void()> rec = [&]() {
    int v = 0;
    while (v < n && free_stubs[static_cast<std::size_t>(v)] == 0) ++v;
    if (v == n) {
      std::vector<Edge> edges;
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < loops[static_cast<std::size_t>(i)]; ++k) edges.push_back({i, i});
        for (int j = i + 1; j < n; ++j) {
          for (int k = 0; k < mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; ++k) {
            edges.push_back({i, j});
          }
        }
      }
      TrivalentGraph g(n, std::move(edges));
      auto canon = canonical_form(g, blank);
      if (!found.count(canon)) found.emplace(std::move(canon), canonical_relabel(g, blank).first);
      return;
    }
    const auto uv = static_cast<std::size_t>(v);
    if (!touched[uv]) return;
    const int saved_last = last_partner[uv];
    for (int j = std::max(v, saved_last); j < n; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      if (j == v) {
        if (free_stubs[uv] < 2) continue;
        free_stubs[uv] -= 2;
        ++loops[uv];
        last_partner[uv] = j;
        rec();
        --loops[uv];
        free_stubs[uv] += 2;
      } else if (touched[uj]) {
        if (free_stubs[uj] == 0) continue;
        --free_stubs[uv];
        --free_stubs[uj];
        ++mult[uv][uj];
        ++mult[uj][uv];
        last_partner[uv] = j;
        rec();
        --mult[uv][uj];
        --mult[uj][uv];
        ++free_stubs[uv];
        ++free_stubs[uj];
      } else if (j == next_untouched) {
        touched[uj] = 1;
        ++next_untouched;
        --free_stubs[uv];
        --free_stubs[uj];
        ++mult[uv][uj];
        ++mult[uj][uv];
        last_partner[uv] = j;
        rec();
        --mult[uv][uj];
        --mult[uj][uv];
        ++free_stubs[uv];
        ++free_stubs[uj];
        --next_untouched;
        touched[uj] = 0;
      }
    }
    last_partner[uv] = saved_last;
  };
  rec();

  std::vector<TrivalentGraph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace graphpot
