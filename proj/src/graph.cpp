#include "graphpot/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "graphpot/error.hpp"

namespace graphpot {

TrivalentGraph::TrivalentGraph(int num_vertices, std::vector<Edge> edges,
                               std::optional<VertexId> half_edge)
    : num_vertices_(num_vertices), edges_(std::move(edges)), half_edge_(half_edge) {
  if (num_vertices_ < 1) throw StructuralError("graph must have at least one vertex");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= num_vertices_ || e.v < 0 || e.v >= num_vertices_) {
      std::ostringstream os;
      os << "edge " << i << " has an endpoint outside 0.." << num_vertices_ - 1;
      throw StructuralError(os.str());
    }
  }
  if (half_edge_ && (*half_edge_ < 0 || *half_edge_ >= num_vertices_)) {
    throw StructuralError("half-edge vertex out of range");
  }

  std::vector<int> degree(static_cast<std::size_t>(num_vertices_), 0);
  for (const Edge& e : edges_) {
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  if (half_edge_) ++degree[static_cast<std::size_t>(*half_edge_)];
  for (int v = 0; v < num_vertices_; ++v) {
    if (degree[static_cast<std::size_t>(v)] != 3) {
      std::ostringstream os;
      os << "vertex " << v << " has incidence " << degree[static_cast<std::size_t>(v)]
         << ", expected 3 (loops count twice)";
      throw StructuralError(os.str());
    }
  }
  if (!is_connected(num_vertices_, edges_)) throw StructuralError("graph is not connected");
  if (num_edges() - num_vertices_ + 1 < 2) throw StructuralError("genus must be at least 2");

  slots_.assign(static_cast<std::size_t>(num_vertices_), {0, 0, 0});
  std::vector<int> fill(static_cast<std::size_t>(num_vertices_), 0);
  auto push = [&](VertexId v, EdgeId e) {
    slots_[static_cast<std::size_t>(v)][static_cast<std::size_t>(fill[static_cast<std::size_t>(v)]++)] = e;
  };
  for (EdgeId e = 0; e < num_edges(); ++e) {
    push(edges_[static_cast<std::size_t>(e)].u, e);
    push(edges_[static_cast<std::size_t>(e)].v, e);
  }
  if (half_edge_) push(*half_edge_, kHalfEdgeSlot);
}

int TrivalentGraph::num_loops() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [](const Edge& e) { return e.is_loop(); }));
}

VertexId TrivalentGraph::other_end(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw PreconditionError("vertex is not an endpoint of the edge");
}

int Coloring::parity() const {
  int p = 0;
  for (auto b : bits) p ^= (b & 1);
  return p;
}

Coloring Coloring::with_parity(int num_vertices, int parity) {
  Coloring c;
  c.bits.assign(static_cast<std::size_t>(num_vertices), 0);
  if ((parity & 1) && num_vertices > 0) c.bits[0] = 1;
  return c;
}

void check_coloring(const TrivalentGraph& g, const Coloring& c) {
  if (c.size() != g.num_vertices()) {
    throw StructuralError("coloring length differs from the vertex count");
  }
  for (auto b : c.bits) {
    if (b > 1) throw StructuralError("coloring values must be 0 or 1");
  }
}

int genus(const TrivalentGraph& g) { return g.num_edges() - g.num_vertices() + 1; }

bool is_connected(int num_vertices, const std::vector<Edge>& edges) {
  if (num_vertices <= 0) return false;
  std::vector<int> parent(static_cast<std::size_t>(num_vertices));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int components = num_vertices;
  for (const Edge& e : edges) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<EdgeId> bridges(const TrivalentGraph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(static_cast<std::size_t>(n));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) continue;
    adj[static_cast<std::size_t>(ed.u)].push_back({ed.v, e});
    adj[static_cast<std::size_t>(ed.v)].push_back({ed.u, e});
  }
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> out;
  int timer = 0;
  // Parent is tracked by edge id so that parallel edges are not mistaken for bridges.
  std::function<void(VertexId, EdgeId)> dfs = [&](VertexId v, EdgeId via) {
    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
    for (auto [w, e] : adj[static_cast<std::size_t>(v)]) {
      if (e == via) continue;
      if (disc[static_cast<std::size_t>(w)] < 0) {
        dfs(w, e);
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
        if (low[static_cast<std::size_t>(w)] > disc[static_cast<std::size_t>(v)]) out.push_back(e);
      } else {
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
      }
    }
  };
  dfs(0, -1);
  std::sort(out.begin(), out.end());
  return out;
}

HalfEdgeRemoval remove_half_edge(const TrivalentGraph& g) {
  if (!g.half_edge()) throw PreconditionError("graph has no half-edge");
  const VertexId v = *g.half_edge();
  std::vector<EdgeId> others;
  for (EdgeId s : g.slots(v)) {
    if (s != kHalfEdgeSlot) others.push_back(s);
  }
  const EdgeId e1 = others[0], e2 = others[1];
  if (e1 == e2) throw PreconditionError("half-edge vertex carries a loop");
  const VertexId v1 = g.other_end(e1, v), v2 = g.other_end(e2, v);

  std::vector<VertexId> vmap(static_cast<std::size_t>(g.num_vertices()), -1);
  for (VertexId w = 0, next = 0; w < g.num_vertices(); ++w) {
    if (w != v) vmap[static_cast<std::size_t>(w)] = next++;
  }
  auto relabel = [&](VertexId w) { return vmap[static_cast<std::size_t>(w)]; };

  std::vector<Edge> edges;
  std::vector<EdgeId> emap(static_cast<std::size_t>(g.num_edges()), -1);
  EdgeId merged = -1;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (e == e2) continue;
    emap[static_cast<std::size_t>(e)] = static_cast<EdgeId>(edges.size());
    if (e == e1) {
      merged = static_cast<EdgeId>(edges.size());
      edges.push_back({relabel(v1), relabel(v2)});
    } else {
      edges.push_back({relabel(g.edge(e).u), relabel(g.edge(e).v)});
    }
  }
  TrivalentGraph out(g.num_vertices() - 1, std::move(edges));
  Coloring c = Coloring::with_parity(out.num_vertices(), 0);
  c.bits[static_cast<std::size_t>(relabel(v1))] = 1;
  return HalfEdgeRemoval{std::move(out), std::move(c), v,      e1,  e2, relabel(v1),
                         merged,         std::move(emap), std::move(vmap)};
}

std::pair<TrivalentGraph, Coloring> elementary_transformation(const TrivalentGraph& g,
                                                              const Coloring& c, EdgeId e) {
  check_coloring(g, c);
  if (e < 0 || e >= g.num_edges()) throw PreconditionError("edge id out of range");
  const Edge& ed = g.edge(e);
  if (ed.is_loop()) throw UnsupportedMoveError("elementary transformation along a loop");
  const VertexId v1 = ed.u, v2 = ed.v;
  for (VertexId w : {v1, v2}) {
    for (EdgeId s : g.slots(w)) {
      if (s == kHalfEdgeSlot) throw UnsupportedMoveError("endpoint carries the half-edge");
    }
  }
  auto others = [&](VertexId w) {
    std::vector<EdgeId> out;
    bool skipped = false;
    for (EdgeId s : g.slots(w)) {
      if (s == e && !skipped) {
        skipped = true;
        continue;
      }
      out.push_back(s);
    }
    return out;
  };
  const auto ab = others(v1);
  auto cd = others(v2);
  // v1 keeps a and takes c; pair a with an edge other than itself when possible.
  if (cd[0] == ab[0] && cd[1] != ab[0]) std::swap(cd[0], cd[1]);
  const EdgeId b = ab[1], cc = cd[0];

  std::vector<Edge> edges = g.edges();
  auto move_end = [&](EdgeId f, VertexId from, VertexId to) {
    Edge& x = edges[static_cast<std::size_t>(f)];
    if (x.u == from) {
      x.u = to;
    } else if (x.v == from) {
      x.v = to;
    } else {
      throw StructuralError("internal: rewiring lost track of an edge end");
    }
  };
  move_end(b, v1, v2);
  move_end(cc, v2, v1);
  TrivalentGraph out(g.num_vertices(), std::move(edges), g.half_edge());
  return {std::move(out), c};
}

namespace graphs {

TrivalentGraph theta() { return TrivalentGraph(2, {{0, 1}, {0, 1}, {0, 1}}); }

TrivalentGraph dumbbell() { return TrivalentGraph(2, {{0, 1}, {0, 0}, {1, 1}}); }

TrivalentGraph ladder(int genus) {
  if (genus < 3) throw RangeError("ladder graphs need genus >= 3");
  const int cols = genus - 1;
  // bottom row 0..cols-1, top row cols..2cols-1
  std::vector<Edge> edges;
  auto top = [&](int i) { return cols + i; };
  edges.push_back({0, top(0)});
  edges.push_back({0, top(0)});
  for (int i = 1; i + 1 < cols; ++i) edges.push_back({i, top(i)});
  edges.push_back({cols - 1, top(cols - 1)});
  edges.push_back({cols - 1, top(cols - 1)});
  for (int i = 0; i + 1 < cols; ++i) {
    edges.push_back({i, i + 1});
    edges.push_back({top(i), top(i + 1)});
  }
  return TrivalentGraph(2 * cols, std::move(edges));
}

TrivalentGraph tetrahedron() {
  return TrivalentGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TrivalentGraph bipartite_k33() {
  std::vector<Edge> edges;
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) edges.push_back({i, j});
  }
  return TrivalentGraph(6, std::move(edges));
}

TrivalentGraph theta_with_tail() {
  return TrivalentGraph(3, {{0, 1}, {0, 2}, {1, 2}, {1, 2}}, 0);
}

TrivalentGraph tetrahedron_with_tail() {
  return TrivalentGraph(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, 0);
}

}  // namespace graphs

}  // namespace graphpot
