#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace graphpot {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Slot value marking the dangling half-edge in TrivalentGraph::slots().
inline constexpr EdgeId kHalfEdgeSlot = -1;

/// Connected multigraph in which every vertex has incidence 3. Loops count
/// twice, the optional half-edge once. Immutable after construction; the
/// constructor throws StructuralError naming the first violated invariant.
class TrivalentGraph {
 public:
  TrivalentGraph(int num_vertices, std::vector<Edge> edges,
                 std::optional<VertexId> half_edge = std::nullopt);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::optional<VertexId> half_edge() const { return half_edge_; }
  bool is_closed() const { return !half_edge_.has_value(); }

  /// The three incidence slots of `v` in edge-list order. A loop occupies two
  /// slots, the half-edge occupies one slot holding kHalfEdgeSlot.
  const std::array<EdgeId, 3>& slots(VertexId v) const {
    return slots_.at(static_cast<std::size_t>(v));
  }

  int num_loops() const;
  VertexId other_end(EdgeId e, VertexId v) const;

  friend bool operator==(const TrivalentGraph&, const TrivalentGraph&) = default;

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::optional<VertexId> half_edge_;
  std::vector<std::array<EdgeId, 3>> slots_;
};

/// Vertex coloring with values in F2.
struct Coloring {
  std::vector<std::uint8_t> bits;

  int parity() const;
  int size() const { return static_cast<int>(bits.size()); }

  /// All vertices uncolored for parity 0, vertex 0 colored for parity 1.
  static Coloring with_parity(int num_vertices, int parity);

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Throws StructuralError unless `c` is a coloring of `g`.
void check_coloring(const TrivalentGraph& g, const Coloring& c);

struct GraphIsoCertificate {
  std::vector<VertexId> vertex_map;  // vertex of the first graph -> vertex of the second
  std::vector<EdgeId> edge_map;      // edge of the first graph -> edge of the second
};

/// #E - #V + 1, not counting the half-edge.
int genus(const TrivalentGraph& g);

bool is_connected(int num_vertices, const std::vector<Edge>& edges);

/// Separating edges, ascending by id.
std::vector<EdgeId> bridges(const TrivalentGraph& g);

struct HalfEdgeRemoval {
  TrivalentGraph graph;
  Coloring coloring;
  VertexId removed_vertex;          // half-edge vertex of the input graph
  EdgeId first_edge, second_edge;   // e1, e2 in the input graph
  VertexId colored_vertex;          // endpoint of e1, in output ids
  EdgeId merged_edge;               // id of e_{1,2} in the output graph
  std::vector<EdgeId> edge_map;     // input edge -> output edge, -1 for e2
  std::vector<VertexId> vertex_map; // input vertex -> output vertex, -1 for the removed one
};

/// Deletes the half-edge vertex and joins its two neighbours by one edge.
HalfEdgeRemoval remove_half_edge(const TrivalentGraph& g);

/// IH-move along the non-loop edge `e`. Vertex ids, edge ids and colors are
/// kept; only the endpoints of the rewired edges change.
std::pair<TrivalentGraph, Coloring> elementary_transformation(const TrivalentGraph& g,
                                                              const Coloring& c, EdgeId e);

/// All connected trivalent multigraphs of the given genus (2..5) up to
/// isomorphism, sorted by canonical form.
std::vector<TrivalentGraph> enumerate_trivalent(int genus);

/// Byte string that is equal for two colored graphs iff they are isomorphic.
std::string canonical_form(const TrivalentGraph& g, const Coloring& c);

/// Relabels `g` into the vertex order realizing its canonical form.
std::pair<TrivalentGraph, Coloring> canonical_relabel(const TrivalentGraph& g, const Coloring& c);

std::optional<GraphIsoCertificate> find_isomorphism(const TrivalentGraph& a, const Coloring& ca,
                                                    const TrivalentGraph& b, const Coloring& cb);

bool verify_isomorphism(const TrivalentGraph& a, const Coloring& ca, const TrivalentGraph& b,
                        const Coloring& cb, const GraphIsoCertificate& cert);

/// Named graphs used throughout the tests and the CLI.
namespace graphs {

/// Two vertices joined by three parallel edges.
TrivalentGraph theta();
/// Edges: 0 = bridge (0,1), 1 = loop at 0, 2 = loop at 1.
TrivalentGraph dumbbell();
/// Ladder with genus-1 columns; double rungs at both ends. genus >= 3.
TrivalentGraph ladder(int genus);
/// Complete graph on four vertices (genus 3).
TrivalentGraph tetrahedron();
/// K_{3,3} (genus 4).
TrivalentGraph bipartite_k33();
/// Genus-2 half-edge graph: vertex 0 carries the half-edge and edges to 1 and 2,
/// which are joined by two parallel edges.
TrivalentGraph theta_with_tail();
/// Genus-3 half-edge graph; removing the half-edge gives the tetrahedron.
TrivalentGraph tetrahedron_with_tail();

}  // namespace graphs

}  // namespace graphpot
