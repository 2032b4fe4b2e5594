#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphpot/geometry.hpp"
#include "graphpot/graph.hpp"

namespace graphpot {

using geom::HalfSpace;
using geom::IntVec;
using geom::RationalPoint;

/// The lattices Ñ = Z^E ⊇ N ⊇ 2Ñ of a closed graph and the dual M = N^∨.
/// N is the preimage of the image of the F2 coboundary C^0 -> C^1.
class LatticeSystem {
 public:
  explicit LatticeSystem(const TrivalentGraph& g);

  int num_edges() const { return num_edges_; }
  /// F2 coboundary of each vertex (loops map to 0), one row per vertex.
  const std::vector<std::vector<std::uint8_t>>& coboundary() const { return coboundary_; }
  /// Reduced row-echelon basis of the coboundary image.
  const std::vector<std::vector<std::uint8_t>>& image_basis() const { return image_basis_; }
  /// F2 cycle basis (edge indicator vectors).
  const std::vector<std::vector<std::uint8_t>>& cycle_basis() const { return cycle_basis_; }

  int image_dim() const { return static_cast<int>(image_basis_.size()); }
  /// dim_F2 of Ñ/N; equals the genus.
  int quotient_dim() const { return num_edges_ - image_dim(); }
  /// [Ñ : N] = 2^quotient_dim.
  long long index() const { return 1LL << quotient_dim(); }

  /// v ∈ N via reduction against the coboundary image.
  bool contains(std::span<const long long> v) const;
  /// v ∈ N via evenness of <v, Z> on the cycle basis.
  bool contains_via_cycles(std::span<const long long> v) const;
  /// w ∈ M: 2w integral with even sum of 2w over the slots of every vertex.
  bool dual_contains(std::span<const mpq_class> w) const;

 private:
  int num_edges_ = 0;
  std::vector<std::array<EdgeId, 3>> slots_;
  std::vector<std::vector<std::uint8_t>> coboundary_;
  std::vector<std::vector<std::uint8_t>> image_basis_;
  std::vector<int> image_pivots_;
  std::vector<std::vector<std::uint8_t>> cycle_basis_;
};

/// One inequality <normal, u> >= -1 of P, with the vertex and sign vector it comes from.
struct HrepRow {
  VertexId vertex = 0;
  std::array<int, 3> signs{};
  IntVec normal;
};

/// Four rows per vertex, in vertex order, sign vectors as in sign_vectors().
std::vector<HrepRow> hrep(const TrivalentGraph& g, const Coloring& c);

struct PolytopePair {
  int dim = 0;
  std::vector<HrepRow> rows;               // H-rep of P before deduplication
  std::vector<std::size_t> facet_rows;     // rows defining distinct facets of P
  std::vector<RationalPoint> p_vertices;   // vertices of P
  std::vector<IntVec> support;             // distinct points p(v,s), sorted
  std::vector<IntVec> polar_vertices;      // hull vertices of P°, sorted
  std::vector<HalfSpace> polar_facets;     // facets of P°, <a,x> >= b, sorted
  bool duality_ok = false;                 // polar facets of P° == vertices of P
};

/// Builds both sides: P from its H-rep, P° = conv(support) with its facets.
PolytopePair polar_dual(const TrivalentGraph& g, const Coloring& c);

/// True if x lies in P° (checked against the facets).
bool in_polar(const PolytopePair& pp, std::span<const long long> x);

enum class PointKind { kOrigin, kRay, kBridge, kOther };
std::string to_string(PointKind k);

struct LatticePoint {
  IntVec point;
  PointKind kind = PointKind::kOther;
  EdgeId edge = -1;  // for kBridge: the edge b with point = ±e_b
};

struct LatticePointReport {
  int genus = 0;
  std::vector<LatticePoint> points;  // all N-points of P°, sorted
  int num_origin = 0;
  int num_rays = 0;
  int num_bridge_points = 0;
  int num_other = 0;
  int expected_rays = 0;   // 8g - 8 - 2 #loops
  int expected_extra = 0;  // 2 #bridges
  /// Count formulas hold and no "other" points exist; only meaningful for g >= 3.
  bool counts_consistent = false;
};

LatticePointReport classify_lattice_points(const TrivalentGraph& g, const Coloring& c);
LatticePointReport classify_lattice_points(const PolytopePair& pp, const TrivalentGraph& g);

struct TerminalityReport {
  bool terminal = false;
  std::optional<IntVec> witness;   // lexicographically first non-vertex nonzero N-point
  std::vector<EdgeId> bridges;
  bool criterion_applies = false;  // genus >= 3
  bool criterion_consistent = true;  // terminal == bridges.empty() whenever it applies
};

TerminalityReport is_terminal(const TrivalentGraph& g, const Coloring& c);

struct ManonReport {
  HalfEdgeRemoval removal;
  int dim = 0;                          // edges of the closed graph
  std::vector<HalfSpace> manon_hrep;    // over weights w of the half-edge graph
  std::vector<HalfSpace> image_hrep;    // after the affine map, in u-coordinates
  std::vector<RationalPoint> image_vertices;
  std::vector<RationalPoint> target_vertices;  // vertices of P for the closed graph
  bool slice_forced = false;     // w1 + w2 = 2 at the half-edge vertex
  bool vertices_equal = false;
  bool facets_equal = false;     // irredundant normalized H-reps coincide
  bool lattice_round_trip = false;
  long long lattice_points_checked = 0;
};

/// Manon's polytope of a graph with one half-edge (weights w >= 0, half-edge
/// weight 2, triangle inequalities, vertex sums <= 4, even vertex sums) and its
/// affine identification with P of the closed graph obtained by removing the
/// half-edge: u_e = 1 - w_e, and u = 1 - w_{e2} on the merged edge.
ManonReport manon_original(const TrivalentGraph& g);

struct PiNReport {
  int n = 0;
  std::vector<IntVec> vertices;       // hull vertices
  std::vector<IntVec> points;         // all lattice points of the hull
  std::array<int, 4> by_weight{};     // points with 0, 1, 2, 3 nonzero (±1) entries
  bool only_expected = false;         // no other lattice points
  bool separation_ok = false;         // h = vertex attains 3 only at that vertex
};

/// Lattice points of conv{±e_i ± e_j ± e_k} in Z^n, n in {3, 4}.
PiNReport pi_n_polytope_points(int n);

enum class SmallVerdict { kSmall, kUnknown, kNo };
std::string to_string(SmallVerdict v);

struct TriangulationOptions {
  int shuffles = 4;              // random placing orders tried after the lexicographic one
  int height_steps = 400;        // local-search steps over regular triangulations
  std::uint64_t seed = 1;
  int exhaustive_max_rays = 8;   // exhaustive per-cone search only up to this size
};

struct ConeTriangulation {
  RationalPoint facet;                     // vertex of P dual to the cone's facet
  std::vector<int> rays;                   // indices into PolytopePair::polar_vertices
  std::vector<std::vector<int>> simplices; // each a list of ray indices
  std::vector<mpz_class> determinants;     // |det| of each simplex in Z^E
  bool unimodular = false;                 // every |det| == [Ñ:N]
  mpz_class volume;                        // sum of |det|
  /// Exhaustive search result when attempted: some unimodular triangulation exists.
  std::optional<bool> exhaustive_exists;
};

struct TriangulationReport {
  SmallVerdict verdict = SmallVerdict::kUnknown;
  long long lattice_index = 1;  // [Ñ:N]
  std::uint64_t seed = 1;
  int orderings_tried = 0;
  int height_steps_used = 0;
  /// "placing" (ray_order) or "regular" (heights); the best attempt when not SMALL.
  std::string method;
  std::vector<int> ray_order;
  std::vector<long long> heights;
  long long bad_simplices = 0;  // non-unimodular simplices in the reported triangulation
  std::vector<ConeTriangulation> cones;
};

/// Triangulations of the face fan of P° using only its rays. Placing
/// triangulations for the lexicographic and `shuffles` random ray orders, then
/// a local search over regular triangulations given by one height per ray. A
/// single global order (or height function) per attempt keeps the cone
/// triangulations compatible on shared faces.
TriangulationReport triangulate_fan(const TrivalentGraph& g, const Coloring& c,
                                    const TriangulationOptions& opts = {});
TriangulationReport triangulate_fan(const PolytopePair& pp, const LatticeSystem& lat,
                                    const TriangulationOptions& opts = {});

/// Placing triangulation of the cone spanned by `vectors`, taken in the given order.
std::vector<std::vector<int>> placing_triangulation(const std::vector<IntVec>& vectors);

/// Regular triangulation of the cone spanned by `vectors` induced by lifting
/// vector i to height heights[i]; cells with more than dim vectors are
/// returned as they are (non-generic heights).
std::vector<std::vector<int>> regular_subdivision(const std::vector<IntVec>& vectors,
                                                  const std::vector<long long>& heights);

/// True if the full-dimensional simplicial cones `a` and `b` (indices into
/// `vectors`) meet in a common face; decided via the circuits of `vectors`.
bool proper_intersection(const std::vector<IntVec>& vectors, const std::vector<int>& a,
                         const std::vector<int>& b);

/// Whether the cone spanned by `vectors` has a triangulation into simplices
/// with |det| == `unit`, using only the given vectors.
bool has_unimodular_triangulation(const std::vector<IntVec>& vectors, long long unit);

/// Plain-text export: one "ineq a_1 ... a_n b" line per facet of P (a.u >= b),
/// then one "vertex x_1 ... x_n" line per vertex of P°.
std::string export_text(const PolytopePair& pp);

}  // namespace graphpot
