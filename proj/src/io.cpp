#include "graphpot/io.hpp"

#include <sstream>

#include "graphpot/error.hpp"

namespace graphpot {

namespace {

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw StructuralError(what + " must be an integer");
  return j.get<int>();
}

Json intvec(const IntVec& v) {
  Json a = Json::array();
  for (long long x : v) a.push_back(x);
  return a;
}

std::string kind_name(PointKind k) { return to_string(k); }

}  // namespace

std::string rational_string(const mpq_class& q) { return q.get_str(); }

GraphSpec graph_from_json(const Json& j) {
  if (!j.is_object()) throw StructuralError("graph must be a JSON object");
  if (!j.contains("vertices")) throw StructuralError("missing \"vertices\"");
  if (!j.contains("edges")) throw StructuralError("missing \"edges\"");
  const int n = as_int(j.at("vertices"), "\"vertices\"");
  const Json& je = j.at("edges");
  if (!je.is_array()) throw StructuralError("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : je) {
    if (!e.is_array() || e.size() != 2) throw StructuralError("each edge must be a pair [u, v]");
    edges.push_back(Edge{as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint")});
  }
  std::optional<VertexId> half;
  if (j.contains("half_edge") && !j.at("half_edge").is_null())
    half = as_int(j.at("half_edge"), "\"half_edge\"");
  GraphSpec spec{TrivalentGraph(n, std::move(edges), half), std::nullopt};
  if (j.contains("coloring") && !j.at("coloring").is_null()) {
    const Json& jc = j.at("coloring");
    if (!jc.is_array()) throw StructuralError("\"coloring\" must be an array");
    Coloring c;
    for (const auto& b : jc) {
      const int v = as_int(b, "coloring entry");
      if (v != 0 && v != 1) throw StructuralError("coloring entries must be 0 or 1");
      c.bits.push_back(static_cast<std::uint8_t>(v));
    }
    check_coloring(spec.graph, c);
    spec.coloring = std::move(c);
  }
  return spec;
}

Json graph_to_json(const TrivalentGraph& g, const std::optional<Coloring>& c) {
  Json j;
  j["vertices"] = g.num_vertices();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  j["half_edge"] = g.half_edge() ? Json(*g.half_edge()) : Json(nullptr);
  if (c) {
    Json bits = Json::array();
    for (auto b : c->bits) bits.push_back(static_cast<int>(b));
    j["coloring"] = bits;
  }
  return j;
}

std::optional<TrivalentGraph> named_graph(const std::string& name) {
  if (name == "theta") return graphs::theta();
  if (name == "dumbbell") return graphs::dumbbell();
  if (name == "tetrahedron") return graphs::tetrahedron();
  if (name == "k33") return graphs::bipartite_k33();
  if (name == "theta_with_tail") return graphs::theta_with_tail();
  if (name == "tetrahedron_with_tail") return graphs::tetrahedron_with_tail();
  if (name.rfind("ladder", 0) == 0 && name.size() > 6) {
    const std::string digits = name.substr(6);
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3) return std::nullopt;
    return graphs::ladder(std::stoi(digits));
  }
  return std::nullopt;
}

Json laurent_to_json(const LaurentPoly& p) {
  Json a = Json::array();
  for (const auto& [exp, coef] : p.terms()) {
    a.push_back({{"exp", exp.to_vector()}, {"coef", coef.get_str()}});
  }
  return a;
}

LaurentPoly laurent_from_json(const Json& j, int num_vars) {
  if (!j.is_array()) throw PreconditionError("a Laurent polynomial must be a JSON array");
  LaurentPoly p(num_vars);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coef"))
      throw PreconditionError("each term needs \"exp\" and \"coef\"");
    std::vector<int> e;
    for (const auto& x : t.at("exp")) e.push_back(x.get<int>());
    if (static_cast<int>(e.size()) != num_vars) throw DimensionError("term exponent has the wrong length");
    mpz_class c;
    if (t.at("coef").is_string()) {
      if (c.set_str(t.at("coef").get<std::string>(), 10) != 0)
        throw PreconditionError("coefficient is not a decimal integer");
    } else {
      c = static_cast<long>(t.at("coef").get<long long>());
    }
    p.add_term(ExponentVector(std::span<const int>(e)), c);
  }
  return p;
}

Json potential_to_json(const GraphPotential& p) {
  Json j;
  j["genus"] = p.genus();
  j["parity"] = p.parity();
  j["num_vars"] = p.poly.num_vars();
  j["terms"] = laurent_to_json(p.poly);
  Json vt = Json::object();
  for (std::size_t v = 0; v < p.vertex_terms.size(); ++v) vt[std::to_string(v)] = laurent_to_json(p.vertex_terms[v]);
  j["vertex_terms"] = vt;
  return j;
}

Json to_json(const PeriodSequence& s) {
  Json j;
  j["graph_id"] = s.graph_id;
  j["genus"] = s.genus;
  j["parity"] = s.parity;
  j["engine"] = to_string(s.engine);
  Json pi = Json::array(), p = Json::array();
  mpz_class fact = 1;
  for (std::size_t n = 0; n < s.values.size(); ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    pi.push_back(s.values[n].get_str());
    mpq_class q(s.values[n], fact);
    q.canonicalize();
    p.push_back(rational_string(q));
  }
  j["pi"] = pi;
  j["p"] = p;
  return j;
}

std::string to_csv(const PeriodSequence& s) {
  std::ostringstream os;
  os << "n,pi_n,p_n\n";
  mpz_class fact = 1;
  for (std::size_t n = 0; n < s.values.size(); ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    mpq_class q(s.values[n], fact);
    q.canonicalize();
    os << n << ',' << s.values[n].get_str() << ',' << rational_string(q) << '\n';
  }
  return os.str();
}

Json to_json(const QuantumPeriodSeries& q) {
  Json j;
  j["genus"] = q.genus;
  j["order"] = q.order;
  Json p = Json::array(), c = Json::array();
  for (const auto& x : q.p) p.push_back(rational_string(x));
  for (const auto& x : q.c) c.push_back(x.get_str());
  j["p"] = p;
  j["c"] = c;
  j["radius_bound"] = rational_string(q.radius_bound);
  return j;
}

Json to_json(const GrowthEstimate& g) {
  return Json{{"indices", g.indices}, {"roots", g.roots}, {"nondecreasing", g.nondecreasing},
              {"bounded", g.bounded}, {"limit", g.limit}};
}

Json to_json(const RationalPoint& p) {
  Json a = Json::array();
  for (long long x : p.numer) a.push_back(rational_string(mpq_class(mpz_class(static_cast<long>(x)), mpz_class(static_cast<long>(p.denom)))));
  return a;
}

Json to_json(const PolytopePair& pp) {
  Json j;
  j["dim"] = pp.dim;
  Json rows = Json::array();
  for (const auto& r : pp.rows)
    rows.push_back({{"vertex", r.vertex}, {"signs", r.signs}, {"normal", intvec(r.normal)}, {"offset", -1}});
  j["hrep"] = rows;
  j["facet_rows"] = pp.facet_rows;
  Json pv = Json::array();
  for (const auto& v : pp.p_vertices) pv.push_back(to_json(v));
  j["p_vertices"] = pv;
  Json sup = Json::array(), verts = Json::array(), facets = Json::array();
  for (const auto& s : pp.support) sup.push_back(intvec(s));
  for (const auto& v : pp.polar_vertices) verts.push_back(intvec(v));
  for (const auto& f : pp.polar_facets) facets.push_back({{"normal", intvec(f.normal)}, {"offset", f.offset}});
  j["support"] = sup;
  j["polar_vertices"] = verts;
  j["polar_facets"] = facets;
  j["duality_ok"] = pp.duality_ok;
  return j;
}

Json to_json(const LatticePointReport& r) {
  Json j;
  j["genus"] = r.genus;
  Json pts = Json::array();
  for (const auto& p : r.points) {
    Json e{{"point", intvec(p.point)}, {"kind", kind_name(p.kind)}};
    if (p.edge >= 0) e["edge"] = p.edge;
    pts.push_back(e);
  }
  j["points"] = pts;
  j["origin"] = r.num_origin;
  j["rays"] = r.num_rays;
  j["bridge_points"] = r.num_bridge_points;
  j["other"] = r.num_other;
  j["expected_rays"] = r.expected_rays;
  j["expected_extra"] = r.expected_extra;
  j["counts_consistent"] = r.counts_consistent;
  return j;
}

Json to_json(const TerminalityReport& r) {
  Json j;
  j["terminal"] = r.terminal;
  j["witness"] = r.witness ? intvec(*r.witness) : Json(nullptr);
  j["bridges"] = r.bridges;
  j["criterion_applies"] = r.criterion_applies;
  j["criterion_consistent"] = r.criterion_consistent;
  return j;
}

Json to_json(const TriangulationReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["lattice_index"] = r.lattice_index;
  j["seed"] = r.seed;
  j["orderings_tried"] = r.orderings_tried;
  j["height_steps_used"] = r.height_steps_used;
  j["method"] = r.method;
  j["ray_order"] = r.ray_order;
  j["heights"] = r.heights;
  j["bad_simplices"] = r.bad_simplices;
  Json cones = Json::array();
  for (const auto& c : r.cones) {
    Json dets = Json::array();
    for (const auto& d : c.determinants) dets.push_back(d.get_str());
    Json e{{"facet", to_json(c.facet)},
           {"rays", c.rays},
           {"simplices", c.simplices},
           {"determinants", dets},
           {"unimodular", c.unimodular},
           {"volume", c.volume.get_str()}};
    e["exhaustive_exists"] = c.exhaustive_exists ? Json(*c.exhaustive_exists) : Json(nullptr);
    cones.push_back(e);
  }
  j["cones"] = cones;
  return j;
}

Json to_json(const ManonReport& r) {
  Json j;
  j["closed_graph"] = graph_to_json(r.removal.graph, r.removal.coloring);
  j["merged_edge"] = r.removal.merged_edge;
  j["dim"] = r.dim;
  Json hs = Json::array();
  for (const auto& h : r.image_hrep) hs.push_back({{"normal", intvec(h.normal)}, {"offset", h.offset}});
  j["image_hrep"] = hs;
  Json iv = Json::array();
  for (const auto& v : r.image_vertices) iv.push_back(to_json(v));
  j["image_vertices"] = iv;
  j["slice_forced"] = r.slice_forced;
  j["vertices_equal"] = r.vertices_equal;
  j["facets_equal"] = r.facets_equal;
  j["lattice_round_trip"] = r.lattice_round_trip;
  j["lattice_points_checked"] = r.lattice_points_checked;
  return j;
}

Json to_json(const PiNReport& r) {
  Json j;
  j["n"] = r.n;
  Json v = Json::array(), p = Json::array();
  for (const auto& x : r.vertices) v.push_back(intvec(x));
  for (const auto& x : r.points) p.push_back(intvec(x));
  j["vertices"] = v;
  j["points"] = p;
  j["by_weight"] = r.by_weight;
  j["only_expected"] = r.only_expected;
  j["separation_ok"] = r.separation_ok;
  return j;
}

}  // namespace graphpot
