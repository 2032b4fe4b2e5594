#include "graphpot/verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "graphpot/error.hpp"

namespace graphpot {

namespace {

using Outcome = std::pair<std::string, std::string>;  // expected, computed

struct Task {
  std::string name;
  std::function<Outcome()> run;
};

std::string join(const std::vector<mpz_class>& v, std::size_t upto) {
  std::string s;
  for (std::size_t i = 0; i <= upto && i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s;
}

std::string hex_id(const TrivalentGraph& g) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char b : canonical_form(g, Coloring::with_parity(g.num_vertices(), 0))) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string parity_name(int p) { return p ? "odd" : "even"; }

Coloring coloring(const TrivalentGraph& g, int parity) { return Coloring::with_parity(g.num_vertices(), parity); }

std::string points_string(std::vector<IntVec> pts) {
  std::sort(pts.begin(), pts.end());
  std::ostringstream os;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    os << (i ? " (" : "(");
    for (std::size_t k = 0; k < pts[i].size(); ++k) os << (k ? "," : "") << pts[i][k];
    os << ')';
  }
  return os.str();
}

void add_table_checks(std::vector<Task>& tasks, const GoldenTable& golden, int genus, int parity,
                      const std::vector<TrivalentGraph>& gs, int max_n) {
  const auto& row = golden.row(parity, genus);
  const int n = std::min<int>(max_n, static_cast<int>(row.size()) - 1);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    tasks.push_back({"table/" + parity_name(parity) + "/g" + std::to_string(genus) + "/graph" +
                         std::to_string(i) + "/n<=" + std::to_string(n),
                     [&row, g = gs[i], parity, n] {
                       auto seq = period_sequence(g, coloring(g, parity), n, Engine::kContract);
                       return Outcome{join(row, static_cast<std::size_t>(n)),
                                      join(seq.values, static_cast<std::size_t>(n))};
                     }});
  }
}

void add_engine_checks(std::vector<Task>& tasks, int genus, const std::vector<TrivalentGraph>& gs, int max_n) {
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (int parity : {1, 0}) {
      tasks.push_back({"engines/g" + std::to_string(genus) + "/graph" + std::to_string(i) + "/" +
                           parity_name(parity) + "/n<=" + std::to_string(max_n),
                       [g = gs[i], parity, max_n] {
                         const auto c = coloring(g, parity);
                         const auto pot = graph_potential(g, c);
                         std::vector<mpz_class> a, b;
                         for (int n = 0; n <= max_n; ++n) {
                           a.push_back(period_naive(pot, n));
                           b.push_back(period_contract(g, c, n));
                         }
                         return Outcome{join(a, a.size()), join(b, b.size())};
                       }});
    }
  }
}

void add_conifold_checks(std::vector<Task>& tasks, int genus, const std::vector<TrivalentGraph>& gs) {
  tasks.push_back({"conifold/g" + std::to_string(genus), [genus, gs] {
                     std::string got;
                     for (const auto& g : gs)
                       for (int parity : {1, 0}) {
                         const mpz_class v = conifold_value(graph_potential(g, coloring(g, parity)));
                         if (v != 8 * genus - 8) got = v.get_str();
                       }
                     const std::string want = std::to_string(8 * genus - 8);
                     return Outcome{want, got.empty() ? want : got};
                   }});
}

void add_pi_checks(std::vector<Task>& tasks, int genus, const std::vector<TrivalentGraph>& gs, int n,
                   long long expected) {
  for (std::size_t i = 0; i < gs.size(); ++i) {
    tasks.push_back({"pi" + std::to_string(n) + "/g" + std::to_string(genus) + "/graph" + std::to_string(i),
                     [g = gs[i], n, expected] {
                       return Outcome{std::to_string(expected),
                                      period_contract(g, coloring(g, 1), n).get_str()};
                     }});
  }
}

void add_basic_polytope_checks(std::vector<Task>& tasks) {
  tasks.push_back({"polytope/theta-odd/cube", [] {
                     const auto g = graphs::theta();
                     const auto pp = polar_dual(g, coloring(g, 1));
                     std::vector<IntVec> cube;
                     for (int s = 0; s < 8; ++s)
                       cube.push_back({(s & 1) ? -1 : 1, (s & 2) ? -1 : 1, (s & 4) ? -1 : 1});
                     return Outcome{points_string(cube), points_string(pp.polar_vertices)};
                   }});
  tasks.push_back({"polytope/dumbbell-odd/hull", [] {
                     const auto g = graphs::dumbbell();
                     const Coloring c{{0, 1}};
                     const auto pp = polar_dual(g, c);
                     const std::vector<IntVec> listed{{1, 2, 0}, {1, -2, 0}, {-1, 0, 0},
                                                      {-1, 0, -2}, {1, 0, 0}, {-1, 0, 2}};
                     const auto facets = geom::hull_facets(listed);
                     return Outcome{points_string(listed) + " | " + std::to_string(facets.size()) + " facets",
                                    points_string(pp.support) + " | " +
                                        std::to_string(pp.polar_facets.size()) + " facets" +
                                        (facets == pp.polar_facets ? "" : " (different hull)")};
                   }});
  tasks.push_back({"polytope/dumbbell-odd/terminal", [] {
                     const auto t = is_terminal(graphs::dumbbell(), Coloring{{0, 1}});
                     return Outcome{"false (-1,0,0)",
                                    yes(t.terminal) + " " + (t.witness ? points_string({*t.witness}) : "-")};
                   }});
  tasks.push_back({"polytope/theta-odd/terminal", [] {
                     return Outcome{"true", yes(is_terminal(graphs::theta(), coloring(graphs::theta(), 1)).terminal)};
                   }});
  tasks.push_back({"polytope/ladder3-odd/classify", [] {
                     const auto g = graphs::ladder(3);
                     const auto r = classify_lattice_points(g, coloring(g, 1));
                     return Outcome{"rays 16 other 0", "rays " + std::to_string(r.num_rays) + " other " +
                                                           std::to_string(r.num_bridge_points + r.num_other)};
                   }});
  tasks.push_back({"polytope/theta-odd/small", [] {
                     const auto r = triangulate_fan(graphs::theta(), coloring(graphs::theta(), 1));
                     return Outcome{"SMALL", to_string(r.verdict)};
                   }});
}

void add_full_polytope_checks(std::vector<Task>& tasks) {
  for (int genus : {3, 4}) {
    tasks.push_back({"polytope/terminal-iff-no-bridges/g" + std::to_string(genus), [genus] {
                       std::string bad;
                       for (const auto& g : enumerate_trivalent(genus)) {
                         const auto t = is_terminal(g, coloring(g, 1));
                         if (t.terminal != bridges(g).empty()) bad += hex_id(g) + " ";
                       }
                       return Outcome{"", bad};
                     }});
    tasks.push_back({"polytope/lattice-point-counts/g" + std::to_string(genus), [genus] {
                       std::string bad;
                       for (const auto& g : enumerate_trivalent(genus))
                         if (!classify_lattice_points(g, coloring(g, 1)).counts_consistent) bad += hex_id(g) + " ";
                       return Outcome{"", bad};
                     }});
  }
  tasks.push_back({"polytope/duality/g<=3", [] {
                     std::string bad;
                     for (int genus : {2, 3})
                       for (const auto& g : enumerate_trivalent(genus))
                         for (int parity : {1, 0})
                           if (!polar_dual(g, coloring(g, parity)).duality_ok) bad += hex_id(g) + " ";
                     return Outcome{"", bad};
                   }});
  tasks.push_back({"polytope/bridge-indicator/g<=4", [] {
                     std::string bad;
                     for (int genus : {2, 3, 4})
                       for (const auto& g : enumerate_trivalent(genus)) {
                         const LatticeSystem lat(g);
                         const auto br = bridges(g);
                         const auto pp = polar_dual(g, coloring(g, 1));
                         for (EdgeId e = 0; e < g.num_edges(); ++e) {
                           IntVec v(static_cast<std::size_t>(g.num_edges()), 0);
                           v[static_cast<std::size_t>(e)] = 1;
                           const bool is_bridge = std::binary_search(br.begin(), br.end(), e);
                           IntVec neg(v);
                           neg[static_cast<std::size_t>(e)] = -1;
                           if (lat.contains(v) != is_bridge || !in_polar(pp, v) || !in_polar(pp, neg))
                             bad += hex_id(g) + "/" + std::to_string(e) + " ";
                         }
                       }
                     return Outcome{"", bad};
                   }});
  for (const char* name : {"theta_with_tail", "tetrahedron_with_tail"}) {
    tasks.push_back({std::string("polytope/manon/") + name, [name] {
                       const auto r = manon_original(*named_graph(name));
                       return Outcome{"slice vertices facets lattice",
                                      std::string(r.slice_forced ? "slice " : "") +
                                          (r.vertices_equal ? "vertices " : "") + (r.facets_equal ? "facets " : "") +
                                          (r.lattice_round_trip ? "lattice" : "")};
                     }});
  }
  tasks.push_back({"polytope/pi3", [] {
                     const auto r = pi_n_polytope_points(3);
                     return Outcome{"1 6 12 8 / 8 vertices",
                                    std::to_string(r.by_weight[0]) + " " + std::to_string(r.by_weight[1]) + " " +
                                        std::to_string(r.by_weight[2]) + " " + std::to_string(r.by_weight[3]) +
                                        (r.only_expected && r.separation_ok ? "" : " (extra)") + " / " +
                                        std::to_string(r.vertices.size()) + " vertices"};
                   }});
  tasks.push_back({"polytope/pi4", [] {
                     const auto r = pi_n_polytope_points(4);
                     return Outcome{"1 8 24 32 / 32 vertices",
                                    std::to_string(r.by_weight[0]) + " " + std::to_string(r.by_weight[1]) + " " +
                                        std::to_string(r.by_weight[2]) + " " + std::to_string(r.by_weight[3]) +
                                        (r.only_expected && r.separation_ok ? "" : " (extra)") + " / " +
                                        std::to_string(r.vertices.size()) + " vertices"};
                   }});
  for (const char* name : {"tetrahedron", "k33"}) {
    tasks.push_back({std::string("polytope/small-not-refuted/") + name, [name] {
                       const auto g = *named_graph(name);
                       const auto r = triangulate_fan(g, coloring(g, 1));
                       return Outcome{"SMALL|UNKNOWN", r.verdict == SmallVerdict::kNo ? "NO" : "SMALL|UNKNOWN"};
                     }});
  }
}

}  // namespace

VerifyScope parse_scope(std::string_view name) {
  if (name == "quick") return VerifyScope::kQuick;
  if (name == "full") return VerifyScope::kFull;
  if (name == "tables") return VerifyScope::kTables;
  throw PreconditionError("unknown verify scope '" + std::string(name) + "'");
}

std::string to_string(VerifyScope s) {
  switch (s) {
    case VerifyScope::kQuick: return "quick";
    case VerifyScope::kFull: return "full";
    case VerifyScope::kTables: return "tables";
  }
  return "quick";
}

int VerifyReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; }));
}

int VerifyReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

std::vector<TrivalentGraph> sample_graphs(int genus, std::size_t count) {
  std::vector<TrivalentGraph> out;
  if (genus <= 5) {
    for (auto& g : enumerate_trivalent(genus)) {
      if (out.size() == count) break;
      out.push_back(std::move(g));
    }
    return out;
  }
  std::set<std::string> seen;
  std::vector<TrivalentGraph> frontier{graphs::ladder(genus)};
  while (!frontier.empty() && out.size() < count) {
    std::vector<TrivalentGraph> next;
    for (const auto& g : frontier) {
      const auto c = Coloring::with_parity(g.num_vertices(), 0);
      if (!seen.insert(canonical_form(g, c)).second) continue;
      out.push_back(g);
      if (out.size() == count) break;
      for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (!g.edge(e).is_loop()) next.push_back(elementary_transformation(g, c, e).first);
    }
    frontier = std::move(next);
  }
  return out;
}

VerifyReport run_verify(VerifyScope scope, const GoldenTable& golden, int jobs) {
  std::vector<Task> tasks;
  std::map<int, std::vector<TrivalentGraph>> by_genus;
  auto graphs_of = [&](int genus, std::size_t count) -> const std::vector<TrivalentGraph>& {
    auto& v = by_genus[genus * 1000 + static_cast<int>(count)];
    if (v.empty()) v = sample_graphs(genus, count);
    return v;
  };

  if (scope == VerifyScope::kTables) {
    for (const auto& [key, row] : golden.rows()) {
      const auto [parity, genus] = key;
      std::vector<TrivalentGraph> gs;
      if (genus == 2) gs = {graphs::theta(), graphs::dumbbell()};
      else gs = {graphs::ladder(genus)};
      add_table_checks(tasks, golden, genus, parity, gs, static_cast<int>(row.size()) - 1);
    }
  } else {
    const bool full = scope == VerifyScope::kFull;
    const int max_genus = full ? 5 : 3;
    const int max_n = full ? 12 : 8;
    for (int genus = 2; genus <= max_genus; ++genus) {
      const auto& gs = graphs_of(genus, genus <= 4 ? 100 : 3);
      for (int parity : {1, 0}) add_table_checks(tasks, golden, genus, parity, gs, max_n);
      if (genus <= 3) add_engine_checks(tasks, genus, gs, 6);
      add_conifold_checks(tasks, genus, genus == 5 ? enumerate_trivalent(5) : gs);
      if (genus == 2 || genus == 3) add_pi_checks(tasks, genus, gs, 2, genus == 2 ? 8 : 0);
      if (!full) add_pi_checks(tasks, genus, gs, 4, genus == 2 ? 216 : 192LL * (genus - 1));
    }
    add_basic_polytope_checks(tasks);
    if (full) {
      add_engine_checks(tasks, 4, {graphs::ladder(4)}, 4);
      for (int genus = 2; genus <= 6; ++genus)
        add_pi_checks(tasks, genus, graphs_of(genus, 2), 4, genus == 2 ? 216 : 192LL * (genus - 1));
      for (int genus = 2; genus <= 3; ++genus) {
        for (int parity : {1, 0}) {
          tasks.push_back({"vanishing/g" + std::to_string(genus) + "/" + parity_name(parity), [genus, parity] {
                             const auto g = genus == 2 ? graphs::theta() : graphs::ladder(3);
                             std::string nonzero;
                             for (int n = 1; n <= 11; ++n) {
                               if (n % 2 == 0 && (parity == 1 || n % 4 == 0)) continue;
                               if (period_contract(g, coloring(g, parity), n) != 0) nonzero += std::to_string(n) + " ";
                             }
                             return Outcome{"", nonzero};
                           }});
        }
      }
      for (int genus : {4, 5}) {
        tasks.push_back({"lower-triangular/g" + std::to_string(genus) + "/pi4", [genus] {
                           const auto g = graphs::ladder(genus);
                           return Outcome{period_contract(g, coloring(g, 1), 4).get_str(),
                                          period_contract(g, coloring(g, 0), 4).get_str()};
                         }});
      }
      tasks.push_back({"mutation-invariance/g3/n<=8", [] {
                         std::string bad;
                         for (const auto& g : enumerate_trivalent(3))
                           for (int parity : {1, 0}) {
                             const auto c = coloring(g, parity);
                             const auto base = period_sequence(g, c, 8, Engine::kContract).values;
                             for (EdgeId e = 0; e < g.num_edges(); ++e) {
                               if (g.edge(e).is_loop()) continue;
                               const auto [h, hc] = elementary_transformation(g, c, e);
                               if (period_sequence(h, hc, 8, Engine::kContract).values != base)
                                 bad += hex_id(g) + "/" + std::to_string(e) + " ";
                             }
                           }
                         return Outcome{"", bad};
                       }});
      tasks.push_back({"growth/g2-odd", [&golden] {
                         PeriodSequence seq;
                         seq.genus = 2;
                         seq.parity = 1;
                         seq.values = golden.row(1, 2);
                         const auto est = growth_estimate(seq);
                         return Outcome{"nondecreasing bounded", std::string(est.nondecreasing ? "nondecreasing" : "") +
                                                                     (est.bounded ? " bounded" : "")};
                       }});
      add_full_polytope_checks(tasks);
    }
  }

  VerifyReport rep;
  rep.scope = scope;
  rep.checks.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      VerifyCheck& c = rep.checks[i];
      c.name = tasks[i].name;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        auto [want, got] = tasks[i].run();
        c.expected = std::move(want);
        c.computed = std::move(got);
        c.pass = c.expected == c.computed;
      } catch (const std::exception& e) {
        c.computed = std::string("error: ") + e.what();
        c.pass = false;
      }
      c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rep;
}

Json to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed},
                      {"pass", c.pass}, {"seconds", c.seconds}});
  return Json{{"scope", to_string(r.scope)}, {"passed", r.passed()}, {"failed", r.failed()},
              {"checks", checks}};
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    if (c.pass) {
      os << "PASS " << c.name << '\n';
    } else {
      os << "FAIL " << c.name << ": expected [" << c.expected << "], computed [" << c.computed << "]\n";
    }
  }
  os << r.passed() << " passed, " << r.failed() << " failed\n";
  return os.str();
}

}  // namespace graphpot
