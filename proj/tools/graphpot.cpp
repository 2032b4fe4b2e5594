// graphpot: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource cap.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "graphpot/error.hpp"
#include "graphpot/io.hpp"
#include "graphpot/verify.hpp"

using namespace graphpot;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kDefaultCapN = 24;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphArgs {
  std::string graph;
  std::string parity;  // "", "odd", "even"
};

GraphSpec load_graph(const std::string& ref) {
  if (ref.empty()) throw InputError("--graph is required");
  if (std::filesystem::exists(ref)) {
    std::ifstream in(ref);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw InputError(ref + ": " + e.what());
    }
    return graph_from_json(j);
  }
  if (auto g = named_graph(ref)) return GraphSpec{*g, std::nullopt};
  throw InputError("no such graph file or builtin graph: " + ref);
}

/// Coloring from --parity, else from the file, else odd.
Coloring pick_coloring(const GraphSpec& spec, const std::string& parity) {
  if (parity == "odd") return Coloring::with_parity(spec.graph.num_vertices(), 1);
  if (parity == "even") return Coloring::with_parity(spec.graph.num_vertices(), 0);
  if (!parity.empty()) throw InputError("--parity must be odd or even");
  if (spec.coloring) return *spec.coloring;
  return Coloring::with_parity(spec.graph.num_vertices(), 1);
}

int cap_n() {
  if (const char* env = std::getenv("GRAPHPOT_CAP_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw InputError("GRAPHPOT_CAP_N is not an integer");
    }
  }
  return kDefaultCapN;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph potentials: periods, polytopes and verification"};
  app.require_subcommand(1);

  GraphArgs ga;
  int n = 8, edge = -1, genus = 2, jobs = 1, shuffles = TriangulationOptions{}.shuffles;
  int height_steps = TriangulationOptions{}.height_steps;
  std::uint64_t seed = 1;
  std::string engine = "contract", format = "json", scope = "quick", golden_file, text_format = "json";
  bool classify = false, terminal = false, triangulate = false, export_txt = false, manon = false;

  auto* graph_cmd = app.add_subcommand("graph", "Graph utilities");
  graph_cmd->require_subcommand(1);
  auto* info = graph_cmd->add_subcommand("info", "Genus, bridges, loops, parity");
  auto* mutate = graph_cmd->add_subcommand("mutate", "Elementary transformation along an edge");
  auto* enumerate = graph_cmd->add_subcommand("enumerate", "All trivalent graphs of a genus");
  auto* canon = graph_cmd->add_subcommand("canon", "Canonical relabeling");
  for (auto* c : {info, mutate, canon}) {
    c->add_option("--graph", ga.graph, "Graph JSON file or builtin name")->required();
    c->add_option("--parity", ga.parity, "odd|even (overrides the file's coloring)");
  }
  mutate->add_option("--edge", edge, "Edge id")->required();
  enumerate->add_option("--genus", genus, "Genus (2..5)")->required();

  auto* potential = app.add_subcommand("potential", "Graph potential as a Laurent polynomial");
  auto* periods = app.add_subcommand("periods", "Period sequence pi_0..pi_N");
  auto* polytope = app.add_subcommand("polytope", "Polytope pair and singularity reports");
  for (auto* c : {potential, periods, polytope}) {
    c->add_option("--graph", ga.graph, "Graph JSON file or builtin name")->required();
    c->add_option("--parity", ga.parity, "odd|even (overrides the file's coloring)");
  }
  periods->add_option("--n", n, "Largest index N");
  periods->add_option("--engine", engine, "naive|contract|both");
  periods->add_option("--format", format, "json|csv");
  polytope->add_flag("--classify", classify, "Classify the N-points of the polar dual");
  polytope->add_flag("--terminal", terminal, "Decide terminality");
  polytope->add_flag("--triangulate", triangulate, "Search for a unimodular fan triangulation");
  polytope->add_flag("--export", export_txt, "Plain-text H-rep/V-rep instead of JSON");
  polytope->add_flag("--manon", manon, "Manon polytope of a half-edge graph and its identification");
  polytope->add_option("--seed", seed, "Seed of the triangulation search");
  polytope->add_option("--shuffles", shuffles, "Random placing orders to try");
  polytope->add_option("--height-steps", height_steps, "Local-search steps over height functions");

  auto* verify = app.add_subcommand("verify", "Check against the golden tables and known identities");
  verify->add_option("scope", scope, "quick|full|tables");
  verify->add_option("--jobs", jobs, "Worker threads");
  verify->add_option("--golden", golden_file, "Alternative golden table file");
  verify->add_option("--format", text_format, "json|text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (info->parsed()) {
      const auto spec = load_graph(ga.graph);
      Json j{{"genus", graphpot::genus(spec.graph)}, {"bridges", bridges(spec.graph)},
             {"loops", spec.graph.num_loops()}};
      if (spec.coloring || !ga.parity.empty()) j["parity"] = pick_coloring(spec, ga.parity).parity();
      std::cout << j.dump() << '\n';
    } else if (mutate->parsed()) {
      const auto spec = load_graph(ga.graph);
      const auto [g, c] = elementary_transformation(spec.graph, pick_coloring(spec, ga.parity), edge);
      print(graph_to_json(g, c));
    } else if (enumerate->parsed()) {
      Json list = Json::array();
      for (const auto& g : enumerate_trivalent(genus)) list.push_back(graph_to_json(g));
      print(Json{{"genus", genus}, {"count", list.size()}, {"graphs", list}});
    } else if (canon->parsed()) {
      const auto spec = load_graph(ga.graph);
      const auto c = pick_coloring(spec, ga.parity);
      const auto [g, gc] = canonical_relabel(spec.graph, c);
      const auto form = canonical_form(spec.graph, c);
      std::ostringstream hex;
      for (unsigned char b : form) hex << "0123456789abcdef"[b >> 4] << "0123456789abcdef"[b & 15];
      std::cout << Json{{"canonical_id", hex.str()}, {"graph", graph_to_json(g, gc)}}.dump() << '\n';
    } else if (potential->parsed()) {
      const auto spec = load_graph(ga.graph);
      print(potential_to_json(graph_potential(spec.graph, pick_coloring(spec, ga.parity))));
    } else if (periods->parsed()) {
      const auto spec = load_graph(ga.graph);
      const int cap = cap_n();
      if (n > cap) {
        std::cerr << "error: N=" << n << " exceeds the cap " << cap << " (set GRAPHPOT_CAP_N)\n";
        return kExitCap;
      }
      if (format != "json" && format != "csv") throw InputError("--format must be json or csv");
      const auto seq = period_sequence(spec.graph, pick_coloring(spec, ga.parity), n, parse_engine(engine));
      if (format == "csv") std::cout << to_csv(seq);
      else print(to_json(seq));
    } else if (polytope->parsed()) {
      const auto spec = load_graph(ga.graph);
      if (manon) {
        print(to_json(manon_original(spec.graph)));
        return 0;
      }
      const auto c = pick_coloring(spec, ga.parity);
      const auto pp = polar_dual(spec.graph, c);
      if (export_txt) {
        std::cout << export_text(pp);
        return 0;
      }
      Json j{{"genus", graphpot::genus(spec.graph)}, {"parity", c.parity()}, {"polytope", to_json(pp)}};
      if (classify) j["lattice_points"] = to_json(classify_lattice_points(pp, spec.graph));
      if (terminal) j["terminal"] = to_json(is_terminal(spec.graph, c));
      if (triangulate) {
        TriangulationOptions opts;
        opts.seed = seed;
        opts.shuffles = shuffles;
        opts.height_steps = height_steps;
        j["triangulation"] = to_json(triangulate_fan(pp, LatticeSystem(spec.graph), opts));
      }
      print(j);
    } else if (verify->parsed()) {
      GoldenTable golden = GoldenTable::embedded();
      if (!golden_file.empty()) {
        std::ifstream in(golden_file);
        if (!in) throw InputError("cannot read " + golden_file);
        std::stringstream ss;
        ss << in.rdbuf();
        golden = GoldenTable::parse(ss.str());
      }
      const auto rep = run_verify(parse_scope(scope), golden, jobs);
      if (text_format == "text") std::cout << to_text(rep);
      else print(to_json(rep));
      return rep.ok() ? 0 : kExitVerify;
    }
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
