// gtop: graph complexes, their homology, and topological chromatic bounds.
//
// Exit codes: 0 success, 1 verification failure, 2 input or guard error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gtop/bounds.hpp"
#include "gtop/builders.hpp"
#include "gtop/errors.hpp"
#include "gtop/io.hpp"

namespace {

using namespace gtop;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct Config {
  std::string output;
  std::string format = "json";
  bool force = false;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw InputError("cannot write " + cfg.output);
  out << text;
}

// JSON first; anything that does not parse as JSON is read as an edge list.
Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return graph_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw InputError("cannot parse " + path + ": " + e.what());
    }
  }
  std::istringstream lines(text);
  return graph_from_edge_list(lines);
}

std::string profile_table(const HomologyProfile& p) {
  std::ostringstream out;
  out << "k  betti  torsion\n";
  for (const auto& g : p.dims) {
    out << g.k << "  " << g.betti << "  ";
    if (g.torsion.empty()) out << "-";
    for (std::size_t i = 0; i < g.torsion.size(); ++i) out << (i ? "," : "") << "Z/" << g.torsion[i];
    out << '\n';
  }
  return out.str();
}

int cmd_gen(const Config& cfg, const std::string& family, const std::vector<int>& params,
            const std::string& base, int k) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw InputError("family '" + family + "' takes " + std::to_string(count) + " parameter(s)");
  };
  Graph g;
  if (family == "kneser") {
    need(2);
    g = kneser_graph(params[0], params[1]);
  } else if (family == "complete") {
    need(1);
    g = complete_graph(params[0]);
  } else if (family == "cycle") {
    need(1);
    g = cycle_graph(params[0]);
  } else if (family == "cone") {
    if (base.empty()) throw InputError("cone needs --base");
    g = cone_k(load_graph(base), k);
  } else {
    throw InputError("unknown family '" + family + "' (kneser, complete, cycle, cone)");
  }
  emit(cfg, dump_canonical(graph_to_json(g)));
  return kExitOk;
}

int cmd_complex(const Config& cfg, const std::string& kind, const std::string& input) {
  json out;
  if (kind == "n") {
    out = complex_to_json(neighborhood_complex(load_graph(input)));
  } else if (kind == "box") {
    out = z2_complex_to_json(box_complex(load_graph(input)));
  } else if (kind == "box0") {
    out = z2_complex_to_json(box0_complex(load_graph(input)));
  } else if (kind == "bc") {
    out = z2_complex_to_json(cones_over_shores_complex(load_graph(input)));
  } else if (kind == "hom") {
    out = z2_complex_to_json(hom_k2_order_complex(load_graph(input)));
  } else if (kind == "sd" || kind == "susp") {
    const json j = read_json_file(input);
    if (has_involution(j)) {
      const Z2Complex z = z2_complex_from_json(j);
      out = z2_complex_to_json(kind == "sd" ? subdivide_involution(z) : z2_suspension(z));
    } else {
      const SimplicialComplex k = complex_from_json(j);
      out = complex_to_json(kind == "sd" ? barycentric_subdivision(k).complex : suspension(k));
    }
  } else {
    throw InputError("unknown complex kind '" + kind + "' (n, box, box0, bc, hom, sd, susp)");
  }
  emit(cfg, dump_canonical(out));
  return kExitOk;
}

int cmd_homology(const Config& cfg, const std::string& input) {
  const HomologyProfile p = reduced_homology(complex_from_json(read_json_file(input)));
  emit(cfg, cfg.format == "table" ? profile_table(p) : dump_canonical(profile_to_json(p)));
  return kExitOk;
}

int cmd_bounds(const Config& cfg, const std::string& input, bool exact) {
  const Graph g = load_graph(input);
  BoundOptions options;
  options.exact = exact;
  options.chromatic.force = cfg.force;
  options.force = cfg.force;
  const BoundReport lovasz = lovasz_bound(g, options);
  // χ only needs computing once.
  options.exact = false;
  BoundReport sarkaria = sarkaria_bound(g, options);
  sarkaria.exact_chi = lovasz.exact_chi;
  if (cfg.format == "table") {
    std::ostringstream out;
    for (const BoundReport* b : std::initializer_list<const BoundReport*>{&lovasz, &sarkaria})
      out << b->name << "  " << b->value << (b->caveat ? "  (caveat: " + b->note + ")" : "") << '\n';
    if (lovasz.exact_chi) out << "chi  " << *lovasz.exact_chi << '\n';
    emit(cfg, out.str());
  } else {
    emit(cfg, dump_canonical(json::array({bound_to_json(lovasz), bound_to_json(sarkaria)})));
  }
  return kExitOk;
}

std::vector<Graph> verification_graphs(int max_n) {
  std::vector<Graph> graphs = connected_graph_corpus(max_n);
  graphs.push_back(kneser_graph(5, 2));
  graphs.push_back(cycle_graph(7));
  return graphs;
}

int cmd_verify(const Config& cfg, const std::string& suite, int max_n, int n, const std::string& target) {
  static const std::vector<std::string> suites = {"suspension", "shore", "euler", "roundtrip",
                                                  "nerve",      "cone",  "hom"};
  std::vector<VerificationOutcome> outcomes;
  if (suite == "nbhd-search") {
    if (target.empty() || n < 1) throw InputError("nbhd-search needs --target and --n");
    const SimplicialComplex k = complex_from_json(read_json_file(target));
    const auto found = neighborhood_realizability_search(k, n, {.max_n = 6, .force = cfg.force});
    json report = {{"check", "nbhd-search"}, {"n", n}, {"target", complex_to_json(k)}};
    report["found"] = found ? graph_to_json(*found) : json(nullptr);
    if (cfg.format == "table")
      emit(cfg, found ? "found " + describe(*found) + "\n" : std::string("none found\n"));
    else
      emit(cfg, dump_canonical(report));
    return kExitOk;
  }
  if (suite != "all" && std::find(suites.begin(), suites.end(), suite) == suites.end())
    throw InputError("unknown suite '" + suite + "'");
  if (max_n < 1 || max_n > 6) throw InputError("--max-n must be between 1 and 6");
  auto wants = [&](const std::string& s) { return suite == "all" || suite == s; };

  const auto graphs = verification_graphs(max_n);
  const std::vector<Z2Complex> z_inputs = {sphere0_swap(), cycle_antipodal(4), cycle_antipodal(6),
                                           octahedron_antipodal()};
  for (const Graph& g : graphs) {
    if (wants("suspension")) outcomes.push_back(verify_suspension_relation(g));
    if (wants("shore") && g.edge_count() > 0) outcomes.push_back(verify_shore_retract(g));
    if (wants("euler") && g.edge_count() > 0) outcomes.push_back(verify_even_euler(g));
    if (wants("cone")) outcomes.push_back(verify_cone_graph(g));
    if (wants("hom") && g.vertex_count() <= std::max(max_n, 5)) outcomes.push_back(verify_hom_equivalence(g));
  }
  for (std::size_t i = 0; i < z_inputs.size(); ++i) {
    // The octahedron round trip subdivides to a 26-vertex graph; nerve only.
    if (wants("roundtrip") && i < 3) outcomes.push_back(verify_construction_roundtrip(z_inputs[i]));
    if (wants("nerve")) outcomes.push_back(verify_nerve_identity(z_inputs[i]));
  }
  std::stable_sort(outcomes.begin(), outcomes.end(), [](const auto& a, const auto& b) {
    return std::tie(a.check, a.input) < std::tie(b.check, b.input);
  });

  const bool all_passed =
      std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed; });
  if (cfg.format == "table") {
    std::ostringstream out;
    for (const auto& o : outcomes) out << (o.passed ? "PASS  " : "FAIL  ") << o.check << "  " << o.input << '\n';
    out << outcomes.size() << " checks, " << (all_passed ? "all passed" : "FAILURES") << '\n';
    emit(cfg, out.str());
  } else {
    json report = json::array();
    for (const auto& o : outcomes) report.push_back(outcome_to_json(o));
    emit(cfg, dump_canonical(report));
  }
  return all_passed ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph complexes, integer homology and topological chromatic bounds"};
  app.require_subcommand(1);
  Config cfg;
  auto common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "Output file (default stdout)");
    sub->add_option("--format", cfg.format, "Output format; JSON is the stable contract")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    sub->add_flag("--force", cfg.force, "Override size guards (chromatic: 20 vertices, B0: 16 vertices, search: n <= 6)");
  };

  std::string family, base, kind, input, suite, target;
  std::vector<int> params;
  int cone_k_count = 1;
  int max_n = 5;
  int search_n = 0;
  bool exact = false;

  auto* gen = app.add_subcommand("gen", "Generate a graph: kneser N K | complete N | cycle N | cone --base G --k K");
  gen->add_option("family", family, "kneser, complete, cycle or cone")->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--base", base, "Base graph file for cone");
  gen->add_option("--k", cone_k_count, "Number of cone vertices")->capture_default_str();
  common(gen);

  auto* cx = app.add_subcommand("complex", "Build a complex: n|box|box0|bc|hom from a graph, sd|susp from a complex");
  cx->add_option("kind", kind)->required();
  cx->add_option("input", input)->required();
  common(cx);

  auto* hom = app.add_subcommand("homology", "Reduced integral homology of a complex file");
  hom->add_option("input", input)->required();
  common(hom);

  auto* bounds = app.add_subcommand("bounds", "Lovasz and Sarkaria bounds for a graph");
  bounds->add_option("input", input)->required();
  bounds->add_flag("--exact", exact, "Also compute the exact chromatic number");
  common(bounds);

  auto* verify = app.add_subcommand(
      "verify", "Run a verification suite: suspension, shore, euler, roundtrip, nerve, cone, hom, nbhd-search, all");
  verify->add_option("suite", suite)->required();
  verify->add_option("--max-n", max_n, "Largest vertex count of the connected-graph corpus")->capture_default_str();
  verify->add_option("--n", search_n, "Vertex count for nbhd-search");
  verify->add_option("--target", target, "Target complex file for nbhd-search");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen) return cmd_gen(cfg, family, params, base, cone_k_count);
    if (*cx) return cmd_complex(cfg, kind, input);
    if (*hom) return cmd_homology(cfg, input);
    if (*bounds) return cmd_bounds(cfg, input, exact);
    if (*verify) return cmd_verify(cfg, suite, max_n, search_n, target);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const GuardError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
