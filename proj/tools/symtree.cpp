#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "symtree/brute.hpp"
#include "symtree/campaign.hpp"
#include "symtree/canon.hpp"
#include "symtree/eccentric.hpp"
#include "symtree/extremal.hpp"
#include "symtree/graph.hpp"
#include "symtree/tree_params.hpp"
#include "symtree/universal.hpp"

using json = nlohmann::ordered_json;
using namespace symtree;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

BruteLimits limits_from_env() {
  BruteLimits lim;
  if (const char* env = std::getenv("SYMTREE_BRUTE_LIMIT")) {
    int v = std::atoi(env);
    if (v >= 1) {
      lim.group_n = v;
      lim.spectrum_n = v;
    }
  }
  return lim;
}

std::vector<int> parse_int_list(const std::string& text, char sep) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, sep))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

struct ComputeArgs {
  std::string input;
  std::string params = "D,F,fixing_witness,density";
  std::string coloring;
  std::string dot_path;
  bool graph_mode = false;
};

int run_compute(const ComputeArgs& args) {
  BruteLimits lim = limits_from_env();
  std::string text = read_file(args.input);
  json out;

  const std::vector<std::string> known{"D",   "F",     "fixing_witness", "density",
                                       "ecc", "autos", "brute_D",        "brute_F"};
  std::vector<std::string> tokens;
  {
    std::istringstream in(args.params);
    std::string tok;
    while (std::getline(in, tok, ','))
      if (!tok.empty()) {
        if (std::find(known.begin(), known.end(), tok) == known.end())
          throw CLI::ValidationError("unknown --params token: " + tok);
        tokens.push_back(tok);
      }
  }
  auto wants = [&](const std::string& key) {
    return std::find(tokens.begin(), tokens.end(), key) != tokens.end();
  };

  auto emit_autos = [&](json& obj, const Graph& g) {
    auto group = automorphisms(g, lim);
    obj["autos"] = group.size();
    if (group.size() <= 1000) obj["automorphisms"] = group;
  };

  if (args.graph_mode) {
    Graph g = parse_edge_list_graph(text);
    out["n"] = g.n;
    if (wants("autos")) emit_autos(out, g);
    if (wants("brute_D")) out["brute_D"] = brute_distinguishing_number(g, lim);
    if (wants("brute_F")) {
      auto fix = brute_fixing_number(g, lim);
      out["brute_F"] = fix.size;
      out["brute_fixing_witness"] = fix.witness;
    }
    if (!args.coloring.empty()) {
      auto colors = parse_int_list(args.coloring, ',');
      int t = 1;
      for (int c : colors) t = std::max(t, c);
      out["is_distinguishing"] = is_distinguishing(g, Coloring::make(colors, t), lim);
    }
    std::cout << out.dump() << "\n";
    return 0;
  }

  Tree t = parse_edge_list_tree(text);
  out["n"] = t.n();
  if (wants("D")) out["D"] = distinguishing_number(t);
  FixingNumberResult fix;
  bool have_fix = false;
  if (wants("F") || wants("fixing_witness") || wants("density")) {
    fix = fixing_number(t);
    have_fix = true;
  }
  if (wants("F")) out["F"] = fix.size;
  if (wants("fixing_witness")) out["fixing_witness"] = fix.witness;
  if (wants("density") && have_fix)
    out["density"] = Rational(fix.size, t.n()).str();
  if (wants("ecc")) {
    auto x = eccentric_sequence_of(t);
    out["radius"] = x.r();
    out["diameter"] = x.d();
    out["eccentric_sequence"] = json::parse(x.json());
  }
  if (wants("autos")) emit_autos(out, t.g);
  if (wants("brute_D")) out["brute_D"] = brute_distinguishing_number(t.g, lim);
  if (wants("brute_F")) {
    auto bfix = brute_fixing_number(t.g, lim);
    out["brute_F"] = bfix.size;
    out["brute_fixing_witness"] = bfix.witness;
  }
  if (!args.coloring.empty()) {
    auto colors = parse_int_list(args.coloring, ',');
    int maxc = 1;
    for (int c : colors) maxc = std::max(maxc, c);
    Coloring col = Coloring::make(colors, maxc);
    out["is_distinguishing"] = is_distinguishing(t.g, col, lim);
    if (!args.dot_path.empty()) write_file(args.dot_path, to_dot(t.g, &col));
  } else if (!args.dot_path.empty()) {
    write_file(args.dot_path, to_dot(t.g));
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_spectrum(const std::string& input, int t_flag) {
  BruteLimits lim = limits_from_env();
  Graph g = parse_edge_list_graph(read_file(input));
  json out;
  if (t_flag > 0) {
    BruteLimits one = lim;
    one.spectrum_t = std::max(one.spectrum_t, t_flag);
    out["D"] = brute_distinguishing_number(g, lim);
    out["t"] = t_flag;
    out["rho"] = brute_paint_cost(g, t_flag, one);
  } else {
    auto s = paint_cost_spectrum(g, lim);
    out["D"] = s.D;
    out["spectrum"] = s.costs;
  }
  std::cout << out.dump() << "\n";
  return 0;
}

struct GenUniversalArgs {
  std::string kind = "T";
  int r = 1;
  int D = 2;
  bool catalog_only = false;
  bool search = false;
  std::string dot_path, edges_path;
};

int run_gen_universal(const GenUniversalArgs& args) {
  if (args.kind != "T" && args.kind != "U")
    throw CLI::ValidationError("--kind must be T or U");
  UniversalBudget budget;
  if (args.search) {
    std::cerr << "warning: experimental search mode; capacities are probe results, "
                 "not asserted correct\n";
    auto catalog = universal_catalog_search(args.r, args.D, 8, budget);
    std::cout << catalog_csv(catalog);
    return 0;
  }
  UniversalSpec spec{args.kind[0], args.r, args.D};
  if (args.catalog_only) {
    std::cout << catalog_csv(universal_catalog(spec, budget));
    return 0;
  }
  auto built = build_universal(spec, budget);
  std::cout << catalog_csv(built.catalog);
  if (!built.tree) {
    std::cerr << "note: explicit tree order " << built.catalog.explicit_order().str()
              << " exceeds the budget; catalog only\n";
  } else {
    if (!args.dot_path.empty()) write_file(args.dot_path, to_dot(built.tree->tree.g));
    if (!args.edges_path.empty())
      write_file(args.edges_path, serialize_edge_list(built.tree->tree.g));
  }
  return 0;
}

struct GenExtremalArgs {
  std::string id;
  std::string params;
  std::string format = "edges";
};

int run_gen_extremal(const GenExtremalArgs& args) {
  ConstructionParams p;
  std::istringstream in(args.params);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    size_t eq = tok.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--params entries must be key=value");
    std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
    if (key == "k") p.k = std::stoi(value);
    else if (key == "D" || key == "d" || key == "ones") p.d = std::stoi(value);
    else if (key == "r") p.r = std::stoi(value);
    else if (key == "legs") p.legs = parse_int_list(value, '+');
    else if (key == "X") p.sequence = value;
    else throw CLI::ValidationError("unknown --params key: " + key);
  }
  Graph g = construct(args.id, p);
  if (args.format == "edges")
    std::cout << serialize_edge_list(g);
  else if (args.format == "dot")
    std::cout << to_dot(g);
  else
    throw CLI::ValidationError("--format must be edges or dot");
  return 0;
}

int run_verify(const std::string& check, int max_n, int jobs) {
  auto ids = campaign_ids();
  if (std::find(ids.begin(), ids.end(), check) == ids.end()) {
    std::cerr << "error: unknown check id \"" << check << "\"; known:";
    for (const auto& id : ids) std::cerr << " " << id;
    std::cerr << "\n";
    return 2;
  }
  auto report = run_campaign(check, max_n, jobs);
  std::cout << report.csv();
  if (!report.ok()) {
    std::cerr << "violations:\n";
    for (const auto& row : report.rows)
      for (const auto& v : row.violations) std::cerr << "  n=" << row.n << " " << v << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symtree: symmetry parameters of trees, universal trees, and "
               "exhaustive verification"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  auto* compute = app.add_subcommand("compute", "tree parameters from an edge list");
  compute->add_option("--input", compute_args.input, "edge-list file")->required();
  compute->add_option("--params", compute_args.params,
                      "comma list of D,F,fixing_witness,density,ecc,autos,brute_D,brute_F");
  compute->add_option("--coloring", compute_args.coloring,
                      "comma list of 1-based colors; adds is_distinguishing");
  compute->add_option("--dot", compute_args.dot_path, "write a DOT rendering here");
  compute->add_flag("--graph", compute_args.graph_mode,
                    "general-graph mode (brute parameters only)");

  std::string spectrum_input;
  int spectrum_t = 0;
  auto* spectrum = app.add_subcommand("spectrum", "paint cost spectrum (brute force)");
  spectrum->add_option("--input", spectrum_input, "edge-list file")->required();
  spectrum->add_option("--t", spectrum_t, "single palette size instead of the full spectrum");

  auto* gen = app.add_subcommand("gen", "generate named trees and universal trees");
  gen->require_subcommand(1);
  GenUniversalArgs uargs;
  auto* guniv = gen->add_subcommand("universal", "universal tree catalog / explicit tree");
  guniv->add_option("--kind", uargs.kind, "T or U")->required();
  guniv->add_option("--r", uargs.r, "radius")->required();
  guniv->add_option("--D", uargs.D, "palette size")->required();
  guniv->add_flag("--catalog-only", uargs.catalog_only, "skip explicit materialization");
  guniv->add_flag("--search", uargs.search, "experimental probe for kind U, r >= 3");
  guniv->add_option("--dot", uargs.dot_path, "write explicit tree as DOT");
  guniv->add_option("--edges", uargs.edges_path, "write explicit tree as edge list");

  GenExtremalArgs eargs;
  auto* gext = gen->add_subcommand("extremal", "named constructions");
  gext->add_option("--id", eargs.id, "construction id")->required();
  gext->add_option("--params", eargs.params, "k=..,D=..,r=..,legs=a+b+c,X=..");
  gext->add_option("--format", eargs.format, "edges (default) or dot");

  std::string check;
  int max_n = 10, jobs = 0;
  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("--check", check, "campaign id")->required();
  verify->add_option("--max-n", max_n, "largest tree order")->required();
  verify->add_option("--jobs", jobs, "parallel workers (default: hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return run_compute(compute_args);
    if (spectrum->parsed()) return run_spectrum(spectrum_input, spectrum_t);
    if (gen->parsed()) {
      if (guniv->parsed()) return run_gen_universal(uargs);
      if (gext->parsed()) return run_gen_extremal(eargs);
    }
    if (verify->parsed()) {
      if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
      if (jobs <= 0) jobs = 1;
      return run_verify(check, max_n, jobs);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
