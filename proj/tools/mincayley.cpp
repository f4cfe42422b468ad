// mincayley: command-line front end for the mcg library.
//
// Exit codes: 0 success / property holds; 1 property failed or UNSAT where a
// positive answer was requested; 2 usage or parse error; 3 solver budget
// exhausted.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcg/chromatic.hpp"
#include "mcg/constructive.hpp"
#include "mcg/genset.hpp"
#include "mcg/graph.hpp"
#include "mcg/group.hpp"
#include "mcg/popular.hpp"
#include "mcg/repro.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  double time_limit = 300.0;
  long cycle_ceiling = 10'000'000;
  std::string out = "text";
  std::optional<unsigned> seed;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mcg::error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_file(const std::string& arg) {
  if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json") return true;
  return static_cast<bool>(std::ifstream(arg));
}

// Either a Cayley graph from a group spec plus --gens, or a JSON graph file.
mcg::Graph load_graph(const std::string& target, const std::string& gens,
                      mcg::EdgeColoring* ec = nullptr) {
  if (looks_like_file(target)) return mcg::graph_from_json(read_file(target), ec);
  auto g = mcg::make_group(target);
  auto c = mcg::parse_generators(g, gens);
  if (ec) *ec = mcg::natural_edge_coloring(g, c);
  return mcg::cayley_graph(g, c);
}

void emit_graph(const mcg::Graph& g, const mcg::EdgeColoring* ec, const Options& opt) {
  if (opt.out == "json")
    std::cout << mcg::graph_to_json(g, ec) << "\n";
  else if (opt.out == "dot")
    std::cout << mcg::graph_to_dot(g, ec);
  else
    std::cout << g.n << " vertices, " << g.edge_count() << " edges"
              << (ec ? ", " + std::to_string(ec->num_colors()) + " edge colors" : "") << "\n";
}

mcg::EdgeProperty parse_property(const std::string& s) {
  if (s == "no-lonely") return mcg::EdgeProperty::no_lonely;
  if (s == "one-popular") return mcg::EdgeProperty::one_popular;
  throw mcg::parse_error("unknown property '" + s + "' (no-lonely|one-popular)", 0);
}

mcg::VerifyMode parse_mode(const std::string& s, int max_len) {
  if (s == "exhaustive") return mcg::VerifyMode::Exhaustive();
  if (s == "bounded") return mcg::VerifyMode::Bounded(max_len);
  if (s == "triangles") return mcg::VerifyMode::Triangles();
  throw mcg::parse_error("unknown mode '" + s + "' (exhaustive|bounded|triangles)", 0);
}

mcg::CycleScope parse_scope(const std::string& s) {
  if (s == "all") return mcg::CycleScope::all;
  if (s == "triangles") return mcg::CycleScope::triangles;
  if (s == "four-cycles") return mcg::CycleScope::four_cycles;
  throw mcg::parse_error("unknown scope '" + s + "' (all|triangles|four-cycles)", 0);
}

int cmd_group_info(const std::string& spec) {
  auto g = mcg::make_group(spec);
  auto cls = mcg::classify_group(g);
  std::cout << "order " << g.order() << "\n"
            << "abelian " << (cls.abelian ? "yes" : "no") << "\n"
            << "dedekind " << (cls.dedekind ? "yes" : "no") << "\n"
            << "nilpotent " << (cls.nilpotent ? "yes" : "no") << "\n"
            << "index-two-subgroup " << (cls.has_index_two_subgroup ? "yes" : "no") << "\n"
            << "chi-min-class " << mcg::chi_min_classify(g) << "\n";
  return kExitOk;
}

int cmd_chromatic(const std::string& target, const std::string& gens, const Options& opt) {
  auto graph = load_graph(target, gens);
  auto r = mcg::chromatic_number(graph, {opt.time_limit, -1});
  if (!r.exact) {
    std::cout << "budget exhausted: " << r.lower << " <= chi <= " << r.upper << "\n";
    return kExitBudget;
  }
  if (opt.out == "json") {
    std::cout << "{\"chi\": " << r.chi << ", \"coloring\": [";
    for (size_t i = 0; i < r.coloring.color.size(); ++i)
      std::cout << (i ? "," : "") << r.coloring.color[i];
    std::cout << "]}\n";
  } else {
    std::cout << r.chi << "\n";
  }
  return kExitOk;
}

int cmd_clique(const std::string& target, const std::string& gens) {
  auto graph = load_graph(target, gens);
  auto q = mcg::max_clique(graph);
  std::cout << q.size() << "\n";
  return kExitOk;
}

int cmd_genset(const std::string& spec, const std::string& gens) {
  auto g = mcg::make_group(spec);
  mcg::GenSet c{&g, mcg::parse_generators(g, gens)};
  auto r = mcg::analyze_genset(c);
  std::cout << "generates " << (r.generates ? "yes" : "no") << "\n"
            << "minimal " << (r.minimal ? "yes" : "no") << "\n"
            << "semiminimal-in-given-order " << (r.semiminimal_in_given_order ? "yes" : "no")
            << "\n"
            << "semiminimal-some-order " << (r.semiminimal_some_order ? "yes" : "no") << "\n";
  auto b = mcg::chromatic_bound(c);
  if (b.kind == mcg::ChromaticBound::Kind::not_semiminimal)
    std::cout << "chromatic-bound none\n";
  else
    std::cout << "chromatic-bound " << b.value << " ("
              << (b.kind == mcg::ChromaticBound::Kind::minimal ? "minimal" : "semiminimal")
              << ")\n";
  return kExitOk;
}

int cmd_color(const std::string& algo, const std::string& spec, const std::string& gens,
              const Options& opt) {
  auto g = mcg::make_group(spec);
  auto c = mcg::parse_generators(g, gens);
  mcg::VertexColoring col;
  if (algo == "schreier") {
    col = mcg::schreier_product_coloring(g, c);
  } else if (algo == "dedekind") {
    col = mcg::dedekind_three_coloring(g, c);
  } else if (algo == "gdih") {
    if (g.kind() != "gdih" || g.spec().size() < 7)
      throw mcg::parse_error("gdih coloring needs a gdih:(...) group spec", 0);
    auto base = mcg::make_group(g.spec().substr(6, g.spec().size() - 7));
    col = mcg::generalized_dihedral_three_coloring(mcg::make_dihedral_context(base, g, c));
  } else if (algo == "frattini") {
    col = mcg::frattini_three_coloring(g, c);
  } else if (algo == "lift") {
    // lift through the Frattini quotient as the canonical example
    col = mcg::frattini_three_coloring(g, c);
  } else {
    throw mcg::parse_error("unknown algorithm '" + algo + "'", 0);
  }
  auto graph = mcg::cayley_graph(g, c);
  auto check = mcg::verify_vertex_coloring(graph, col);
  if (!check.ok) {
    std::cout << "improper at edge (" << check.bad_edge.first << "," << check.bad_edge.second
              << ")\n";
    return kExitFailed;
  }
  if (opt.out == "json") {
    std::cout << "{\"colors\": " << col.num_colors << ", \"coloring\": [";
    for (size_t i = 0; i < col.color.size(); ++i) std::cout << (i ? "," : "") << col.color[i];
    std::cout << "]}\n";
  } else {
    std::cout << "proper with " << col.num_colors << " colors\n";
  }
  return kExitOk;
}

int cmd_descartes(int k, const Options& opt) {
  auto dg = mcg::descartes_graph(k, opt.seed);
  emit_graph(dg.graph, &dg.coloring, opt);
  auto rep = mcg::verify_descartes(dg);
  if (opt.out == "text")
    std::cout << "certificate " << (rep.passed() ? "pass" : "fail") << " ("
              << rep.cycles_checked << " cycles checked)\n";
  return rep.passed() ? kExitOk : kExitFailed;
}

int cmd_verify_ec(const std::string& path, const std::string& prop, const std::string& mode,
                  int max_len, const Options& opt) {
  mcg::EdgeColoring ec;
  auto graph = load_graph(path, "", &ec);
  auto rep = mcg::verify_edge_coloring(graph, ec, parse_property(prop),
                                       parse_mode(mode, max_len), opt.cycle_ceiling);
  std::cout << (rep.passed ? "pass" : "fail") << " (" << rep.cycles_checked
            << " cycles checked, " << (rep.conclusive ? "conclusive" : "inconclusive") << ")\n";
  if (!rep.passed && rep.violating_cycle) {
    std::cout << "violating cycle:";
    for (int v : *rep.violating_cycle) std::cout << " " << v;
    std::cout << "\n";
  }
  if (!rep.passed && rep.degree_violation)
    std::cout << "vertex " << rep.degree_violation->first << " sees more than two edges of color "
              << rep.degree_violation->second << "\n";
  return rep.passed ? kExitOk : kExitFailed;
}

int cmd_search_ec(const std::string& path, const std::string& prop, const std::string& scope,
                  int max_colors, const Options& opt) {
  auto graph = load_graph(path, "");
  if (max_colors <= 0) max_colors = static_cast<int>(graph.edge_count());
  auto r = mcg::search_edge_coloring(graph, parse_property(prop), parse_scope(scope),
                                     max_colors, {opt.time_limit, -1});
  if (r.status == mcg::SolveStatus::budget_exhausted) {
    std::cout << "budget exhausted\n";
    return kExitBudget;
  }
  if (r.status == mcg::SolveStatus::unsatisfiable) {
    std::cout << "UNSAT\n";
    return kExitFailed;
  }
  std::cout << "SAT\n";
  if (opt.out == "json") std::cout << mcg::graph_to_json(graph, &*r.coloring) << "\n";
  return kExitOk;
}

int cmd_repro(const Options& opt) {
  mcg::ReproOptions ropts;
  ropts.time_limit_s = opt.time_limit;
  if (const char* env = std::getenv("REPRO_TIME_LIMIT")) {
    double v = std::atof(env);
    if (v > 0) ropts.time_limit_s = v;
  }
  int failed = 0;
  for (const auto& r : mcg::run_acceptance(ropts)) {
    std::printf("[%s] criterion %2d (%6.2fs): %s — %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.seconds, r.name.c_str(), r.detail.c_str());
    if (!r.passed) ++failed;
  }
  return failed == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite groups, minimal Cayley graphs, and edge-coloring checks"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--time-limit", opt.time_limit, "solver budget in seconds");
  app.add_option("--cycle-ceiling", opt.cycle_ceiling, "cycle enumeration ceiling");
  app.add_option("--out", opt.out, "output format: text|json|dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  unsigned seed_val = 0;
  auto* seed_opt = app.add_option("--seed", seed_val, "randomization seed");

  std::string spec, gens, algo, path, prop = "no-lonely", mode = "exhaustive", scope = "all";
  int k = 1, max_len = 10, max_colors = 0;

  auto* group = app.add_subcommand("group", "group inspection");
  auto* info = group->add_subcommand("info", "order and classification flags");
  info->add_option("spec", spec)->required();

  auto* cayley = app.add_subcommand("cayley", "build and export a Cayley graph");
  cayley->add_option("spec", spec)->required();
  cayley->add_option("--gens", gens)->required();

  auto* chromatic = app.add_subcommand("chromatic", "exact chromatic number");
  chromatic->add_option("target", spec, "group spec or graph json")->required();
  chromatic->add_option("--gens", gens);

  auto* clique = app.add_subcommand("clique", "maximum clique size");
  clique->add_option("target", spec)->required();
  clique->add_option("--gens", gens);

  auto* genset = app.add_subcommand("genset", "generating-set analysis");
  genset->add_option("spec", spec)->required();
  genset->add_option("--gens", gens)->required();

  auto* color = app.add_subcommand("color", "constructive coloring");
  color->add_option("algo", algo, "lift|schreier|dedekind|gdih|frattini")->required();
  color->add_option("spec", spec)->required();
  color->add_option("--gens", gens)->required();

  auto* descartes = app.add_subcommand("descartes", "level-k construction");
  descartes->add_option("k", k)->required()->check(CLI::Range(1, 3));

  auto* verify = app.add_subcommand("verify-ec", "verify an edge coloring");
  verify->add_option("graph", path)->required();
  verify->add_option("--property", prop);
  verify->add_option("--mode", mode);
  verify->add_option("--max-len", max_len);

  auto* search = app.add_subcommand("search-ec", "search for an edge coloring");
  search->add_option("graph", path)->required();
  search->add_option("--property", prop);
  search->add_option("--scope", scope);
  search->add_option("--max-colors", max_colors);

  auto* repro = app.add_subcommand("repro", "run the full acceptance suite");
  (void)repro;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (seed_opt->count()) opt.seed = seed_val;

  try {
    if (*info) return cmd_group_info(spec);
    if (*cayley) {
      auto g = mcg::make_group(spec);
      auto c = mcg::parse_generators(g, gens);
      auto ec = mcg::natural_edge_coloring(g, c);
      emit_graph(mcg::cayley_graph(g, c), &ec, opt);
      return kExitOk;
    }
    if (*chromatic) return cmd_chromatic(spec, gens, opt);
    if (*clique) return cmd_clique(spec, gens);
    if (*genset) return cmd_genset(spec, gens);
    if (*color) return cmd_color(algo, spec, gens, opt);
    if (*descartes) return cmd_descartes(k, opt);
    if (*verify) return cmd_verify_ec(path, prop, mode, max_len, opt);
    if (*search) return cmd_search_ec(path, prop, scope, max_colors, opt);
    if (*repro) return cmd_repro(opt);
  } catch (const mcg::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mcg::guard_error& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mcg::inconsistency_error& e) {
    std::cerr << "inconsistent input: " << e.what() << "\n";
    return kExitFailed;
  } catch (const mcg::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
