// Command-line front end. Every verb prints line-oriented `key value` text and
// exits 0 on success, 1 on a negative verdict, 2 on bad input and 3 when the
// search budget runs out.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rainbow/bipartite.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/generate.hpp"
#include "rainbow/io.hpp"
#include "rainbow/reduction.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;
constexpr int kBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw rainbow::InputError(rainbow::ErrorKind::kParse, "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw rainbow::InputError(rainbow::ErrorKind::kParse, "cannot write " + path);
  }
}

struct Options {
  std::string graph;
  std::string coloring;
  std::string out;
  int k = 0;
  std::uint64_t budget = rainbow::SearchBudget{}.max_nodes;
  bool witness = false;
  std::uint64_t seed = 0;
  int threads = 1;
  long long s = 0;
  long long t = 0;
  int n = 0;
  int u = 0;
  int v = 0;
  int l = 0;
  std::string family;
  std::string probability = "1/2";
};

// Prints the coloring to stdout, or writes it to PREFIX.coloring with --out.
void emit_coloring(const Options& o, const rainbow::Graph& g, const rainbow::EdgeColoring& c) {
  const std::string text = rainbow::serialize_coloring(g, c);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_file(o.out + ".coloring", text);
    std::cout << "coloring " << o.out << ".coloring\n";
  }
}

void print_path(const std::string& key, const rainbow::Path& p) {
  std::cout << key;
  for (rainbow::Vertex x : p.vertices) std::cout << ' ' << x;
  std::cout << '\n';
}

int run_verify(const Options& o, rainbow::VerifyMode mode) {
  const auto g = rainbow::parse_graph(read_file(o.graph));
  const auto c = rainbow::parse_coloring(read_file(o.coloring), g);
  rainbow::VerifyOptions opts{o.witness, o.threads};
  const auto report = mode == rainbow::VerifyMode::kRainbow
                          ? rainbow::is_rainbow_connected(g, c, opts)
                          : rainbow::is_strong_rainbow_connected(g, c, opts);
  std::cout << "mode " << (mode == rainbow::VerifyMode::kRainbow ? "rainbow" : "strong-rainbow")
            << '\n';
  std::cout << "verdict " << (report.verdict ? "true" : "false") << '\n';
  if (report.failing_pair) {
    std::cout << "failing_pair " << report.failing_pair->u << ' ' << report.failing_pair->v
              << '\n';
  }
  for (const auto& [pair, path] : report.witnesses) {
    print_path("witness " + std::to_string(pair.u) + ' ' + std::to_string(pair.v) + " :", path);
  }
  return report.verdict ? kOk : kNegative;
}

int run_solve(const Options& o, rainbow::SolveMode mode) {
  const auto g = rainbow::parse_graph(read_file(o.graph));
  const rainbow::SearchBudget budget{o.budget};
  const auto result =
      mode == rainbow::SolveMode::kRc ? rainbow::rc_exact(g, budget) : rainbow::src_exact(g, budget);
  std::cout << (mode == rainbow::SolveMode::kRc ? "rc " : "src ") << result.value << '\n';
  std::cout << "nodes " << result.stats.nodes << '\n';
  std::cout << "colorings_tested " << result.stats.colorings_tested << '\n';
  emit_coloring(o, g, result.witness);
  return kOk;
}

int run_rc_le_k(const Options& o) {
  const auto g = rainbow::parse_graph(read_file(o.graph));
  require_connected(g);
  const auto d = rainbow::decide_rc_le_k(g, o.k, rainbow::SearchBudget{o.budget});
  switch (d.outcome) {
    case rainbow::DecideOutcome::kFound:
      std::cout << "answer yes\n";
      emit_coloring(o, g, *d.coloring);
      return kOk;
    case rainbow::DecideOutcome::kNo:
      std::cout << "answer no\n";
      return kNegative;
    case rainbow::DecideOutcome::kBudgetExhausted:
      std::cout << "answer budget-exhausted\n";
      return kBudget;
  }
  return kBadInput;
}

int run_rc2(const Options& o) {
  const auto g = rainbow::parse_graph(read_file(o.graph));
  const auto d = rainbow::decide_bipartite_rc2(g, o.witness);
  std::cout << (d.answer ? "yes" : "no") << '\n';
  std::cout << "reason " << rainbow::to_token(d.reason) << '\n';
  if (d.missing_pair) {
    std::cout << "missing_pair " << d.missing_pair->u << ' ' << d.missing_pair->v << '\n';
  }
  if (d.params) std::cout << "params " << d.params->s << ' ' << d.params->t << '\n';
  if (d.witness) emit_coloring(o, g, *d.witness);
  return d.answer ? kOk : kNegative;
}

int run_reduce(const Options& o) {
  const auto g = rainbow::parse_graph(read_file(o.graph));
  const auto c = rainbow::parse_coloring(read_file(o.coloring), g);
  const auto out = rainbow::subdivide_reduce(g, c);
  write_file(o.out + ".graph", rainbow::serialize_graph(out.g_prime));
  write_file(o.out + ".coloring", rainbow::serialize_coloring(out.g_prime, out.c_prime));
  write_file(o.out + ".prov", rainbow::serialize_provenance(out));
  std::cout << "vertices " << out.g_prime.order() << '\n';
  std::cout << "edges " << out.g_prime.size() << '\n';
  std::cout << "graph " << o.out << ".graph\n";
  std::cout << "coloring " << o.out << ".coloring\n";
  std::cout << "provenance " << o.out << ".prov\n";
  return kOk;
}

int run_gen(const Options& o) {
  rainbow::GeneratorSpec spec;
  spec.family = rainbow::parse_family(o.family);
  spec.n = o.n;
  spec.s = static_cast<int>(o.s);
  spec.t = static_cast<int>(o.t);
  spec.seed = o.seed;
  const auto slash = o.probability.find('/');
  try {
    if (slash == std::string::npos) throw std::invalid_argument("no slash");
    spec.p_num = std::stoull(o.probability.substr(0, slash));
    spec.p_den = std::stoull(o.probability.substr(slash + 1));
  } catch (const std::exception&) {
    throw rainbow::InputError(rainbow::ErrorKind::kParse,
                              "--p expects NUM/DEN, got '" + o.probability + "'");
  }
  const std::string text = rainbow::serialize_graph(rainbow::generate(spec));
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_file(o.out + ".graph", text);
    std::cout << "graph " << o.out << ".graph\n";
  }
  return kOk;
}

int run_paths(const Options& o) {
  const auto g = rainbow::parse_graph(read_file(o.graph));
  const auto paths = rainbow::enumerate_paths_up_to(g, o.u, o.v, o.l);
  std::cout << "count " << paths.size() << '\n';
  for (const auto& p : paths) print_path("path", p);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow connection toolkit for edge-colored graphs"};
  app.require_subcommand(1);
  Options o;

  auto graph_opt = [&](CLI::App* cmd) {
    cmd->add_option("--graph", o.graph, "Graph file (p edge / e records)")->required();
  };
  auto coloring_opt = [&](CLI::App* cmd) {
    cmd->add_option("--coloring", o.coloring, "Coloring file (c records)")->required();
  };
  auto budget_opt = [&](CLI::App* cmd) {
    cmd->add_option("--budget", o.budget, "Search node cap")->check(CLI::PositiveNumber);
  };
  auto out_opt = [&](CLI::App* cmd) {
    cmd->add_option("--out", o.out, "Output file prefix");
  };

  auto* verify = app.add_subcommand("verify", "Check rainbow connectivity of a coloring");
  auto* verify_strong =
      app.add_subcommand("verify-strong", "Check strong rainbow connectivity of a coloring");
  for (auto* cmd : {verify, verify_strong}) {
    graph_opt(cmd);
    coloring_opt(cmd);
    cmd->add_flag("--witness", o.witness, "Print a witness path for every pair");
    cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  }

  auto* rc = app.add_subcommand("rc", "Exact rainbow connection number");
  auto* src = app.add_subcommand("src", "Exact strong rainbow connection number");
  for (auto* cmd : {rc, src}) {
    graph_opt(cmd);
    budget_opt(cmd);
    out_opt(cmd);
  }

  auto* rc_le_k = app.add_subcommand("rc-le-k", "Decide rc(G) <= k by canonical search");
  graph_opt(rc_le_k);
  rc_le_k->add_option("--k", o.k, "Color bound")->required()->check(CLI::PositiveNumber);
  budget_opt(rc_le_k);
  out_opt(rc_le_k);

  auto* rc2 = app.add_subcommand("decide-rc2-bipartite",
                                 "Polynomial-time rc(G) = 2 test for bipartite graphs");
  graph_opt(rc2);
  rc2->add_flag("--witness", o.witness, "Also produce a rainbow 2-coloring");
  out_opt(rc2);

  auto* reduce = app.add_subcommand("reduce", "Subdivide every edge into a bipartite instance");
  graph_opt(reduce);
  coloring_opt(reduce);
  reduce->add_option("--out", o.out, "Output file prefix")->required();

  auto* formula = app.add_subcommand("formula-kst", "Closed-form rc(K_{s,t}) for 2 <= s <= t");
  formula->add_option("--s", o.s, "Smaller side")->required();
  formula->add_option("--t", o.t, "Larger side")->required();

  auto* gen = app.add_subcommand("gen", "Generate a connected graph");
  gen->add_option("--family", o.family,
                  "complete | complete-bipartite | path | cycle | star | random-tree | "
                  "random-connected")
      ->required();
  gen->add_option("--n", o.n, "Vertex count");
  gen->add_option("--s", o.s, "First side of K_{s,t}");
  gen->add_option("--t", o.t, "Second side of K_{s,t}; leaves of a star");
  gen->add_option("--p", o.probability, "Edge probability NUM/DEN (random-connected)");
  gen->add_option("--seed", o.seed, "PRNG seed");
  out_opt(gen);

  auto* paths = app.add_subcommand("paths", "Enumerate simple u-v paths up to a length");
  graph_opt(paths);
  paths->add_option("--u", o.u, "Start vertex")->required();
  paths->add_option("--v", o.v, "End vertex")->required();
  paths->add_option("--l", o.l, "Maximum length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*verify) return run_verify(o, rainbow::VerifyMode::kRainbow);
    if (*verify_strong) return run_verify(o, rainbow::VerifyMode::kStrongRainbow);
    if (*rc) return run_solve(o, rainbow::SolveMode::kRc);
    if (*src) return run_solve(o, rainbow::SolveMode::kSrc);
    if (*rc_le_k) return run_rc_le_k(o);
    if (*rc2) return run_rc2(o);
    if (*reduce) return run_reduce(o);
    if (*formula) {
      std::cout << "rc " << rainbow::kst_rc_formula(o.s, o.t) << '\n';
      return kOk;
    }
    if (*gen) return run_gen(o);
    if (*paths) return run_paths(o);
  } catch (const rainbow::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const rainbow::BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kBudget;
  }
  return kBadInput;
}
