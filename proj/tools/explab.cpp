// explab: generate graphs, evaluate expansion bounds, verify them exhaustively,
// and build expander codes from the command line.

#include <CLI11.hpp>

#include <cctype>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "explab.hpp"

namespace {

using namespace explab;

enum Exit : int { kOk = 0, kInternal = 1, kBadInput = 2, kHypothesis = 3, kViolation = 4 };

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::HypothesisViolated:
      return kHypothesis;
    case ErrorCode::CounterexampleFound:
    case ErrorCode::CheckFailed:
    case ErrorCode::InternalMismatch:
      return kViolation;
    case ErrorCode::NoConvergence:
    case ErrorCode::Overflow:
      return kInternal;
    default:
      return kBadInput;
  }
}

struct Globals {
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  std::string out;
  std::string format;  // empty: csv for sweeps, json otherwise
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty() || g.out == "-")
    std::cout << text;
  else
    write_text_file(g.out, text);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

bool parse_int(std::string_view s, int& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

/// A graph argument is either a JSON file or a built-in name:
/// k<n>, c<n>, petersen, paley<q>.
struct ResolvedGraph {
  Graph graph;
  std::string source;  // canonical text fed to the input digest
};

ResolvedGraph resolve_graph(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::string text = read_text_file(arg);
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      detail::fail(ErrorCode::BadParameters, arg + ": " + e.what());
    }
    Graph g = graph_from_json(j);
    return {g, to_json(g).dump()};
  }
  std::string name;
  for (char ch : arg) name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  int v = 0;
  if (name == "petersen") return {gen_petersen(), "petersen"};
  if (name.size() > 1 && name[0] == 'k' && parse_int(name.substr(1), v)) return {gen_complete(v), name};
  if (name.size() > 1 && name[0] == 'c' && parse_int(name.substr(1), v)) return {gen_cycle(v), name};
  if (name.rfind("paley", 0) == 0 && parse_int(name.substr(5), v)) return {gen_paley(v), name};
  detail::fail(ErrorCode::BadParameters, "unknown graph '" + arg + "' (not a file; try k4, c5, petersen, paley13)");
}

/// Inner/base code names: rep<n>, parity<n>, hamming74, rs<n>_<k>; field from --q.
LinearCode resolve_code(const std::string& arg, int q) {
  int p = 0, k = 0;
  for (int cand = 2; cand <= q; ++cand)
    if (q % cand == 0) {
      p = cand;
      break;
    }
  int e = 0, t = q;
  for (; t > 1 && t % p == 0; t /= p) ++e;
  detail::require(t == 1, ErrorCode::NonPrime, std::to_string(q) + " is not a prime power");
  const Field f = Field::make(p, e);
  int n = 0;
  if (arg == "hamming74") return code_hamming74();
  if (arg.rfind("rep", 0) == 0 && parse_int(arg.substr(3), n)) return code_repetition(n, f);
  if (arg.rfind("parity", 0) == 0 && parse_int(arg.substr(6), n)) return code_parity(n, f);
  if (arg.rfind("rs", 0) == 0) {
    auto us = arg.find('_');
    if (us != std::string::npos && parse_int(arg.substr(2, us - 2), n) && parse_int(arg.substr(us + 1), k))
      return code_rs(n, k, f);
  }
  detail::fail(ErrorCode::BadParameters, "unknown code '" + arg + "' (try rep3, parity4, hamming74, rs7_3)");
}

std::optional<Rational> parse_fraction(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return Rational::parse(s);
}

/// "8", "2..10" or "m=2..10".
std::pair<int, int> parse_m_range(std::string s) {
  if (s.rfind("m=", 0) == 0) s = s.substr(2);
  int lo = 0, hi = 0;
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    detail::require(parse_int(s, lo), ErrorCode::BadParameters, "bad m range: " + s);
    return {lo, lo};
  }
  detail::require(parse_int(s.substr(0, dots), lo) && parse_int(s.substr(dots + 2), hi), ErrorCode::BadParameters,
                  "bad m range: " + s);
  return {lo, hi};
}

void flag_degenerate(bool degenerate, const std::string& what) {
  if (degenerate) std::cerr << "DEGENERATE: " << what << "\n";
}

// --- graph ------------------------------------------------------------------

struct GraphArgs {
  int complete = 0, cycle = 0, paley = 0;
  bool petersen = false;
  std::vector<int> random;
  std::vector<int> circulant;  // n, then offsets
  bool edge_vertex = false;
  std::string ev_out;
};

int cmd_graph(const Globals& g, const GraphArgs& a) {
  std::optional<Graph> graph;
  std::string spec;
  int chosen = 0;
  if (a.complete) ++chosen, graph = gen_complete(a.complete), spec = "complete:" + std::to_string(a.complete);
  if (a.cycle) ++chosen, graph = gen_cycle(a.cycle), spec = "cycle:" + std::to_string(a.cycle);
  if (a.paley) ++chosen, graph = gen_paley(a.paley), spec = "paley:" + std::to_string(a.paley);
  if (a.petersen) ++chosen, graph = gen_petersen(), spec = "petersen";
  if (!a.random.empty()) {
    ++chosen;
    graph = gen_random_regular(a.random[0], a.random[1], g.seed);
    spec = "random:" + std::to_string(a.random[0]) + ":" + std::to_string(a.random[1]);
  }
  if (!a.circulant.empty()) {
    ++chosen;
    std::vector<int> offs(a.circulant.begin() + 1, a.circulant.end());
    graph = gen_circulant(a.circulant[0], offs);
    spec = "circulant";
    for (int x : a.circulant) spec += ":" + std::to_string(x);
  }
  detail::require(chosen == 1, ErrorCode::BadParameters, "choose exactly one generator");

  json gj = to_json(*graph);
  gj["meta"] = meta_block(g.seed, g.tol, spec);
  if (!a.edge_vertex) {
    emit(g, dump(gj));
    return kOk;
  }
  json bj = to_json(edge_vertex_graph(*graph));
  bj["meta"] = meta_block(g.seed, g.tol, spec + ":edge-vertex");
  if (g.out.empty() || g.out == "-") {
    std::cout << gj.dump() << "\n" << bj.dump() << "\n";
    return kOk;
  }
  std::string ev_path = a.ev_out;
  if (ev_path.empty()) {
    std::filesystem::path p(g.out);
    ev_path = (p.parent_path() / (p.stem().string() + ".edge_vertex" + p.extension().string())).string();
  }
  write_text_file(g.out, dump(gj));
  write_text_file(ev_path, dump(bj));
  return kOk;
}

// --- bounds -----------------------------------------------------------------

struct BoundsArgs {
  int d = 0, c = 2;
  double mu = -1;
  std::string alpha, epsilon, r, delta0, gamma;
  std::int64_t n = 0;
  std::string graph;
  std::string sweep;
};

int cmd_bounds(const Globals& g, const BoundsArgs& a) {
  if (!a.sweep.empty()) {
    auto [lo, hi] = parse_m_range(a.sweep);
    bool all_ok = true;
    for (int m = lo; m <= hi; ++m) {
      auto r = family_report(m);
      all_ok = all_ok && r.hypothesis_ok;
      flag_degenerate(r.degenerate, "m=" + std::to_string(m) + ": d*eps <= mu");
    }
    const std::string input = "sweep-m:" + std::to_string(lo) + ".." + std::to_string(hi);
    if (g.format != "json") {
      const json meta = meta_block(g.seed, g.tol, input);
      emit(g, "# " + meta.dump() + "\n" + family_sweep_csv(lo, hi));
    } else {
      json rows = json::array();
      for (int m = lo; m <= hi; ++m) {
        json row = to_json(family_report(m));
        row["m"] = m;
        rows.push_back(row);
      }
      emit(g, dump(json{{"meta", meta_block(g.seed, g.tol, input)}, {"rows", rows}}));
    }
    return all_ok ? kOk : kHypothesis;
  }

  ExpansionParams p;
  std::string input;
  if (!a.graph.empty()) {
    auto rg = resolve_graph(a.graph);
    auto sp = graph_spectrum(rg.graph, g.tol);
    p.d = sp.degree;
    p.mu = std::min(sp.mu(), static_cast<double>(sp.degree));
    p.n = rg.graph.n();
    p.lambda1 = sp.lambda1();
    p.lambda_min = sp.lambda_min();
    input = rg.source;
  } else {
    detail::require(a.d > 0 && a.mu >= 0, ErrorCode::BadParameters, "need --graph or both --d and --mu");
    p.d = a.d;
    p.mu = a.mu;
    if (a.n > 0) p.n = a.n;
  }
  p.c = a.c;
  p.alpha = parse_fraction(a.alpha);
  p.epsilon = parse_fraction(a.epsilon);
  p.r = parse_fraction(a.r);
  p.delta0 = parse_fraction(a.delta0);
  p.gamma = parse_fraction(a.gamma);
  auto rep = evaluate_bounds(p);
  input += "|" + to_json(p).dump();
  json j = to_json(rep);
  j["status"] = rep.degenerate ? "DEGENERATE" : "OK";
  j["meta"] = meta_block(g.seed, g.tol, input);
  flag_degenerate(rep.degenerate, rep.notes.empty() ? "see notes" : rep.notes.front());
  emit(g, dump(j));
  return rep.hypothesis_ok ? kOk : kHypothesis;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string graph;
  std::string corpus;
  bool all = false;
  std::vector<std::string> alphas{"1/4", "1/3", "1/2"};
};

json verify_one(const Graph& gr, const std::string& name, const VerifyArgs& a, double tol, bool with_expansion,
                bool& violated, bool& degenerate) {
  detail::require(gr.n() <= kMaxOracleVertices, ErrorCode::TooLarge,
                  name + ": n exceeds " + std::to_string(kMaxOracleVertices));
  gr.assert_regular();
  auto sp = graph_spectrum(gr, tol);
  auto rep = verify_alon_chung(gr, sp, name);
  rep.merge(verify_nbhd_and_boundary(gr, sp, name));
  if (with_expansion) {
    std::vector<Rational> alphas;
    for (const auto& s : a.alphas) alphas.push_back(Rational::parse(s));
    rep.merge(verify_expansion(gr, sp, alphas, name));
  }
  violated = violated || !rep.ok();
  degenerate = degenerate || sp.degenerate();
  flag_degenerate(sp.degenerate(), name + ": mu = d");
  json j = to_json(rep);
  j["mu"] = sp.mu();
  j["status"] = !rep.ok() ? "VIOLATION" : sp.degenerate() ? "DEGENERATE" : "OK";
  return j;
}

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  detail::require(a.graph.empty() != a.corpus.empty(), ErrorCode::BadParameters, "give exactly one of --graph, --corpus");
  bool violated = false, degenerate = false;
  json reports = json::array();
  std::string input;
  if (!a.graph.empty()) {
    auto rg = resolve_graph(a.graph);
    input = rg.source;
    reports.push_back(verify_one(rg.graph, a.graph, a, g.tol, a.all, violated, degenerate));
  } else {
    detail::require(a.corpus == "small", ErrorCode::BadParameters, "unknown corpus '" + a.corpus + "'");
    input = "corpus:small";
    for (const auto& ng : corpus_small())
      reports.push_back(verify_one(ng.graph, ng.name, a, g.tol, true, violated, degenerate));
  }
  std::uint64_t checked = 0, violations = 0;
  for (const auto& r : reports) {
    checked += r["checked"].get<std::uint64_t>();
    violations += r["violations"].size();
  }
  json out{{"meta", meta_block(g.seed, g.tol, input)},
           {"instances", reports.size()},
           {"checked", checked},
           {"violations", violations},
           {"degenerate", degenerate},
           {"reports", reports}};
  emit(g, dump(out));
  std::cerr << reports.size() << " instance(s), " << checked << " checks, " << violations << " violation(s)\n";
  return violated ? kViolation : kOk;
}

// --- code -------------------------------------------------------------------

struct CodeArgs {
  std::string kind;
  std::string graph;
  std::string inner;
  int q = 2;
  std::optional<std::uint64_t> order_seed;
};

int cmd_code(const Globals& g, const CodeArgs& a) {
  auto rg = resolve_graph(a.graph);
  auto sp = graph_spectrum(rg.graph, g.tol);
  LinearCode inner = resolve_code(a.inner, a.q);
  const std::string input = a.kind + "|" + rg.source + "|" + a.inner + "|q=" + std::to_string(a.q) +
                            (a.order_seed ? "|order=" + std::to_string(*a.order_seed) : "");
  json out{{"meta", meta_block(g.seed, g.tol, input)}};
  int rc = kOk;
  if (a.kind == "ss") {
    auto b = edge_vertex_graph(rg.graph);
    auto code = sipser_spielman_code(b, inner);
    auto rep = ss_code_report(b, inner, code, sp.mu(), sp.exact_mu);
    out["code"] = to_json(code);
    out["report"] = to_json(rep);
    if (!rep.hypothesis_ok) {
      std::cerr << "HypothesisViolated: d*eps <= mu; distance bound not applicable\n";
      rc = kHypothesis;
    }
    if (!rep.bound_holds || !rep.constraints_ok || !rep.rate_ok) rc = kViolation;
  } else {
    std::optional<NeighborOrder> order;
    if (a.order_seed) order = shuffled_neighbor_order(rg.graph, *a.order_seed);
    auto ec = expander_map(rg.graph, inner, order);
    auto rep = expander_map_distance(ec, sp);
    out["code"] = to_json(inner);
    out["degree"] = ec.degree();
    out["report"] = to_json(rep);
    if (!rep.bound_holds || !rep.ramanujan_holds) rc = kViolation;
  }
  flag_degenerate(sp.degenerate(), "mu = d");
  emit(g, dump(out));
  return rc;
}

// --- spectrum ---------------------------------------------------------------

int cmd_spectrum(const Globals& g, const std::string& graph_arg, bool edge_vertex) {
  auto rg = resolve_graph(graph_arg);
  auto sp = graph_spectrum(rg.graph, g.tol);
  json out = to_json(sp);
  if (edge_vertex) out["edge_vertex"] = to_json(edge_vertex_spectrum_check(rg.graph));
  out["meta"] = meta_block(g.seed, g.tol, rg.source);
  flag_degenerate(sp.degenerate(), "mu = d");
  emit(g, dump(out));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral expansion bounds, exhaustive verification and expander codes"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "64-bit seed, recorded in every output");
  app.add_option("--tol", g.tol, "Eigensolver tolerance")->check(CLI::PositiveNumber);
  app.add_option("-o,--out", g.out, "Output path (default stdout)");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.set_version_flag("--version", std::string(kToolVersion));

  GraphArgs ga;
  auto* graph = app.add_subcommand("graph", "Generate a regular graph");
  graph->add_option("--complete", ga.complete, "Complete graph K_n");
  graph->add_option("--cycle", ga.cycle, "Cycle C_n");
  graph->add_option("--paley", ga.paley, "Paley graph on q vertices");
  graph->add_flag("--petersen", ga.petersen, "Petersen graph");
  graph->add_option("--random", ga.random, "Random regular graph: N D")->expected(2);
  graph->add_option("--circulant", ga.circulant, "Circulant: N OFFSET...")->expected(2, 64);
  graph->add_flag("--edge-vertex", ga.edge_vertex, "Also write the edge-vertex bipartite graph");
  graph->add_option("--edge-vertex-out", ga.ev_out, "Path for the edge-vertex graph");

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Evaluate closed-form bounds");
  bounds->add_option("--d", ba.d, "Degree");
  bounds->add_option("--mu", ba.mu, "Second eigenvalue in absolute value");
  bounds->add_option("--c", ba.c, "Input degree");
  bounds->add_option("--alpha", ba.alpha, "Set fraction, p/q");
  bounds->add_option("--epsilon", ba.epsilon, "Inner relative distance, p/q");
  bounds->add_option("--r", ba.r, "Inner rate, p/q");
  bounds->add_option("--delta0", ba.delta0, "Base code relative distance, p/q");
  bounds->add_option("--gamma", ba.gamma, "|S|/n for edge-count bounds, p/q");
  bounds->add_option("--n", ba.n, "Vertex count");
  bounds->add_option("--graph", ba.graph, "Graph file or name; computes d, mu, n");
  bounds->add_option("--sweep-m,--sweep", ba.sweep, "Family sweep: M, LO..HI or m=LO..HI");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check every inequality over all vertex subsets");
  verify->add_option("--graph", va.graph, "Graph file or name");
  verify->add_option("--corpus", va.corpus, "Named corpus (small)");
  verify->add_flag("--all", va.all, "Include edge-vertex expansion checks");
  verify->add_option("--alphas", va.alphas, "Set fractions for expansion checks")->delimiter(',');

  CodeArgs ca;
  auto* code = app.add_subcommand("code", "Build an expander code and brute-force its distance");
  code->add_option("kind", ca.kind, "ss (constraint code on the edge-vertex graph) or exp (expander map)")
      ->required()
      ->check(CLI::IsMember({"ss", "exp"}));
  code->add_option("--graph", ca.graph, "Graph file or name")->required();
  code->add_option("--inner", ca.inner, "Inner/base code: repN, parityN, hamming74, rsN_K")->required();
  code->add_option("--q", ca.q, "Field size for the inner code")->check(CLI::Range(2, 1024));
  code->add_option("--order-seed", ca.order_seed, "Shuffle neighbor orders with this seed (exp only)");

  std::string spec_graph;
  bool spec_ev = false;
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and mu of a graph");
  spectrum->add_option("--graph", spec_graph, "Graph file or name")->required();
  spectrum->add_flag("--edge-vertex", spec_ev, "Also check the edge-vertex spectrum relations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (*graph) return cmd_graph(g, ga);
    if (*bounds) return cmd_bounds(g, ba);
    if (*verify) return cmd_verify(g, va);
    if (*code) return cmd_code(g, ca);
    if (*spectrum) return cmd_spectrum(g, spec_graph, spec_ev);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
