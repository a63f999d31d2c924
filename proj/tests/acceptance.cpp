// Acceptance checks. Usage: acceptance <1-9|all>. Prints one PASS/FAIL line
// per criterion and exits nonzero if any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "explab.hpp"

using namespace explab;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// 1. Edge-vertex spectrum: lambda0(H) = sqrt(2d), mu(H) = sqrt(d + mu(G)),
//    M^T M = A + dI, on K4, C5, Petersen and ten random regular graphs.
//    mu(H) is taken as the second-largest eigenvalue of A(H).
Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<std::pair<std::string, Graph>> graphs{
      {"K4", gen_complete(4)}, {"C5", gen_cycle(5)}, {"Petersen", gen_petersen()}};
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    graphs.emplace_back("rand12_3_s" + std::to_string(seed), gen_random_regular(12, 3, seed));
  int lambda0_ok = 0, mu_ok = 0, gram_ok = 0;
  for (const auto& [name, g] : graphs) {
    const int d = g.degree();
    auto gs = graph_spectrum(g);
    auto hs = spectrum_of(bipartite_adjacency(edge_vertex_graph(g)));
    const double l0 = hs.lambda0(), mu_h = hs.lambda1();
    const bool a = std::abs(l0 - std::sqrt(2.0 * d)) < 1e-8;
    const bool b = std::abs(mu_h - std::sqrt(d + gs.mu())) < 1e-8;
    const bool c = gram_identity_holds(g);
    lambda0_ok += a;
    mu_ok += b;
    gram_ok += c;
    o.require(a, name + " lambda0(H)");
    o.require(b, name + " mu(H)=" + std::to_string(mu_h) + " vs sqrt(d+mu(G))=" + std::to_string(std::sqrt(d + gs.mu())));
    o.require(c, name + " Gram identity");
  }
  const double secs = seconds_since(t0);
  o.require(secs < 5, "runtime");
  const int total = static_cast<int>(graphs.size());
  o.detail << "lambda0 " << lambda0_ok << "/" << total << ", mu " << mu_ok << "/" << total << ", gram " << gram_ok
           << "/" << total << ", " << secs << " s";
  return o;
}

// 2. Improved bound strictly above the edge-vertex Tanner bound on a 50^3 grid;
//    the margin decreases to 0 along rays alpha -> 1.
Outcome criterion2() {
  Outcome o;
  const auto t0 = Clock::now();
  constexpr int kGrid = 50;
  long long points = 0, bad = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGrid; ++i) {
    const double d = 3.0 + 9.0 * i / (kGrid - 1);
    for (int j = 1; j <= kGrid; ++j) {
      const double mu = d * j / (kGrid + 1);
      for (int k = 1; k <= kGrid; ++k) {
        const double alpha = static_cast<double>(k) / (kGrid + 1);
        const double margin = improved_bound(d, mu, alpha).value - edge_vertex_tanner_bound<double>(d, mu, alpha);
        ++points;
        min_margin = std::min(min_margin, margin);
        if (!(margin > 0)) ++bad;
      }
    }
  }
  o.require(bad == 0, std::to_string(bad) + " grid points without a positive margin");
  int rays = 0;
  for (double d : {3.0, 6.5, 12.0})
    for (double frac : {0.1, 0.5, 0.9}) {
      const double mu = d * frac;
      double prev = std::numeric_limits<double>::infinity();
      bool monotone = true;
      for (int s = 1; s <= 40; ++s) {
        const double alpha = 1.0 - std::ldexp(1.0, -s);
        const double margin = improved_bound(d, mu, alpha).value - edge_vertex_tanner_bound<double>(d, mu, alpha);
        monotone = monotone && margin <= prev && margin >= 0;
        prev = margin;
      }
      const double at_one = improved_bound(d, mu, 1.0).value - edge_vertex_tanner_bound<double>(d, mu, 1.0);
      o.require(monotone, "ray not monotone");
      o.require(prev < 1e-9 && std::abs(at_one) < 1e-12, "margin does not vanish at alpha = 1");
      ++rays;
    }
  const double secs = seconds_since(t0);
  o.require(secs < 1, "runtime");
  o.detail << points << " points, min margin " << min_margin << ", " << rays << " monotone rays, " << secs << " s";
  return o;
}

// 3. Corpus: exact expansion of the edge-vertex graph >= improved bound at
//    alpha in {1/4, 1/3, 1/2}; no violations of the edge-count and
//    neighborhood lemmas over all subsets.
Outcome criterion3() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::vector<Rational> alphas{Rational(1, 4), Rational(1, 3), Rational(1, 2)};
  auto corpus = corpus_small();
  std::uint64_t subset_checks = 0, expansion_checks = 0;
  for (const auto& [name, g] : corpus) {
    auto spec = graph_spectrum(g);
    const int d = g.degree();
    const double mu = std::min(spec.mu(), static_cast<double>(d));
    auto b = edge_vertex_graph(g);
    auto prof = expansion_profile(b);
    for (const auto& a : alphas) {
      const std::int64_t k = a.floor_times(b.n_in());
      if (k < 1) continue;
      const auto c = expansion_up_to(prof, static_cast<int>(k)).c_alpha;
      const double bound = improved_bound(d, mu, a.to_double()).value;
      ++expansion_checks;
      o.require(c.to_long_double() >= bound * (1 - 1e-12),
                name + " c(" + a.str() + ")=" + c.str() + " < " + std::to_string(bound));
    }
    auto ac = verify_alon_chung(g, spec, name);
    auto nb = verify_nbhd_and_boundary(g, spec, name);
    subset_checks += ac.checked + nb.checked;
    o.require(ac.ok(), name + " edge-count lemma");
    o.require(nb.ok(), name + " neighborhood lemma");
  }
  const double secs = seconds_since(t0);
  o.require(secs < 120, "runtime");
  o.detail << corpus.size() << " graphs, " << expansion_checks << " expansion checks, " << subset_checks
           << " subset checks, " << secs << " s";
  return o;
}

// 4. K4 tightness: sum_v |S cap N(v)|^2 = 10 = bound at every pair, and the
//    symmetric edge-count lower bound has slack 0 at gamma = 1/2.
Outcome criterion4() {
  Outcome o;
  auto g = gen_complete(4);
  auto spec = graph_spectrum(g);
  o.require(spec.exact_mu == 1, "mu(K4) not certified as 1");
  const Rational bound = nbhd_sum_bound<Rational>(3, 1, Rational(1, 2), 2);
  const auto ac = alon_chung_bounds<Rational>(3, 4, Rational(1, 2), -1, -1, 1);
  auto nb = verify_nbhd_and_boundary(g, spec, "K4");
  auto acr = verify_alon_chung(g, spec, "K4");
  int pairs = 0;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) {
      const std::uint64_t mask = (1u << u) | (1u << v);
      std::int64_t sumsq = 0;
      for (int w = 0; w < 4; ++w) {
        const std::int64_t c = g.has_edge(w, u) + g.has_edge(w, v);
        sumsq += c * c;
      }
      const std::int64_t edges = g.has_edge(u, v);
      o.require(Rational(sumsq) == Rational(10) && Rational(sumsq) == bound, "square sum at pair");
      o.require(Rational(edges) == ac.symmetric_lower, "edge count at pair");
      o.require(nb.has_tight("nbhd_sum", mask), "oracle tight witness (square sum)");
      o.require(acr.has_tight("alon_chung_lower", mask), "oracle tight witness (edge count)");
      ++pairs;
    }
  o.require(nb.exact && acr.exact, "oracle not in exact mode");
  o.detail << pairs << " pairs, square sum 10 = bound " << bound << ", e(S) = 1 = lower bound " << ac.symmetric_lower;
  return o;
}

// 5. Constraint codes: C(H(K4), rep[3,1,3]) has k = 1, distance 6, bound 1
//    met with equality; C(H(K8), hamming[7,4,3]) has k >= 4, distance >= 4.
Outcome criterion5() {
  Outcome o;
  const auto t0 = Clock::now();
  const Field f2 = Field::make(2);
  {
    auto g = gen_complete(4);
    auto b = edge_vertex_graph(g);
    auto inner = code_repetition(3, f2);
    auto c = sipser_spielman_code(b, inner);
    auto spec = graph_spectrum(g);
    auto r = ss_code_report(b, inner, c, spec.mu(), spec.exact_mu);
    o.require(r.k == 1, "K4 k");
    o.require(r.distance == 6, "K4 distance");
    o.require(r.relative_bound_exact == Rational(1), "K4 relative bound");
    o.require(r.tight, "K4 tight");
    o.detail << "K4/rep3: n=" << r.n << " k=" << r.k << " d=" << r.distance << " bound "
             << (r.relative_bound_exact ? r.relative_bound_exact->str() : "-") << (r.tight ? " tight" : "") << "; ";
  }
  {
    auto g = gen_complete(8);
    auto b = edge_vertex_graph(g);
    auto inner = code_hamming74();
    auto c = sipser_spielman_code(b, inner);
    auto spec = graph_spectrum(g);
    auto r = ss_code_report(b, inner, c, spec.mu(), spec.exact_mu);
    o.require(r.k >= 4, "K8 k");
    o.require(r.relative_bound_exact == Rational(1, 7), "K8 relative bound");
    o.require(r.distance >= 4, "K8 distance");
    o.require(r.constraints_ok, "K8 constraints");
    o.detail << "K8/hamming74: n=" << r.n << " k=" << r.k << " d=" << r.distance << " >= 4; ";
  }
  const double secs = seconds_since(t0);
  o.require(secs < 30, "runtime");
  o.detail << secs << " s";
  return o;
}

// 6. Expander map on K4: rep[4,1,4] distance 4 = bound 4; parity[4,3,2]
//    distance 4 >= 18/5 > 32/9.
Outcome criterion6() {
  Outcome o;
  const Field f2 = Field::make(2);
  auto g = gen_complete(4);
  auto rep = expander_map_distance(g, code_repetition(4, f2));
  auto par = expander_map_distance(g, code_parity(4, f2));
  o.require(rep.distance == 4 && rep.ours_exact == Rational(4) && rep.tight, "rep4");
  o.require(par.distance == 4 && par.ours_exact == Rational(18, 5) && par.bound_holds, "parity4");
  o.require(par.alon_original_exact == Rational(32, 9), "earlier bound value");
  o.require(par.ours_exact && par.alon_original_exact && *par.ours_exact > *par.alon_original_exact, "strict");
  o.detail << "rep4: d=" << rep.distance << " bound " << (rep.ours_exact ? rep.ours_exact->str() : "-")
           << "; parity4: d=" << par.distance << " bound " << (par.ours_exact ? par.ours_exact->str() : "-") << " > "
           << (par.alon_original_exact ? par.alon_original_exact->str() : "-");
  return o;
}

// 7. Family sweep m = 2..10: finite improvement factor, decreasing toward 3,
//    within [3.0, 3.1] for m = 8, 9, 10.
Outcome criterion7() {
  Outcome o;
  const auto t0 = Clock::now();
  double prev = std::numeric_limits<double>::infinity();
  std::ostringstream factors;
  for (int m = 2; m <= 10; ++m) {
    auto r = family_report(m);
    o.require(r.hypothesis_ok && r.improvement_factor.has_value(), "m=" + std::to_string(m) + " hypothesis");
    if (!r.improvement_factor) continue;
    const double f = *r.improvement_factor;
    o.require(std::isfinite(f), "finite");
    o.require(f < prev, "decreasing at m=" + std::to_string(m));
    o.require(f > 3.0, "above 3 at m=" + std::to_string(m));
    if (m >= 8) o.require(f >= 3.0 && f <= 3.1, "envelope at m=" + std::to_string(m));
    prev = f;
    factors << (m > 2 ? ", " : "") << m << ":" << f;
  }
  o.require(!family_report(1).hypothesis_ok, "m=1 should violate d eps > mu");
  const double secs = seconds_since(t0);
  o.require(secs < 1, "runtime");
  o.detail << "factors " << factors.str() << "; " << secs << " s";
  return o;
}

// 8. relative distance = squared earlier bound x improvement factor, to 1e-12.
Outcome criterion8() {
  Outcome o;
  double worst = 0;
  for (int m = 2; m <= 10; ++m) {
    auto r = family_report(m);
    if (!r.ss_distance) {
      o.require(false, "m=" + std::to_string(m) + " missing");
      continue;
    }
    const double rel = std::abs(*r.ss_original * *r.improvement_factor - *r.ss_distance) / *r.ss_distance;
    worst = std::max(worst, rel);
    o.require(rel < 1e-12, "m=" + std::to_string(m));
  }
  o.detail << "max relative error " << worst;
  return o;
}

// 9. Outer weight of phi(u) equals |boundary of supp u| for every codeword of
//    every corpus (graph, code) pair with q^k <= 2^16.
Outcome criterion9() {
  Outcome o;
  std::uint64_t pairs = 0, words = 0, mismatches = 0;
  for (const auto& [gname, g] : corpus_small())
    for (const auto& [cname, code] : corpus_codes(g.n())) {
      if (code.size() > (std::uint64_t{1} << 16)) continue;
      auto chk = check_weight_identity(expander_map(g, code));
      ++pairs;
      words += chk.checked;
      mismatches += chk.mismatches;
      o.require(chk.mismatches == 0, gname + "/" + cname);
      o.require(chk.checked == code.size(), gname + "/" + cname + " enumeration count");
    }
  o.require(pairs > 0, "no pairs");
  o.detail << pairs << " pairs, " << words << " codewords, " << mismatches << " mismatches";
  return o;
}

const std::vector<std::pair<const char*, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<const char*, std::function<Outcome()>>> list{
      {"edge-vertex spectrum", criterion1},      {"improved bound dominance", criterion2},
      {"oracle vs bounds on corpus", criterion3}, {"K4 tightness witnesses", criterion4},
      {"constraint code examples", criterion5},   {"expander map on K4", criterion6},
      {"family improvement factor", criterion7},  {"distance identity", criterion8},
      {"expander map weight identity", criterion9}};
  return list;
}

bool run(int i) {
  const auto& [name, fn] = criteria()[i - 1];
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "exception: " << e.what();
  }
  std::printf("criterion %d [%s]: %s (%s)\n", i, name, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string arg = argc > 1 ? argv[1] : "all";
  bool ok = true;
  if (arg == "all") {
    for (int i = 1; i <= 9; ++i) ok = run(i) && ok;
  } else {
    const int i = std::atoi(arg.c_str());
    if (i < 1 || i > 9) {
      std::fprintf(stderr, "usage: acceptance <1-9|all>\n");
      return 2;
    }
    ok = run(i);
  }
  return ok ? 0 : 1;
}
