#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "explab/bounds.hpp"
#include "explab/codes.hpp"
#include "explab/error.hpp"
#include "explab/fields.hpp"
#include "explab/graphs.hpp"
#include "explab/linear_code.hpp"
#include "explab/oracle.hpp"
#include "explab/spectral.hpp"

namespace explab {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "0.1.0";

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

/// {seed, tol, tool_version, input_digest}; the digest covers the canonical input text.
inline json meta_block(std::uint64_t seed, double tol, std::string_view input) {
  return json{{"seed", seed}, {"tol", tol}, {"tool_version", kToolVersion}, {"input_digest", hex64(fnv1a64(input))}};
}

template <class T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

inline json opt_json(const std::optional<Rational>& v) { return v ? json(v->str()) : json(nullptr); }

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  detail::require(static_cast<bool>(in), ErrorCode::BadParameters, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  detail::require(static_cast<bool>(out), ErrorCode::BadParameters, "cannot write " + path);
  out << text;
}

// --- graphs ---------------------------------------------------------------

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.n()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      detail::require(e.is_array() && e.size() == 2, ErrorCode::BadParameters, "edge must be a pair");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Graph(n, edges);
  } catch (const json::exception& ex) {
    detail::fail(ErrorCode::BadParameters, std::string("malformed graph JSON: ") + ex.what());
  }
}

inline json to_json(const BipartiteGraph& b) {
  return json{{"n_in", b.n_in()}, {"n_out", b.n_out()}, {"nbrs", b.nbrs()}};
}

inline BipartiteGraph bipartite_from_json(const json& j) {
  try {
    const int n_in = j.at("n_in").get<int>();
    auto nbrs = j.at("nbrs").get<std::vector<std::vector<int>>>();
    detail::require(static_cast<int>(nbrs.size()) == n_in, ErrorCode::LengthMismatch, "nbrs size != n_in");
    return BipartiteGraph(j.at("n_out").get<int>(), std::move(nbrs));
  } catch (const json::exception& ex) {
    detail::fail(ErrorCode::BadParameters, std::string("malformed bipartite JSON: ") + ex.what());
  }
}

// --- fields, spectra, codes -------------------------------------------------

inline json to_json(const Field& f) {
  return json{{"p", f.p()}, {"k", f.k()}, {"q", f.q()}, {"modulus", f.modulus()}};
}

inline json to_json(const Spectrum& s) { return json{{"eigenvalues", s.eigenvalues}, {"mu", s.mu}, {"tol", s.tol}}; }

inline json to_json(const GraphSpectrum& s) {
  json j = to_json(s.spectrum);
  j["degree"] = s.degree;
  j["connected"] = s.connected;
  j["exact_mu"] = opt_json(s.exact_mu);
  j["degenerate"] = s.degenerate();
  return j;
}

inline json to_json(const EdgeVertexSpectrumReport& r) {
  return json{{"d", r.d},
              {"mu_g", r.mu_g},
              {"lambda1_g", r.lambda1_g},
              {"lambda0_h", r.lambda0_h},
              {"lambda1_h", r.lambda1_h},
              {"mu_h_literal", r.mu_h_literal},
              {"sqrt_2d", r.sqrt_2d},
              {"sqrt_d_plus_mu", r.sqrt_d_plus_mu},
              {"sqrt_d_plus_lambda1", r.sqrt_d_plus_lambda1},
              {"gram_identity", r.gram_identity},
              {"lambda0_matches", r.lambda0_matches},
              {"lambda1_matches", r.lambda1_matches},
              {"mu_upper_bound", r.mu_upper_bound},
              {"mu_equality", r.mu_equality},
              {"symmetric_spectrum", r.symmetric_spectrum}};
}

inline json matrix_json(const SymbolMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(std::vector<Symbol>(m.row(r), m.row(r) + m.cols()));
  return rows;
}

inline json to_json(const LinearCode& c) {
  json j{{"field", to_json(c.field())}, {"n", c.n()}, {"k", c.k()},
         {"generator", matrix_json(c.gen())}, {"parity_check", matrix_json(c.pchk())}};
  if (c.known_distance())
    j["distance"] = json{{"value", c.known_distance()->value},
                         {"provenance", c.known_distance()->provenance == DistanceProvenance::Computed ? "computed"
                                                                                                       : "asserted"}};
  else
    j["distance"] = nullptr;
  return j;
}

inline json to_json(const SSCodeReport& r) {
  return json{{"n", r.n},
              {"k", r.k},
              {"distance", r.distance},
              {"inner_distance", r.inner_distance},
              {"inner_rate", r.inner_rate.str()},
              {"inner_eps", r.inner_eps.str()},
              {"rate_lb", r.rate_lb.str()},
              {"rate_ok", r.rate_ok},
              {"hypothesis_ok", r.hypothesis_ok},
              {"relative_bound", opt_json(r.relative_bound)},
              {"relative_bound_exact", opt_json(r.relative_bound_exact)},
              {"absolute_bound", opt_json(r.absolute_bound)},
              {"bound_holds", r.bound_holds},
              {"tight", r.tight},
              {"codewords_checked", r.codewords_checked},
              {"constraints_ok", r.constraints_ok}};
}

inline json to_json(const ExpMapDistanceReport& r) {
  return json{{"distance", r.distance},
              {"distance_via_boundary", r.distance_via_boundary},
              {"coordinate_distance", r.coordinate_distance},
              {"codewords", r.codewords},
              {"inner_distance", r.inner_distance},
              {"delta0", r.delta0.str()},
              {"mu", r.mu},
              {"bound", r.ours},
              {"bound_exact", opt_json(r.ours_exact)},
              {"ramanujan_form", r.ramanujan_form},
              {"alon_original", r.alon_original},
              {"alon_original_exact", opt_json(r.alon_original_exact)},
              {"bound_holds", r.bound_holds},
              {"tight", r.tight},
              {"ramanujan_checked", r.ramanujan_checked},
              {"ramanujan_holds", r.ramanujan_holds}};
}

// --- bounds -----------------------------------------------------------------

inline json to_json(const ExpansionParams& p) {
  return json{{"d", p.d},         {"c", p.c},         {"mu", p.mu},          {"alpha", opt_json(p.alpha)},
              {"epsilon", opt_json(p.epsilon)}, {"r", opt_json(p.r)}, {"delta0", opt_json(p.delta0)},
              {"n", opt_json(p.n)},         {"gamma", opt_json(p.gamma)}, {"lambda1", opt_json(p.lambda1)},
              {"lambda_min", opt_json(p.lambda_min)}};
}

inline json to_json(const BoundReport& r) {
  return json{{"params", to_json(r.params)},
              {"tanner", opt_json(r.tanner)},
              {"edge_vertex_tanner", opt_json(r.edge_vertex_tanner)},
              {"improved", opt_json(r.improved)},
              {"improved_gamma", opt_json(r.improved_gamma)},
              {"alpha0", opt_json(r.alpha0)},
              {"c_alpha0", opt_json(r.c_alpha0)},
              {"ss_distance", opt_json(r.ss_distance)},
              {"ss_original", opt_json(r.ss_original)},
              {"improvement_factor", opt_json(r.improvement_factor)},
              {"rate_lb", opt_json(r.rate_lb)},
              {"nbhd_sum", opt_json(r.nbhd_sum)},
              {"boundary_lb", opt_json(r.boundary_lb)},
              {"complement_ub", opt_json(r.complement_ub)},
              {"exp_code_distance", opt_json(r.exp_code_distance)},
              {"ramanujan_distance", opt_json(r.ramanujan_distance)},
              {"alon_original", opt_json(r.alon_original)},
              {"alon_chung_lower", opt_json(r.alon_chung_lower)},
              {"alon_chung_upper", opt_json(r.alon_chung_upper)},
              {"alon_chung_radius", opt_json(r.alon_chung_radius)},
              {"alon_chung_refined_lower", opt_json(r.alon_chung_refined_lower)},
              {"alon_chung_refined_upper", opt_json(r.alon_chung_refined_upper)},
              {"improved_beats_tanner", r.improved_beats_tanner},
              {"ss_improves", r.ss_improves},
              {"exp_beats_alon", r.exp_beats_alon},
              {"ramanujan_applicable", r.ramanujan_applicable},
              {"hypothesis_ok", r.hypothesis_ok},
              {"degenerate", r.degenerate},
              {"notes", r.notes}};
}

// --- verification -----------------------------------------------------------

inline json to_json(const CheckWitness& w) {
  return json{{"check", w.check}, {"subset", w.subset}, {"set", from_mask(w.subset)}, {"size", w.size},
              {"slack", w.slack}};
}

inline json to_json(const VerificationReport& r) {
  json viol = json::array(), tight = json::array();
  for (const auto& w : r.violations) viol.push_back(to_json(w));
  for (const auto& w : r.tight_witnesses) tight.push_back(to_json(w));
  return json{{"instance", r.instance}, {"checked", r.checked},         {"exact", r.exact},
              {"violations", viol},     {"tight_witnesses", tight},      {"tight_count", r.tight_count},
              {"min_slack", r.min_slack}};
}

// --- CSV sweep --------------------------------------------------------------

inline std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

inline std::string csv_cell(const std::optional<double>& v) { return v ? fmt_double(*v) : ""; }

/// One row per q = 2^(2m) family point: parameters, bounds, flags.
inline std::string family_sweep_csv(int m_lo, int m_hi) {
  detail::require(m_lo <= m_hi, ErrorCode::EmptyRange, "empty m range");
  std::ostringstream os;
  os << "m,d,mu,epsilon,alpha0,c_alpha0,ss_distance,ss_original,improvement_factor,hypothesis_ok,degenerate\n";
  for (int m = m_lo; m <= m_hi; ++m) {
    auto f = ramanujan_family_point(m);
    auto r = family_report(m);
    os << m << ',' << f.d << ',' << f.mu << ',' << f.epsilon.str() << ',' << csv_cell(r.alpha0) << ','
       << csv_cell(r.c_alpha0) << ',' << csv_cell(r.ss_distance) << ',' << csv_cell(r.ss_original) << ','
       << csv_cell(r.improvement_factor) << ',' << (r.hypothesis_ok ? "true" : "false") << ','
       << (r.degenerate ? "DEGENERATE" : "") << '\n';
  }
  return os.str();
}

}  // namespace explab
