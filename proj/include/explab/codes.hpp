#pragma once

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "explab/bounds.hpp"
#include "explab/error.hpp"
#include "explab/fields.hpp"
#include "explab/graphs.hpp"
#include "explab/linear_code.hpp"
#include "explab/oracle.hpp"
#include "explab/parallel.hpp"
#include "explab/spectral.hpp"

namespace explab {

inline constexpr std::uint64_t kEagerDistanceLimit = std::uint64_t{1} << 16;

namespace detail {

// Brute-force the distance when it is cheap, otherwise record the design distance.
inline void attach_distance(LinearCode& c, int design) {
  if (c.k() == 0) return;
  if (c.size() <= kEagerDistanceLimit)
    c.set_known_distance(min_distance_bruteforce(c), DistanceProvenance::Computed);
  else
    c.set_known_distance(design, DistanceProvenance::Asserted);
}

}  // namespace detail

/// Distance of c, from known_distance or by enumeration.
inline int code_distance(const LinearCode& c) {
  if (c.known_distance()) return c.known_distance()->value;
  return min_distance_bruteforce(c);
}

/// [d, 1, d] repetition code.
inline LinearCode code_repetition(int d, const Field& f) {
  detail::require(d >= 1, ErrorCode::BadParameters, "repetition length must be >= 1");
  SymbolMatrix g(1, d, 1);
  auto c = LinearCode::from_generator(f, d, g);
  detail::attach_distance(c, d);
  return c;
}

/// [n, n-1, 2] single parity check code (coordinates sum to zero).
inline LinearCode code_parity(int n, const Field& f) {
  detail::require(n >= 2, ErrorCode::BadParameters, "parity code length must be >= 2");
  SymbolMatrix h(1, n, 1);
  auto c = LinearCode::from_parity_check(f, n, h);
  detail::attach_distance(c, 2);
  return c;
}

/// Binary [7, 4, 3] Hamming code.
inline LinearCode code_hamming74() {
  const Field f = Field::make(2, 1);
  SymbolMatrix g(4, 7, 0);
  const int rows[4][7] = {{1, 0, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 7; ++j) g(i, j) = static_cast<Symbol>(rows[i][j]);
  auto c = LinearCode::from_generator(f, 7, g);
  detail::attach_distance(c, 3);
  return c;
}

/// Reed-Solomon code: evaluations of polynomials of degree < k at the field
/// elements 0, 1, ..., n-1 (integer encoding). n = q + 1 appends the point at
/// infinity, whose column reads off the coefficient of x^(k-1).
inline LinearCode code_rs(int n, int k, const Field& f) {
  detail::require(k >= 1 && k <= n, ErrorCode::BadParameters, "need 1 <= k <= n");
  detail::require(n <= f.q() + 1, ErrorCode::BadParameters, "RS length must be <= q + 1");
  SymbolMatrix g(k, n, 0);
  const int finite = std::min(n, f.q());
  for (int j = 0; j < finite; ++j) {
    Symbol pw = 1;
    for (int i = 0; i < k; ++i) {
      g(i, j) = pw;
      pw = f.mul(pw, static_cast<Symbol>(j));
    }
  }
  if (n == f.q() + 1) g(k - 1, n - 1) = 1;
  auto c = LinearCode::from_generator(f, n, g);
  detail::require(c.k() == static_cast<std::size_t>(k), ErrorCode::CheckFailed, "RS generator is rank deficient");
  detail::attach_distance(c, n - k + 1);
  return c;
}

/// Subcode of c with every coordinate in the prime subfield GF(p). Each
/// parity check over GF(p^m) splits into m checks over GF(p), one per
/// coordinate of the check row. A zero-dimensional result is returned as is
/// unless allow_empty is false.
inline LinearCode subfield_subcode(const LinearCode& c, const Field& subfield, bool allow_empty = true) {
  const Field& f = c.field();
  detail::require(subfield.k() == 1 && subfield.p() == f.p(), ErrorCode::BadParameters,
                  "subfield must be the prime subfield GF(" + std::to_string(f.p()) + ")");
  SymbolMatrix h(0, c.n());
  for (std::size_t r = 0; r < c.pchk().rows(); ++r) {
    std::vector<std::vector<Symbol>> rows(f.k(), std::vector<Symbol>(c.n(), 0));
    for (std::size_t j = 0; j < c.n(); ++j) {
      auto coords = f.coordinates(c.pchk()(r, j));
      for (int t = 0; t < f.k(); ++t) rows[t][j] = static_cast<Symbol>(coords[t]);
    }
    for (auto& row : rows) h.append_row(row);
  }
  auto sub = LinearCode::from_parity_check(subfield, c.n(), h);
  if (sub.k() == 0) {
    detail::require(allow_empty, ErrorCode::EmptySubcode, "subfield subcode is {0}");
    return sub;
  }
  // Distance of the subcode is at least that of the parent.
  detail::attach_distance(sub, c.known_distance() ? c.known_distance()->value : 1);
  return sub;
}

// ---------------------------------------------------------------------------
// Expander code on a bipartite graph

/// Words on the inputs of b whose restriction to every output's ordered
/// neighbor list is a codeword of inner. Built by stamping inner's parity
/// checks onto each constraint; k = n_in - rank.
inline LinearCode sipser_spielman_code(const BipartiteGraph& b, const LinearCode& inner) {
  detail::require(inner.n() == static_cast<std::size_t>(b.output_degree()), ErrorCode::LengthMismatch,
                  "inner code length " + std::to_string(inner.n()) + " != constraint degree " +
                      std::to_string(b.output_degree()));
  const Field& f = inner.field();
  SymbolMatrix h(inner.pchk().rows() * b.n_out(), b.n_in(), 0);
  std::size_t row = 0;
  for (int o = 0; o < b.n_out(); ++o) {
    auto vars = b.out_neighbors(o);
    for (std::size_t r = 0; r < inner.pchk().rows(); ++r, ++row)
      for (std::size_t j = 0; j < vars.size(); ++j) h(row, vars[j]) = inner.pchk()(r, j);
  }
  auto code = LinearCode::from_parity_check(f, b.n_in(), h);
  // k/n >= c r - (c - 1), i.e. k * n_inner >= n * (c k_inner - (c-1) n_inner)
  const long long c = b.input_degree();
  const long long lhs = static_cast<long long>(code.k()) * static_cast<long long>(inner.n());
  const long long rhs = static_cast<long long>(b.n_in()) *
                        (c * static_cast<long long>(inner.k()) - (c - 1) * static_cast<long long>(inner.n()));
  detail::require(lhs >= rhs, ErrorCode::CheckFailed, "rate below c r - (c - 1)");
  return code;
}

struct SSCodeReport {
  std::size_t n = 0;
  std::size_t k = 0;
  int distance = 0;
  int inner_distance = 0;
  Rational inner_rate;
  Rational inner_eps;  // inner distance / d
  Rational rate_lb;    // c r - (c - 1)
  bool rate_ok = false;
  bool hypothesis_ok = false;  // d eps > mu
  std::optional<double> relative_bound;       // eps (d eps - mu) / (d - mu)
  std::optional<Rational> relative_bound_exact;
  std::optional<double> absolute_bound;       // relative_bound * n
  bool bound_holds = true;
  bool tight = false;
  std::uint64_t codewords_checked = 0;
  bool constraints_ok = true;
};

/// Enumerates the code to get its distance, rechecks every constraint on
/// every codeword, and compares against the edge-vertex distance bound
/// (c = 2 only) using mu of the underlying graph.
inline SSCodeReport ss_code_report(const BipartiteGraph& b, const LinearCode& inner, const LinearCode& code, double mu,
                                   std::optional<std::int64_t> exact_mu = std::nullopt) {
  SSCodeReport r;
  r.n = code.n();
  r.k = code.k();
  r.inner_distance = code_distance(inner);
  r.inner_rate = inner.rate();
  const std::int64_t d = b.output_degree();
  r.inner_eps = Rational(r.inner_distance, d);
  const std::int64_t c = b.input_degree();
  r.rate_lb = Rational(c) * r.inner_rate - Rational(c - 1);
  r.rate_ok = code.rate() >= r.rate_lb;

  detail::require(code.size() <= kMaxCodewords, ErrorCode::TooLarge, "q^k exceeds 2^24");
  r.distance = code.k() > 0 ? min_distance_bruteforce(code) : 0;
  std::vector<Symbol> restricted(d);
  for_each_codeword(code, [&](std::uint64_t, std::span<const Symbol> w) {
    ++r.codewords_checked;
    for (int o = 0; o < b.n_out(); ++o) {
      auto vars = b.out_neighbors(o);
      for (std::size_t j = 0; j < vars.size(); ++j) restricted[j] = w[vars[j]];
      if (!inner.contains(restricted)) r.constraints_ok = false;
    }
  });

  const double eps = r.inner_eps.to_double();
  r.hypothesis_ok = c == 2 && static_cast<double>(d) * eps > mu;
  if (r.hypothesis_ok && code.k() > 0) {
    if (exact_mu) {
      const Rational m(*exact_mu), dd(d);
      const Rational rel = r.inner_eps * (dd * r.inner_eps - m) / (dd - m);
      const Rational abs_bound = rel * Rational(static_cast<std::int64_t>(r.n));
      r.relative_bound_exact = rel;
      r.relative_bound = rel.to_double();
      r.absolute_bound = abs_bound.to_double();
      r.bound_holds = Rational(r.distance) >= abs_bound;
      r.tight = Rational(r.distance) == abs_bound;
    } else {
      r.relative_bound = eps * (d * eps - mu) / (d - mu);
      r.absolute_bound = *r.relative_bound * static_cast<double>(r.n);
      r.bound_holds = r.distance >= *r.absolute_bound - 1e-9;
      r.tight = std::abs(r.distance - *r.absolute_bound) <= 1e-9;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Expander map into GF(q^d)^n

/// phi(u)_i = (u_{l_1(i)}, ..., u_{l_d(i)}) for a d-regular graph and a base
/// code of length n over GF(q).
class ExpanderCode {
 public:
  ExpanderCode(Graph g, LinearCode base, NeighborOrder order)
      : g_(std::move(g)), base_(std::move(base)), order_(std::move(order)) {
    d_ = g_.degree();
    detail::require(base_.n() == static_cast<std::size_t>(g_.n()), ErrorCode::LengthMismatch,
                    "code length " + std::to_string(base_.n()) + " != vertex count " + std::to_string(g_.n()));
    detail::require(order_.size() == static_cast<std::size_t>(g_.n()), ErrorCode::BadParameters,
                    "neighbor order has wrong size");
    for (int v = 0; v < g_.n(); ++v) {
      auto sorted = order_[v];
      std::sort(sorted.begin(), sorted.end());
      auto nb = g_.neighbors(v);
      detail::require(std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end()), ErrorCode::BadParameters,
                      "neighbor order of vertex " + std::to_string(v) + " is not a permutation of its neighbors");
    }
  }

  const Graph& graph() const noexcept { return g_; }
  const LinearCode& base() const noexcept { return base_; }
  const NeighborOrder& order() const noexcept { return order_; }
  int degree() const noexcept { return d_; }

  std::vector<ExtSymbol> apply(std::span<const Symbol> u) const {
    detail::require(u.size() == base_.n(), ErrorCode::LengthMismatch, "word length != n");
    std::vector<ExtSymbol> out;
    out.reserve(g_.n());
    std::vector<Symbol> block(d_);
    for (int i = 0; i < g_.n(); ++i) {
      for (int j = 0; j < d_; ++j) block[j] = u[order_[i][j]];
      out.push_back(ext_pack(base_.field(), block, d_));
    }
    return out;
  }

  /// Number of positions i whose block is nonzero, read straight off the blocks.
  std::size_t outer_weight(std::span<const Symbol> u) const {
    std::size_t w = 0;
    for (int i = 0; i < g_.n(); ++i)
      for (int v : order_[i])
        if (u[v] != 0) {
          ++w;
          break;
        }
    return w;
  }

  /// Concatenated GF(q) coordinates, length n d.
  std::vector<Symbol> flatten(std::span<const Symbol> u) const {
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(g_.n()) * d_);
    for (int i = 0; i < g_.n(); ++i)
      for (int v : order_[i]) out.push_back(u[v]);
    return out;
  }

 private:
  Graph g_;
  LinearCode base_;
  NeighborOrder order_;
  int d_ = 0;
};

inline ExpanderCode expander_map(const Graph& g, const LinearCode& c, std::optional<NeighborOrder> order = std::nullopt) {
  return ExpanderCode(g, c, order ? std::move(*order) : canonical_neighbor_order(g));
}

struct WeightIdentityCheck {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  int min_outer_weight = INT_MAX;     // over nonzero codewords, from the blocks
  int min_boundary_weight = INT_MAX;  // over nonzero codewords, |d supp(u)|
  std::size_t min_coordinate_weight = SIZE_MAX;
  std::map<int, std::uint64_t> outer_distribution;
};

/// For every codeword u of the base code, compares the outer weight of
/// phi(u) with |d supp(u)| computed from neighbor bitmasks.
inline WeightIdentityCheck check_weight_identity(const ExpanderCode& ec) {
  const LinearCode& c = ec.base();
  detail::require(c.size() <= kMaxCodewords, ErrorCode::TooLarge, "q^k exceeds 2^24");
  const auto masks = neighbor_masks(ec.graph());
  const std::uint64_t total = c.size();
  const std::uint64_t chunks = std::min<std::uint64_t>(total, 64);
  std::vector<WeightIdentityCheck> parts(chunks);
  parallel_chunks(chunks, [&](std::uint64_t chunk) {
    auto& part = parts[chunk];
    for_each_codeword(c, total * chunk / chunks, total * (chunk + 1) / chunks,
                      [&](std::uint64_t idx, std::span<const Symbol> u) {
                        ++part.checked;
                        const int outer = static_cast<int>(ec.outer_weight(u));
                        std::uint64_t support = 0;
                        for (std::size_t j = 0; j < u.size(); ++j)
                          if (u[j] != 0) support |= std::uint64_t{1} << j;
                        std::uint64_t nbhd = 0;
                        for (std::uint64_t s = support; s; s &= s - 1) nbhd |= masks[std::countr_zero(s)];
                        const int via_boundary = std::popcount(nbhd);
                        if (outer != via_boundary) ++part.mismatches;
                        ++part.outer_distribution[outer];
                        if (idx == 0) return;
                        part.min_outer_weight = std::min(part.min_outer_weight, outer);
                        part.min_boundary_weight = std::min(part.min_boundary_weight, via_boundary);
                        part.min_coordinate_weight =
                            std::min(part.min_coordinate_weight, hamming_weight(u) * static_cast<std::size_t>(ec.degree()));
                      });
  });
  WeightIdentityCheck out;
  for (const auto& p : parts) {
    out.checked += p.checked;
    out.mismatches += p.mismatches;
    out.min_outer_weight = std::min(out.min_outer_weight, p.min_outer_weight);
    out.min_boundary_weight = std::min(out.min_boundary_weight, p.min_boundary_weight);
    out.min_coordinate_weight = std::min(out.min_coordinate_weight, p.min_coordinate_weight);
    for (auto [w, cnt] : p.outer_distribution) out.outer_distribution[w] += cnt;
  }
  return out;
}

struct ExpMapDistanceReport {
  int distance = 0;               // min outer weight, from the blocks
  int distance_via_boundary = 0;  // min |d supp(u)|
  std::size_t coordinate_distance = 0;  // min weight of the flattened GF(q) image
  std::uint64_t codewords = 0;
  int inner_distance = 0;
  Rational delta0;
  double mu = 0;
  double ours = 0;
  double ramanujan_form = 0;
  double alon_original = 0;
  std::optional<Rational> ours_exact;
  std::optional<Rational> alon_original_exact;
  bool bound_holds = false;
  bool tight = false;
  bool ramanujan_checked = false;  // mu^2 <= 4 d, so the replaced form applies
  bool ramanujan_holds = true;
};

/// Exact minimum distance of phi(C) over GF(q^d), computed by two
/// independent routes, against the distance bound with delta0 = d(C)/n.
inline ExpMapDistanceReport expander_map_distance(const ExpanderCode& ec, const GraphSpectrum& spec) {
  const LinearCode& c = ec.base();
  detail::require(c.k() > 0, ErrorCode::EmptyRange, "base code has no nonzero codewords");
  auto check = check_weight_identity(ec);
  if (check.mismatches != 0 || check.min_outer_weight != check.min_boundary_weight)
    detail::fail(ErrorCode::InternalMismatch,
                 std::to_string(check.mismatches) + " codewords where outer weight != |d supp(u)|");
  ExpMapDistanceReport r;
  r.distance = check.min_outer_weight;
  r.distance_via_boundary = check.min_boundary_weight;
  r.coordinate_distance = check.min_coordinate_weight;
  r.codewords = check.checked;
  r.inner_distance = code_distance(c);
  const std::int64_t n = ec.graph().n();
  const std::int64_t d = ec.degree();
  r.delta0 = Rational(r.inner_distance, n);
  r.mu = std::min(spec.mu(), static_cast<double>(d));
  auto e = exp_code_distance_bounds<double>(d, r.mu, r.delta0.to_double(), n);
  r.ours = e.ours;
  r.ramanujan_form = e.ramanujan_form;
  r.alon_original = e.alon_original;
  if (spec.exact_mu) {
    auto ex = exp_code_distance_bounds<Rational>(d, *spec.exact_mu, r.delta0, n);
    r.ours_exact = ex.ours;
    r.alon_original_exact = ex.alon_original;
    r.bound_holds = Rational(r.distance) >= ex.ours;
    r.tight = Rational(r.distance) == ex.ours;
  } else {
    r.bound_holds = r.distance >= r.ours - 1e-9;
    r.tight = std::abs(r.distance - r.ours) <= 1e-9;
  }
  r.ramanujan_checked = r.mu * r.mu <= 4.0 * d;
  if (r.ramanujan_checked) r.ramanujan_holds = r.distance >= r.ramanujan_form - 1e-9;
  return r;
}

inline ExpMapDistanceReport expander_map_distance(const Graph& g, const LinearCode& c) {
  return expander_map_distance(expander_map(g, c), graph_spectrum(g));
}

}  // namespace explab
