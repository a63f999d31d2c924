#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "explab/error.hpp"
#include "explab/rational.hpp"

namespace explab {

// Closed-form expansion and distance bounds. The formulas without square
// roots are templates so they can be evaluated exactly over Rational when
// mu is known exactly (integer-spectrum graphs such as K_n or Petersen).

namespace detail {

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

/// a >= b, exact for Rational, with a relative 1e-12 allowance for doubles.
template <class T>
bool at_least(const T& a, const T& b) {
  if constexpr (is_exact_v<T>) {
    return a >= b;
  } else {
    return a >= b - 1e-12 * std::max<T>(T(1), std::abs(b));
  }
}

template <class T>
double as_double(const T& v) {
  if constexpr (is_exact_v<T>)
    return v.to_double();
  else
    return static_cast<double>(v);
}

}  // namespace detail

/// Tanner: c^2 / [alpha c d + mu^2 (1 - alpha)] for a (c,d)-regular bipartite graph.
template <class T>
T tanner_bound(const T& c, const T& d, const T& mu, const T& alpha) {
  const T denom = alpha * c * d + mu * mu * (T(1) - alpha);
  detail::require(denom > T(0), ErrorCode::DegenerateParams, "Tanner denominator is not positive");
  return c * c / denom;
}

/// Tanner specialised to the edge-vertex graph: 4 / [alpha (d - mu) + (d + mu)].
template <class T>
T edge_vertex_tanner_bound(const T& d, const T& mu, const T& alpha) {
  return T(4) / (alpha * (d - mu) + (d + mu));
}

struct ImprovedBound {
  double value = 0;
  double gamma = 0;  // root of (d - mu) g^2 + mu g - alpha d = 0 in [0, 1]
};

/// 4 / (mu + sqrt(mu^2 + 4 alpha (d - mu) d)), the expansion of subsets of
/// at most alpha * |I| edge-vertices obtained through the edge-count lemma.
inline ImprovedBound improved_bound(double d, double mu, double alpha) {
  detail::require(mu <= d, ErrorCode::DegenerateParams, "mu exceeds d");
  const double root = std::sqrt(mu * mu + 4.0 * alpha * (d - mu) * d);
  ImprovedBound r;
  r.value = 4.0 / (mu + root);
  r.gamma = d == mu ? alpha : (root - mu) / (2.0 * (d - mu));
  return r;
}

/// gamma^2 + (mu/d) gamma (1 - gamma): the edge fraction at which a vertex
/// set is forced to hold at least gamma n vertices.
template <class T>
T edge_threshold_fraction(const T& d, const T& mu, const T& gamma) {
  return gamma * gamma + mu / d * gamma * (T(1) - gamma);
}

template <class T>
struct Alpha0Expansion {
  T alpha0{};
  T lower_bound{};  // 2 / (d eps)
};

/// alpha0 = eps (d eps - mu) / (d - mu) and the guaranteed expansion 2/(d eps)
/// at that size. Requires d eps > mu.
template <class T>
Alpha0Expansion<T> alpha0_and_expansion(const T& d, const T& mu, const T& eps) {
  detail::require(d * eps > mu, ErrorCode::HypothesisViolated,
                  "need d*eps > mu (d*eps = " + std::to_string(detail::as_double(d * eps)) +
                      ", mu = " + std::to_string(detail::as_double(mu)) + ")");
  Alpha0Expansion<T> r;
  r.alpha0 = eps * (d * eps - mu) / (d - mu);
  r.lower_bound = T(2) / (d * eps);
  const double imp = improved_bound(detail::as_double(d), detail::as_double(mu), detail::as_double(r.alpha0)).value;
  const double lb = detail::as_double(r.lower_bound);
  detail::require(imp >= lb * (1 - 1e-12), ErrorCode::CheckFailed, "improved bound at alpha0 below 2/(d eps)");
  return r;
}

template <class T>
struct AlonChungInterval {
  T symmetric_lower{};
  T symmetric_upper{};
  T radius{};  // mu gamma (1 - gamma) n / 2
  T refined_lower{};
  T refined_upper{};
};

/// Bounds on e(S) for |S| = gamma n: the symmetric form with mu and the
/// one-sided form with lambda_1 (upper) and lambda_min (lower).
template <class T>
AlonChungInterval<T> alon_chung_bounds(const T& d, const T& n, const T& gamma, const T& lambda1, const T& lambda_min,
                                       const T& mu) {
  detail::require(gamma >= T(0) && gamma <= T(1), ErrorCode::BadParameters, "gamma outside [0,1]");
  const T center = d * gamma * gamma * n / T(2);
  const T spread = gamma * (T(1) - gamma) * n / T(2);
  AlonChungInterval<T> r;
  r.radius = mu * spread;
  r.symmetric_lower = center - r.radius;
  r.symmetric_upper = center + r.radius;
  r.refined_lower = center + lambda_min * spread;
  r.refined_upper = center + lambda1 * spread;
  return r;
}

template <class T>
struct SSDistance {
  T relative_distance{};  // eps (d eps - mu) / (d - mu)
  T rate_lb{};            // 2r - 1
  T ss_original{};        // ((d eps - mu) / (d - mu))^2
  T improvement_factor{}; // 1 + mu (1 - eps) / (d eps - mu)
};

/// Distance and rate of the expander code over an edge-vertex graph, with the
/// earlier squared bound and the ratio between them. Requires d eps > mu.
template <class T>
SSDistance<T> ss_distance_and_rate(const T& d, const T& mu, const T& eps, const T& r) {
  detail::require(d * eps > mu, ErrorCode::HypothesisViolated,
                  "need d*eps > mu (d*eps = " + std::to_string(detail::as_double(d * eps)) +
                      ", mu = " + std::to_string(detail::as_double(mu)) + ")");
  SSDistance<T> out;
  const T g0 = (d * eps - mu) / (d - mu);
  out.relative_distance = eps * g0;
  out.rate_lb = T(2) * r - T(1);
  out.ss_original = g0 * g0;
  out.improvement_factor = T(1) + mu * (T(1) - eps) / (d * eps - mu);
  const T product = out.ss_original * out.improvement_factor;
  if constexpr (detail::is_exact_v<T>) {
    detail::require(product == out.relative_distance, ErrorCode::CheckFailed, "distance identity failed");
  } else {
    detail::require(std::abs(product - out.relative_distance) <= 1e-12 * std::abs(out.relative_distance),
                    ErrorCode::CheckFailed, "distance identity failed");
  }
  return out;
}

/// [alpha (d^2 - mu^2) + mu^2] |S|, an upper bound on sum_v |S cap N(v)|^2.
template <class T>
T nbhd_sum_bound(const T& d, const T& mu, const T& alpha, const T& s_size) {
  return (alpha * (d * d - mu * mu) + mu * mu) * s_size;
}

template <class T>
struct BoundaryBounds {
  T boundary_lb{};    // d^2 |S| / [alpha (d^2 - mu^2) + mu^2]
  T complement_ub{};  // mu^2 |S^c| / [alpha (d^2 - mu^2) + mu^2] = n - boundary_lb
};

template <class T>
BoundaryBounds<T> boundary_bounds(const T& d, const T& mu, const T& alpha, const T& s_size, const T& n) {
  const T denom = alpha * (d * d - mu * mu) + mu * mu;
  detail::require(denom > T(0), ErrorCode::DegenerateParams, "alpha (d^2 - mu^2) + mu^2 is not positive");
  BoundaryBounds<T> r;
  r.boundary_lb = d * d * s_size / denom;
  r.complement_ub = mu * mu * (n - s_size) / denom;
  return r;
}

template <class T>
struct ExpCodeDistance {
  T ours{};            // d^2 delta0 n / [delta0 (d^2 - mu^2) + mu^2]
  T ramanujan_form{};  // d delta0 n / [delta0 d + 4 (1 - delta0)], i.e. mu^2 -> 4d
  T alon_original{};   // [delta0 d^2 - mu^2 (1 - delta0)] / (delta0 d^2) * n
};

template <class T>
ExpCodeDistance<T> exp_code_distance_bounds(const T& d, const T& mu, const T& delta0, const T& n) {
  detail::require(delta0 > T(0) && delta0 <= T(1), ErrorCode::BadParameters, "delta0 outside (0,1]");
  ExpCodeDistance<T> r;
  r.ours = d * d * delta0 * n / (delta0 * (d * d - mu * mu) + mu * mu);
  r.ramanujan_form = d * delta0 * n / (delta0 * d + T(4) * (T(1) - delta0));
  r.alon_original = (delta0 * d * d - mu * mu * (T(1) - delta0)) / (delta0 * d * d) * n;
  if (r.alon_original >= T(0))
    detail::require(detail::at_least(r.ours, r.alon_original), ErrorCode::CheckFailed,
                    "distance bound below the earlier one");
  return r;
}

// ---------------------------------------------------------------------------
// The q = 2^(2m) Ramanujan family: d = q + 1, mu = 2^(m+1), eps = 3 2^m / (2^m + 1)^2.

struct FamilyPoint {
  int m = 0;
  std::int64_t d = 0;
  std::int64_t mu = 0;
  Rational epsilon;
};

inline FamilyPoint ramanujan_family_point(int m) {
  detail::require(m >= 1 && m <= 15, ErrorCode::BadParameters, "m must be in [1, 15]");
  const std::int64_t x = std::int64_t{1} << m;
  return FamilyPoint{m, x * x + 1, 2 * x, Rational(3 * x, (x + 1) * (x + 1))};
}

// ---------------------------------------------------------------------------
// Aggregate report

/// One parameter point. alpha, epsilon, r, delta0 and gamma stay exact until
/// they are converted once for the floating-point formulas.
struct ExpansionParams {
  std::int64_t d = 0;
  std::int64_t c = 2;
  double mu = 0;
  std::optional<Rational> alpha;
  std::optional<Rational> epsilon;
  std::optional<Rational> r;
  std::optional<Rational> delta0;
  std::optional<std::int64_t> n;
  std::optional<Rational> gamma;
  std::optional<double> lambda1;
  std::optional<double> lambda_min;
};

struct BoundReport {
  ExpansionParams params;

  std::optional<double> tanner;              // Tanner with c = 2 and mu(H)^2 = d + mu
  std::optional<double> edge_vertex_tanner;
  std::optional<double> improved;
  std::optional<double> improved_gamma;
  std::optional<double> alpha0;
  std::optional<double> c_alpha0;
  std::optional<double> ss_distance;
  std::optional<double> ss_original;
  std::optional<double> improvement_factor;
  std::optional<double> rate_lb;
  std::optional<double> nbhd_sum;
  std::optional<double> boundary_lb;
  std::optional<double> complement_ub;
  std::optional<double> exp_code_distance;
  std::optional<double> ramanujan_distance;
  std::optional<double> alon_original;
  std::optional<double> alon_chung_lower;
  std::optional<double> alon_chung_upper;
  std::optional<double> alon_chung_radius;
  std::optional<double> alon_chung_refined_lower;
  std::optional<double> alon_chung_refined_upper;

  bool improved_beats_tanner = false;
  bool ss_improves = false;
  bool exp_beats_alon = false;
  bool ramanujan_applicable = false;
  bool hypothesis_ok = true;  // d eps > mu when epsilon is given
  bool degenerate = false;
  std::vector<std::string> notes;
};

/// Evaluates every bound the supplied parameters allow. Violated hypotheses
/// and degenerate inputs are flagged in the report instead of thrown.
inline BoundReport evaluate_bounds(const ExpansionParams& p) {
  BoundReport rep;
  rep.params = p;
  detail::require(p.d > 0, ErrorCode::BadParameters, "d must be positive");
  detail::require(p.mu >= 0 && p.mu <= static_cast<double>(p.d) + 1e-9, ErrorCode::BadParameters,
                  "mu must lie in [0, d]");
  const double d = static_cast<double>(p.d);
  const double mu = std::min(p.mu, d);
  if (mu >= d) {
    rep.degenerate = true;
    rep.notes.push_back("mu = d: graph is disconnected or bipartite; bounds are trivial");
  }

  if (p.alpha) {
    const double a = p.alpha->to_double();
    detail::require(*p.alpha > Rational(0) && *p.alpha <= Rational(1), ErrorCode::BadParameters,
                    "alpha must lie in (0,1]");
    if (*p.alpha >= Rational(1)) {
      rep.degenerate = true;
      rep.notes.push_back("alpha = 1: all bounds coincide at 2/d");
    }
    rep.tanner = tanner_bound<double>(2.0, d, std::sqrt(d + mu), a);
    rep.edge_vertex_tanner = edge_vertex_tanner_bound(d, mu, a);
    auto imp = improved_bound(d, mu, a);
    rep.improved = imp.value;
    rep.improved_gamma = imp.gamma;
    rep.improved_beats_tanner = imp.value > *rep.edge_vertex_tanner;
    if (p.n) {
      const double n = static_cast<double>(*p.n);
      const double s = a * n;
      rep.nbhd_sum = nbhd_sum_bound(d, mu, a, s);
      auto bb = boundary_bounds(d, mu, a, s, n);
      rep.boundary_lb = bb.boundary_lb;
      rep.complement_ub = bb.complement_ub;
    }
  }

  if (p.epsilon) {
    const double eps = p.epsilon->to_double();
    detail::require(*p.epsilon > Rational(0) && *p.epsilon <= Rational(1), ErrorCode::BadParameters,
                    "epsilon must lie in (0,1]");
    if (d * eps > mu) {
      auto a0 = alpha0_and_expansion(d, mu, eps);
      rep.alpha0 = a0.alpha0;
      rep.c_alpha0 = a0.lower_bound;
      auto ss = ss_distance_and_rate(d, mu, eps, p.r ? p.r->to_double() : 1.0);
      rep.ss_distance = ss.relative_distance;
      rep.ss_original = ss.ss_original;
      rep.improvement_factor = ss.improvement_factor;
      if (p.r) rep.rate_lb = ss.rate_lb;
      rep.ss_improves = ss.relative_distance >= ss.ss_original;
    } else {
      rep.hypothesis_ok = false;
      rep.degenerate = true;
      rep.notes.push_back("HypothesisViolated: d*eps <= mu");
    }
  }

  if (p.delta0 && p.n) {
    auto e = exp_code_distance_bounds(d, mu, p.delta0->to_double(), static_cast<double>(*p.n));
    rep.exp_code_distance = e.ours;
    rep.ramanujan_distance = e.ramanujan_form;
    rep.alon_original = e.alon_original;
    rep.exp_beats_alon = e.ours >= e.alon_original;
    rep.ramanujan_applicable = mu * mu <= 4.0 * (d - 1.0) + 1e-12;
  }

  if (p.gamma && p.n) {
    const double l1 = p.lambda1.value_or(mu);
    const double lmin = p.lambda_min.value_or(-mu);
    auto ac = alon_chung_bounds(d, static_cast<double>(*p.n), p.gamma->to_double(), l1, lmin, mu);
    rep.alon_chung_lower = ac.symmetric_lower;
    rep.alon_chung_upper = ac.symmetric_upper;
    rep.alon_chung_radius = ac.radius;
    rep.alon_chung_refined_lower = ac.refined_lower;
    rep.alon_chung_refined_upper = ac.refined_upper;
  }
  return rep;
}

/// Bound report for one member of the q = 2^(2m) family.
inline BoundReport family_report(int m) {
  auto f = ramanujan_family_point(m);
  ExpansionParams p;
  p.d = f.d;
  p.mu = static_cast<double>(f.mu);
  p.epsilon = f.epsilon;
  return evaluate_bounds(p);
}

}  // namespace explab
