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
#include <vector>

#include "explab/bounds.hpp"
#include "explab/error.hpp"
#include "explab/graphs.hpp"
#include "explab/linear_code.hpp"
#include "explab/parallel.hpp"
#include "explab/rational.hpp"
#include "explab/spectral.hpp"

namespace explab {

// Exhaustive ground truth on small instances. Every routine here enumerates
// the full search space; the only non-exhaustive entry point is
// sampled_expansion(), which says so in its result.

inline constexpr int kMaxOracleInputs = 28;
inline constexpr int kMaxOracleVertices = 20;
inline constexpr int kMaxSampledInputs = 40;
inline constexpr std::uint64_t kMaxCodewords = std::uint64_t{1} << 24;

struct SubsetWitness {
  std::uint64_t subset = 0;
  int size = 0;
  int boundary_size = 0;
  Rational ratio;  // boundary_size / size
};

/// Minimum |dT| for each exact size |T| = s of input sets, with the smallest
/// bitmask attaining it.
struct ExpansionProfile {
  struct Entry {
    int boundary = INT_MAX;
    std::uint64_t mask = 0;
  };
  int n_in = 0;
  int n_out = 0;
  std::vector<Entry> by_size;  // index 0 unused
};

inline ExpansionProfile expansion_profile(const BipartiteGraph& b) {
  const int n = b.n_in();
  detail::require(n <= kMaxOracleInputs, ErrorCode::TooLarge,
                  "exhaustive expansion needs n_in <= " + std::to_string(kMaxOracleInputs) + ", got " + std::to_string(n));
  const int c = b.input_degree();
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * c);
  for (const auto& row : b.nbrs()) flat.insert(flat.end(), row.begin(), row.end());

  const int prefix_bits = n > 16 ? std::min(8, n - 12) : 0;
  const int low_bits = n - prefix_bits;
  const std::uint64_t chunks = std::uint64_t{1} << prefix_bits;
  std::vector<std::vector<ExpansionProfile::Entry>> partial(chunks);

  parallel_chunks(chunks, [&](std::uint64_t chunk) {
    std::vector<ExpansionProfile::Entry> best(n + 1);
    std::vector<std::uint8_t> cnt(b.n_out(), 0);
    int bsize = 0;
    int size = 0;
    auto add = [&](int i) {
      ++size;
      for (int t = 0; t < c; ++t)
        if (cnt[flat[i * c + t]]++ == 0) ++bsize;
    };
    auto remove = [&](int i) {
      --size;
      for (int t = 0; t < c; ++t)
        if (--cnt[flat[i * c + t]] == 0) --bsize;
    };
    auto record = [&](std::uint64_t mask) {
      if (size == 0) return;
      auto& e = best[size];
      if (bsize < e.boundary || (bsize == e.boundary && mask < e.mask)) {
        e.boundary = bsize;
        e.mask = mask;
      }
    };
    std::uint64_t mask = chunk << low_bits;
    for (int i = low_bits; i < n; ++i)
      if ((mask >> i) & 1) add(i);
    record(mask);
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t g = 1; g < steps; ++g) {
      const int bit = std::countr_zero(g);
      mask ^= std::uint64_t{1} << bit;
      if ((mask >> bit) & 1)
        add(bit);
      else
        remove(bit);
      record(mask);
    }
    partial[chunk] = std::move(best);
  });

  ExpansionProfile prof;
  prof.n_in = n;
  prof.n_out = b.n_out();
  prof.by_size.assign(n + 1, {});
  for (const auto& part : partial)
    for (int s = 1; s <= n; ++s) {
      const auto& e = part[s];
      auto& cur = prof.by_size[s];
      if (e.boundary < cur.boundary || (e.boundary == cur.boundary && e.mask < cur.mask)) cur = e;
    }
  return prof;
}

struct ExpansionResult {
  Rational c_alpha;
  SubsetWitness witness;
  int max_size = 0;  // floor(alpha * n_in)
};

/// Minimum ratio over sizes 1..max_size; ties go to the smallest bitmask.
inline ExpansionResult expansion_up_to(const ExpansionProfile& prof, int max_size) {
  detail::require(max_size >= 1, ErrorCode::EmptyRange, "no nonempty subset fits the size limit");
  max_size = std::min(max_size, prof.n_in);
  ExpansionResult r;
  r.max_size = max_size;
  bool have = false;
  for (int s = 1; s <= max_size; ++s) {
    const auto& e = prof.by_size[s];
    Rational ratio(e.boundary, s);
    if (!have || ratio < r.c_alpha || (ratio == r.c_alpha && e.mask < r.witness.subset)) {
      have = true;
      r.c_alpha = ratio;
      r.witness = SubsetWitness{e.mask, s, e.boundary, ratio};
    }
  }
  return r;
}

/// c(alpha) over input sets T with 0 < |T| <= floor(alpha * n_in).
inline ExpansionResult exact_expansion(const BipartiteGraph& b, const Rational& alpha) {
  detail::require(alpha > Rational(0), ErrorCode::BadParameters, "alpha must be positive");
  const std::int64_t k = alpha.floor_times(b.n_in());
  detail::require(k >= 1, ErrorCode::EmptyRange, "floor(alpha * n_in) = 0");
  return expansion_up_to(expansion_profile(b), static_cast<int>(std::min<std::int64_t>(k, b.n_in())));
}

/// Expansion factor delta of the input side for sets of size <= eps * n_in.
/// The outputs form an independent side, so the star boundary equals the boundary.
inline Rational exact_delta(const BipartiteGraph& b, const Rational& eps) {
  const std::int64_t k = eps.floor_times(b.n_in());
  detail::require(k >= 1, ErrorCode::EmptyRange, "floor(eps * n_in) = 0");
  return exact_expansion(b, eps).c_alpha;
}

struct SampledExpansion {
  Rational upper_estimate;  // min over the samples; c(alpha) can only be smaller
  SubsetWitness witness;
  std::uint64_t samples = 0;
  bool exhaustive = false;
};

/// Non-exhaustive estimate for n_in up to 40: uniform size in [1, k], then a
/// uniform subset of that size.
inline SampledExpansion sampled_expansion(const BipartiteGraph& b, const Rational& alpha, std::uint64_t samples,
                                          std::uint64_t seed) {
  const int n = b.n_in();
  detail::require(n <= kMaxSampledInputs, ErrorCode::TooLarge, "sampled mode needs n_in <= 40");
  const std::int64_t k = std::min<std::int64_t>(alpha.floor_times(n), n);
  detail::require(k >= 1, ErrorCode::EmptyRange, "floor(alpha * n_in) = 0");
  SplitMix64 rng(seed);
  SampledExpansion out;
  out.samples = samples;
  std::vector<int> idx(n);
  bool have = false;
  for (std::uint64_t t = 0; t < samples; ++t) {
    const int s = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::uint64_t mask = 0;
    for (int i = 0; i < s; ++i) {
      const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
      std::swap(idx[i], idx[j]);
      mask |= std::uint64_t{1} << idx[i];
    }
    const int bsize = static_cast<int>(bip_boundary(b, from_mask(mask)).size());
    Rational ratio(bsize, s);
    if (!have || ratio < out.upper_estimate || (ratio == out.upper_estimate && mask < out.witness.subset)) {
      have = true;
      out.upper_estimate = ratio;
      out.witness = SubsetWitness{mask, s, bsize, ratio};
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive inequality verification on G

struct CheckWitness {
  std::string check;
  std::uint64_t subset = 0;
  int size = 0;
  double slack = 0;  // bound side minus measured side; negative is a violation
};

struct VerificationReport {
  std::string instance;
  std::uint64_t checked = 0;
  bool exact = false;  // integer arithmetic (certified integer spectrum)
  std::vector<CheckWitness> violations;
  std::vector<CheckWitness> tight_witnesses;  // first kMaxTightWitnesses of each check
  std::uint64_t tight_count = 0;
  std::map<std::string, double> min_slack;

  static constexpr std::size_t kMaxTightWitnesses = 32;

  bool ok() const noexcept { return violations.empty(); }

  void merge(const VerificationReport& o) {
    checked += o.checked;
    exact = exact && o.exact;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    for (const auto& w : o.tight_witnesses) add_tight(w);
    tight_count += o.tight_count;
    for (const auto& [k, v] : o.min_slack) {
      auto it = min_slack.find(k);
      if (it == min_slack.end() || v < it->second) min_slack[k] = v;
    }
  }

  /// Keeps at most kMaxTightWitnesses per check name.
  void add_tight(const CheckWitness& w) {
    const auto same = std::count_if(tight_witnesses.begin(), tight_witnesses.end(),
                                    [&](const CheckWitness& t) { return t.check == w.check; });
    if (static_cast<std::size_t>(same) < kMaxTightWitnesses) tight_witnesses.push_back(w);
  }

  bool has_tight(const std::string& check, std::uint64_t subset) const {
    return std::any_of(tight_witnesses.begin(), tight_witnesses.end(),
                       [&](const CheckWitness& w) { return w.check == check && w.subset == subset; });
  }
};

inline void require_no_violations(const VerificationReport& r) {
  if (!r.ok())
    detail::fail(ErrorCode::CounterexampleFound, r.instance + ": " + r.violations.front().check + " fails on subset " +
                                                     std::to_string(r.violations.front().subset));
}

namespace detail {

// Records one comparison. For exact checks `scaled` is the integer slack
// times `scale`; otherwise `slack` is compared against a relative tolerance.
class SlackRecorder {
 public:
  explicit SlackRecorder(VerificationReport& r) : r_(r) {}

  void exact(const std::string& name, std::uint64_t mask, int size, __int128 scaled, double scale) {
    const double slack = static_cast<double>(scaled) / scale;
    note(name, mask, size, slack, scaled < 0, scaled == 0);
  }

  void approx(const std::string& name, std::uint64_t mask, int size, long double slack, long double magnitude) {
    const long double tol = 1e-9L * std::max<long double>(1.0L, magnitude);
    note(name, mask, size, static_cast<double>(slack), slack < -tol, std::abs(slack) <= tol);
  }

 private:
  void note(const std::string& name, std::uint64_t mask, int size, double slack, bool violated, bool tight) {
    ++r_.checked;
    auto it = r_.min_slack.find(name);
    if (it == r_.min_slack.end() || slack < it->second) r_.min_slack[name] = slack;
    if (violated && r_.violations.size() < 64) r_.violations.push_back({name, mask, size, slack});
    if (tight) {
      ++r_.tight_count;
      r_.add_tight({name, mask, size, slack});
    }
  }

  VerificationReport& r_;
};

// Visits every nonempty S subset of V in Gray order with incremental state:
// cnt[v] = |S cap N(v)|, edges = e(S), sumsq = sum cnt^2, bsize = |dS|.
struct SubsetState {
  std::uint64_t mask = 0;
  int size = 0;
  long long edges = 0;
  long long sumsq = 0;
  int bsize = 0;
};

template <class Fn>
void enumerate_vertex_subsets(const Graph& g, Fn&& fn) {
  const int n = g.n();
  require(n <= kMaxOracleVertices, ErrorCode::TooLarge,
          "exhaustive subset check needs n <= " + std::to_string(kMaxOracleVertices));
  std::vector<int> cnt(n, 0);
  SubsetState st;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
    const int v = std::countr_zero(i);
    st.mask ^= std::uint64_t{1} << v;
    if ((st.mask >> v) & 1) {
      ++st.size;
      st.edges += cnt[v];
      for (int u : g.neighbors(v)) {
        st.sumsq += 2LL * cnt[u] + 1;
        if (cnt[u]++ == 0) ++st.bsize;
      }
    } else {
      --st.size;
      for (int u : g.neighbors(v)) {
        st.sumsq -= 2LL * cnt[u] - 1;
        if (--cnt[u] == 0) --st.bsize;
      }
      st.edges -= cnt[v];
    }
    fn(static_cast<const SubsetState&>(st));
  }
}

}  // namespace detail

/// Checks, for every nonempty S, the symmetric edge-count bound with mu and
/// the one-sided bounds with lambda_1 and lambda_min.
inline VerificationReport verify_alon_chung(const Graph& g, const GraphSpectrum& spec, std::string instance = "graph") {
  VerificationReport r;
  r.instance = std::move(instance);
  const long long d = g.degree();
  const long long n = g.n();
  detail::SlackRecorder rec(r);
  const bool exact = spec.exact_lambda1 && spec.exact_lambda_min && spec.exact_mu;
  r.exact = exact;
  detail::enumerate_vertex_subsets(g, [&](const detail::SubsetState& st) {
    const long long s = st.size;
    if (exact) {
      // 2n e(S) against d s^2 +- (eigenvalue) s (n - s)
      const __int128 lhs = static_cast<__int128>(2 * n) * st.edges;
      const __int128 center = static_cast<__int128>(d) * s * s;
      const __int128 spread = static_cast<__int128>(s) * (n - s);
      const double scale = 2.0 * static_cast<double>(n);
      rec.exact("alon_chung_lower", st.mask, st.size, lhs - (center - *spec.exact_mu * spread), scale);
      rec.exact("alon_chung_upper", st.mask, st.size, (center + *spec.exact_mu * spread) - lhs, scale);
      rec.exact("alon_chung_refined_lower", st.mask, st.size, lhs - (center + *spec.exact_lambda_min * spread), scale);
      rec.exact("alon_chung_refined_upper", st.mask, st.size, (center + *spec.exact_lambda1 * spread) - lhs, scale);
    } else {
      const long double gamma = static_cast<long double>(s) / n;
      auto ac = alon_chung_bounds<long double>(d, n, gamma, spec.lambda1(), spec.lambda_min(), spec.mu());
      const long double e = static_cast<long double>(st.edges);
      const long double mag = static_cast<long double>(d) * n;
      rec.approx("alon_chung_lower", st.mask, st.size, e - ac.symmetric_lower, mag);
      rec.approx("alon_chung_upper", st.mask, st.size, ac.symmetric_upper - e, mag);
      rec.approx("alon_chung_refined_lower", st.mask, st.size, e - ac.refined_lower, mag);
      rec.approx("alon_chung_refined_upper", st.mask, st.size, ac.refined_upper - e, mag);
    }
  });
  return r;
}

/// Checks, for every nonempty S with alpha = |S|/n: the neighborhood square
/// sum bound, the lower bound on |dS| and the upper bound on the number of
/// vertices with no neighbor in S.
inline VerificationReport verify_nbhd_and_boundary(const Graph& g, const GraphSpectrum& spec,
                                                   std::string instance = "graph") {
  VerificationReport r;
  r.instance = std::move(instance);
  const long long d = g.degree();
  const long long n = g.n();
  detail::SlackRecorder rec(r);
  r.exact = spec.exact_mu.has_value();
  detail::enumerate_vertex_subsets(g, [&](const detail::SubsetState& st) {
    const long long s = st.size;
    const long long untouched = n - st.bsize;
    if (r.exact) {
      const __int128 mu2 = static_cast<__int128>(*spec.exact_mu) * *spec.exact_mu;
      // n * [alpha (d^2 - mu^2) + mu^2] = s (d^2 - mu^2) + n mu^2
      const __int128 denom_n = static_cast<__int128>(s) * (d * d - mu2) + n * mu2;
      const double scale = static_cast<double>(n);
      rec.exact("nbhd_sum", st.mask, st.size, denom_n * s - static_cast<__int128>(n) * st.sumsq, scale);
      rec.exact("boundary_lb", st.mask, st.size, static_cast<__int128>(st.bsize) * denom_n - static_cast<__int128>(d * d) * s * n,
                static_cast<double>(denom_n));
      rec.exact("complement_ub", st.mask, st.size, mu2 * (n - s) * n - static_cast<__int128>(untouched) * denom_n,
                static_cast<double>(denom_n));
    } else {
      const long double alpha = static_cast<long double>(s) / n;
      const long double mu = spec.mu();
      const long double bound = nbhd_sum_bound<long double>(d, mu, alpha, s);
      auto bb = boundary_bounds<long double>(d, mu, alpha, s, n);
      rec.approx("nbhd_sum", st.mask, st.size, bound - st.sumsq, bound);
      rec.approx("boundary_lb", st.mask, st.size, st.bsize - bb.boundary_lb, n);
      rec.approx("complement_ub", st.mask, st.size, bb.complement_ub - untouched, n);
    }
  });
  return r;
}

/// Compares the exact expansion of the edge-vertex graph of G against the
/// closed-form lower bounds at each alpha, and checks c(alpha0) >= 2/(d eps)
/// for every eps = j/d with j > mu.
inline VerificationReport verify_expansion(const Graph& g, const GraphSpectrum& spec, std::span<const Rational> alphas,
                                           std::string instance = "graph") {
  VerificationReport r;
  r.instance = std::move(instance);
  r.exact = false;
  const int d = g.degree();
  const double mu = std::min(spec.mu(), static_cast<double>(d));
  auto b = edge_vertex_graph(g);
  auto prof = expansion_profile(b);
  detail::SlackRecorder rec(r);
  for (const auto& alpha : alphas) {
    const std::int64_t k = std::min<std::int64_t>(alpha.floor_times(b.n_in()), b.n_in());
    if (k < 1) continue;
    auto ex = expansion_up_to(prof, static_cast<int>(k));
    const double a = alpha.to_double();
    const long double c = ex.c_alpha.to_long_double();
    rec.approx("improved_expansion@" + alpha.str(), ex.witness.subset, ex.witness.size,
               c - improved_bound(d, mu, a).value, c);
    rec.approx("edge_vertex_tanner@" + alpha.str(), ex.witness.subset, ex.witness.size,
               c - edge_vertex_tanner_bound<double>(d, mu, a), c);
  }
  for (int j = 1; j <= d; ++j) {
    if (j <= mu + 1e-9) continue;
    const double eps = static_cast<double>(j) / d;
    std::int64_t k = 0;
    if (spec.exact_mu) {
      const Rational e(j, d), m(*spec.exact_mu);
      k = (e * (Rational(d) * e - m) / (Rational(d) - m)).floor_times(b.n_in());
    } else {
      // A smaller size limit only raises c, so round down.
      const double alpha0 = eps * (d * eps - mu) / (d - mu);
      k = static_cast<std::int64_t>(std::floor(alpha0 * b.n_in() * (1 - 1e-12)));
    }
    if (k < 1) continue;
    auto ex = expansion_up_to(prof, static_cast<int>(std::min<std::int64_t>(k, b.n_in())));
    const long double c = ex.c_alpha.to_long_double();
    rec.approx("c_alpha0@eps=" + std::to_string(j) + "/" + std::to_string(d), ex.witness.subset, ex.witness.size,
               c - 2.0L / (d * eps), c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Code minimum distance

/// Minimum Hamming weight over nonzero codewords, by full enumeration.
inline int min_distance_bruteforce(const LinearCode& code) {
  detail::require(code.k() > 0, ErrorCode::EmptyRange, "code has no nonzero codewords");
  const std::uint64_t total = code.size();
  detail::require(total <= kMaxCodewords, ErrorCode::TooLarge, "q^k exceeds 2^24");
  const std::size_t n = code.n();

  if (code.field().q() == 2 && n <= 64) {
    const std::size_t k = code.k();
    std::vector<std::uint64_t> rows(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (code.gen()(i, j)) rows[i] |= std::uint64_t{1} << j;
    const int prefix_bits = k > 14 ? 6 : 0;
    const int low_bits = static_cast<int>(k) - prefix_bits;
    const std::uint64_t chunks = std::uint64_t{1} << prefix_bits;
    std::vector<int> best(chunks, INT_MAX);
    parallel_chunks(chunks, [&](std::uint64_t chunk) {
      std::uint64_t word = 0;
      for (int i = low_bits; i < static_cast<int>(k); ++i)
        if ((chunk >> (i - low_bits)) & 1) word ^= rows[i];
      int local = word ? std::popcount(word) : INT_MAX;
      for (std::uint64_t g = 1; g < (std::uint64_t{1} << low_bits); ++g) {
        word ^= rows[std::countr_zero(g)];
        if (word) local = std::min(local, std::popcount(word));
      }
      best[chunk] = local;
    });
    return *std::min_element(best.begin(), best.end());
  }

  const std::uint64_t chunks = std::min<std::uint64_t>(total, 64);
  std::vector<int> best(chunks, INT_MAX);
  parallel_chunks(chunks, [&](std::uint64_t chunk) {
    const std::uint64_t begin = total * chunk / chunks;
    const std::uint64_t end = total * (chunk + 1) / chunks;
    int local = INT_MAX;
    for_each_codeword(code, begin, end, [&](std::uint64_t idx, std::span<const Symbol> w) {
      if (idx != 0) local = std::min(local, static_cast<int>(hamming_weight(w)));
    });
    best[chunk] = local;
  });
  return *std::min_element(best.begin(), best.end());
}

}  // namespace explab
