#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "explab/error.hpp"
#include "explab/graphs.hpp"
#include "explab/matrix.hpp"

namespace explab {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr std::size_t kMaxDenseDimension = 512;

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// sorted descending. Stops once the off-diagonal Frobenius norm < tol.
inline std::vector<double> symmetric_eigenvalues(DenseMatrix<double> a, double tol = kDefaultTol) {
  const std::size_t n = a.rows();
  detail::require(a.cols() == n, ErrorCode::NotSymmetric, "matrix is not square");
  detail::require(n <= kMaxDenseDimension, ErrorCode::TooLarge, "dense eigensolver capped at 512");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      detail::require(a(i, j) == a(j, i), ErrorCode::NotSymmetric,
                      "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs from its transpose");

  auto off_norm = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; off_norm() >= tol; ++sweep) {
    if (sweep == kMaxJacobiSweeps) detail::fail(ErrorCode::NoConvergence, "Jacobi did not converge in 100 sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

inline DenseMatrix<int> adjacency_matrix(const Graph& g) {
  DenseMatrix<int> a(g.n(), g.n(), 0);
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u)) a(u, v) = 1;
  return a;
}

/// Edge-vertex incidence matrix M: one row per edge (lexicographic), one column per vertex.
inline DenseMatrix<int> incidence_matrix(const Graph& g) {
  auto e = g.edges();
  DenseMatrix<int> m(e.size(), g.n(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    m(i, e[i].first) = 1;
    m(i, e[i].second) = 1;
  }
  return m;
}

/// Adjacency matrix of a bipartite graph: inputs first, then outputs.
inline DenseMatrix<int> bipartite_adjacency(const BipartiteGraph& b) {
  const std::size_t dim = static_cast<std::size_t>(b.n_in()) + b.n_out();
  DenseMatrix<int> a(dim, dim, 0);
  for (int i = 0; i < b.n_in(); ++i)
    for (int o : b.in_neighbors(i)) {
      a(i, b.n_in() + o) = 1;
      a(b.n_in() + o, i) = 1;
    }
  return a;
}

inline DenseMatrix<double> to_real(const DenseMatrix<int>& m) {
  DenseMatrix<double> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  double mu = 0;                    // max(lambda_1, |lambda_{n-1}|)
  double tol = kDefaultTol;

  double lambda0() const { return eigenvalues.front(); }
  double lambda1() const { return eigenvalues.size() > 1 ? eigenvalues[1] : eigenvalues.front(); }
  double lambda_min() const { return eigenvalues.back(); }
};

inline Spectrum spectrum_of(const DenseMatrix<int>& a, double tol = kDefaultTol) {
  Spectrum s;
  s.eigenvalues = symmetric_eigenvalues(to_real(a), tol);
  s.tol = tol;
  detail::require(!s.eigenvalues.empty(), ErrorCode::BadParameters, "empty matrix");
  s.mu = std::max(s.lambda1(), std::abs(s.lambda_min()));
  return s;
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (a %= m; e; e >>= 1, a = mulmod(a, a, m))
    if (e & 1) r = mulmod(r, a, m);
  return r;
}

inline bool det_is_zero_mod(const DenseMatrix<std::int64_t>& a, std::uint64_t p) {
  const std::size_t n = a.rows();
  std::vector<std::uint64_t> m(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const auto sp = static_cast<std::int64_t>(p);
    std::int64_t v = a.data()[i] % sp;
    m[i] = static_cast<std::uint64_t>(v < 0 ? v + sp : v);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv * n + col] == 0) ++piv;
    if (piv == n) return true;
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[col * n + j]);
    const std::uint64_t inv = powmod(m[col * n + col], p - 2, p);
    for (std::size_t r = col + 1; r < n; ++r) {
      const std::uint64_t f = mulmod(m[r * n + col], inv, p);
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) m[r * n + j] = (m[r * n + j] + p - mulmod(f, m[col * n + j], p)) % p;
    }
  }
  return false;
}

}  // namespace detail

/// True iff det(A - t I) = 0 exactly. Uses determinants modulo primes whose
/// product exceeds the Hadamard bound; nullopt if the bound is out of reach.
inline std::optional<bool> is_integer_eigenvalue(const DenseMatrix<int>& a, std::int64_t t) {
  // All below 2^63 so int64 residues reduce without overflow.
  static constexpr std::uint64_t kPrimes[] = {2305843009213693951ULL, 4611686018427387847ULL, 4294967291ULL,
                                              1000000007ULL, 998244353ULL, 1000000009ULL};
  const std::size_t n = a.rows();
  DenseMatrix<std::int64_t> m(n, n);
  double log2_bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = a(i, j) - (i == j ? t : 0);
      row += static_cast<double>(m(i, j)) * static_cast<double>(m(i, j));
    }
    log2_bound += 0.5 * std::log2(std::max(row, 1.0));
  }
  double log2_product = 0;
  for (std::uint64_t p : kPrimes) {
    if (!detail::det_is_zero_mod(m, p)) return false;
    log2_product += std::log2(static_cast<double>(p)) - 1e-9;
    if (log2_product > log2_bound + 1) return true;
  }
  return std::nullopt;
}

/// Spectral data of a regular graph plus exact integer values where they can be certified.
struct GraphSpectrum {
  Spectrum spectrum;
  int degree = 0;
  bool connected = true;
  std::optional<std::int64_t> exact_lambda1;
  std::optional<std::int64_t> exact_lambda_min;
  std::optional<std::int64_t> exact_mu;

  double mu() const { return spectrum.mu; }
  double lambda1() const { return spectrum.lambda1(); }
  double lambda_min() const { return spectrum.lambda_min(); }
  /// mu = d: every bound collapses to its trivial value.
  bool degenerate() const { return std::abs(spectrum.mu - degree) <= 1e-9; }
};

inline std::optional<std::int64_t> certify_integer(const DenseMatrix<int>& a, double approx) {
  const double r = std::round(approx);
  if (std::abs(approx - r) > 1e-6) return std::nullopt;
  auto ok = is_integer_eigenvalue(a, static_cast<std::int64_t>(r));
  if (ok && *ok) return static_cast<std::int64_t>(r);
  return std::nullopt;
}

inline GraphSpectrum graph_spectrum(const Graph& g, double tol = kDefaultTol) {
  GraphSpectrum out;
  out.degree = g.degree();
  out.connected = g.is_connected();
  auto a = adjacency_matrix(g);
  out.spectrum = spectrum_of(a, tol);
  out.exact_lambda1 = certify_integer(a, out.spectrum.lambda1());
  out.exact_lambda_min = certify_integer(a, out.spectrum.lambda_min());
  if (out.exact_lambda1 && out.exact_lambda_min)
    out.exact_mu = std::max(*out.exact_lambda1, -*out.exact_lambda_min);
  return out;
}

inline double mu(const Graph& g, double tol = kDefaultTol) { return graph_spectrum(g, tol).mu(); }

/// Outcome of checking the edge-vertex spectrum relations for one graph.
///
/// The bipartite spectrum of H is {+-sqrt(d + lambda_i(G))} plus zeros, so its
/// second eigenvalue is sqrt(d + lambda_1(G)). That equals sqrt(d + mu(G)) only
/// when lambda_1(G) >= |lambda_min(G)|; otherwise sqrt(d + mu(G)) is a strict
/// upper bound. Both facts are reported separately.
struct EdgeVertexSpectrumReport {
  int d = 0;
  double mu_g = 0;
  double lambda1_g = 0;
  double lambda0_h = 0;
  double lambda1_h = 0;      // second-largest eigenvalue of A(H)
  double mu_h_literal = 0;   // max(lambda_1, |lambda_min|) of A(H); sqrt(2d) for bipartite H
  double sqrt_2d = 0;
  double sqrt_d_plus_mu = 0;
  double sqrt_d_plus_lambda1 = 0;
  bool gram_identity = false;          // M^T M = A + dI, exact integers
  bool lambda0_matches = false;        // |lambda0(H) - sqrt(2d)| < tol
  bool lambda1_matches = false;        // |lambda1(H) - sqrt(d + lambda1(G))| < tol
  bool mu_upper_bound = false;         // lambda1(H) <= sqrt(d + mu(G)) + tol
  bool mu_equality = false;            // |lambda1(H) - sqrt(d + mu(G))| < tol
  bool symmetric_spectrum = false;     // bipartite: lambda_i = -lambda_{n-1-i}
  Spectrum spectrum_h;
};

inline bool gram_identity_holds(const Graph& g) {
  const int d = g.degree();
  auto m = incidence_matrix(g);
  auto a = adjacency_matrix(g);
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) {
      long long s = 0;
      for (std::size_t e = 0; e < m.rows(); ++e) s += static_cast<long long>(m(e, i)) * m(e, j);
      if (s != a(i, j) + (i == j ? d : 0)) return false;
    }
  return true;
}

/// Builds A(H) explicitly and checks it against the spectrum of G. Throws
/// CheckFailed if the Gram identity, lambda0(H) = sqrt(2d) or
/// lambda1(H) = sqrt(d + lambda1(G)) fails; the mu(G) form is reported only.
inline EdgeVertexSpectrumReport edge_vertex_spectrum_check(const Graph& g, double tol = 1e-8) {
  EdgeVertexSpectrumReport r;
  r.d = g.degree();
  auto gs = graph_spectrum(g);
  r.mu_g = gs.mu();
  r.lambda1_g = gs.lambda1();
  auto h = edge_vertex_graph(g);
  r.spectrum_h = spectrum_of(bipartite_adjacency(h));
  const auto& ev = r.spectrum_h.eigenvalues;
  r.lambda0_h = r.spectrum_h.lambda0();
  r.lambda1_h = r.spectrum_h.lambda1();
  r.mu_h_literal = r.spectrum_h.mu;
  r.sqrt_2d = std::sqrt(2.0 * r.d);
  r.sqrt_d_plus_mu = std::sqrt(r.d + r.mu_g);
  r.sqrt_d_plus_lambda1 = std::sqrt(std::max(0.0, r.d + r.lambda1_g));
  r.gram_identity = gram_identity_holds(g);
  r.lambda0_matches = std::abs(r.lambda0_h - r.sqrt_2d) < tol;
  r.lambda1_matches = std::abs(r.lambda1_h - r.sqrt_d_plus_lambda1) < tol;
  r.mu_upper_bound = r.lambda1_h <= r.sqrt_d_plus_mu + tol;
  r.mu_equality = std::abs(r.lambda1_h - r.sqrt_d_plus_mu) < tol;
  r.symmetric_spectrum = true;
  for (std::size_t i = 0; i < ev.size(); ++i)
    if (std::abs(ev[i] + ev[ev.size() - 1 - i]) >= tol) r.symmetric_spectrum = false;

  if (!r.gram_identity) detail::fail(ErrorCode::CheckFailed, "M^T M != A + dI");
  if (!r.lambda0_matches)
    detail::fail(ErrorCode::CheckFailed, "lambda0(H) = " + std::to_string(r.lambda0_h) + ", expected sqrt(2d)");
  if (!r.lambda1_matches)
    detail::fail(ErrorCode::CheckFailed, "lambda1(H) = " + std::to_string(r.lambda1_h) + ", expected sqrt(d + lambda1(G))");
  return r;
}

}  // namespace explab
