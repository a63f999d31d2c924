#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "explab/error.hpp"
#include "explab/fields.hpp"
#include "explab/matrix.hpp"
#include "explab/rational.hpp"

namespace explab {

using SymbolMatrix = DenseMatrix<Symbol>;

// ---------------------------------------------------------------------------
// Linear algebra over GF(q)

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(SymbolMatrix& m, const Field& f) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const Symbol inv = f.inv(m(row, col));
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Symbol factor = m(r, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(SymbolMatrix m, const Field& f) { return rref(m, f).size(); }

/// Nonzero rows of the RREF: a basis of the row space.
inline SymbolMatrix row_basis(SymbolMatrix m, const Field& f) {
  const std::size_t r = rref(m, f).size();
  SymbolMatrix out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

/// Basis (as rows) of {x in GF(q)^cols : m x^T = 0}.
inline SymbolMatrix nullspace(SymbolMatrix m, std::size_t cols, const Field& f) {
  if (m.rows() == 0) m = SymbolMatrix(0, cols);
  detail::require(m.cols() == cols, ErrorCode::LengthMismatch, "column count mismatch");
  auto pivots = rref(m, f);
  std::vector<char> is_pivot(cols, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  SymbolMatrix basis(cols - pivots.size(), cols, 0);
  std::size_t b = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(b, free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(b, pivots[i]) = f.neg(m(i, free));
    ++b;
  }
  return basis;
}

inline SymbolMatrix multiply_transpose(const SymbolMatrix& a, const SymbolMatrix& b, const Field& f) {
  detail::require(a.cols() == b.cols(), ErrorCode::LengthMismatch, "inner dimension mismatch");
  SymbolMatrix out(a.rows(), b.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) {
      Symbol s = 0;
      for (std::size_t t = 0; t < a.cols(); ++t) s = f.add(s, f.mul(a(i, t), b(j, t)));
      out(i, j) = s;
    }
  return out;
}

// ---------------------------------------------------------------------------

enum class DistanceProvenance { Computed, Asserted };

struct KnownDistance {
  int value = 0;
  DistanceProvenance provenance = DistanceProvenance::Computed;
};

/// [n, k] linear code over GF(q) carrying both a generator and a parity-check matrix.
class LinearCode {
 public:
  LinearCode() = default;

  /// Code spanned by the rows of gen (dependent rows are dropped).
  static LinearCode from_generator(const Field& f, std::size_t n, const SymbolMatrix& gen) {
    detail::require(gen.rows() == 0 || gen.cols() == n, ErrorCode::LengthMismatch, "generator width != n");
    check_symbols(f, gen);
    LinearCode c;
    c.field_ = f;
    c.n_ = n;
    c.gen_ = row_basis(gen.rows() == 0 ? SymbolMatrix(0, n) : gen, f);
    c.pchk_ = nullspace(c.gen_, n, f);
    return c;
  }

  /// Code defined as the kernel of pchk (dependent rows are dropped).
  static LinearCode from_parity_check(const Field& f, std::size_t n, const SymbolMatrix& pchk) {
    detail::require(pchk.rows() == 0 || pchk.cols() == n, ErrorCode::LengthMismatch, "parity-check width != n");
    check_symbols(f, pchk);
    LinearCode c;
    c.field_ = f;
    c.n_ = n;
    c.pchk_ = row_basis(pchk.rows() == 0 ? SymbolMatrix(0, n) : pchk, f);
    c.gen_ = nullspace(c.pchk_, n, f);
    return c;
  }

  const Field& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return gen_.rows(); }
  const SymbolMatrix& gen() const noexcept { return gen_; }
  const SymbolMatrix& pchk() const noexcept { return pchk_; }
  Rational rate() const { return Rational(static_cast<std::int64_t>(k()), static_cast<std::int64_t>(n_)); }

  const std::optional<KnownDistance>& known_distance() const noexcept { return distance_; }
  void set_known_distance(int d, DistanceProvenance p) { distance_ = KnownDistance{d, p}; }

  /// Number of codewords q^k, saturating at UINT64_MAX.
  std::uint64_t size() const noexcept {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < k(); ++i) {
      if (s > UINT64_MAX / static_cast<std::uint64_t>(field_.q())) return UINT64_MAX;
      s *= static_cast<std::uint64_t>(field_.q());
    }
    return s;
  }

  std::vector<Symbol> encode(std::span<const Symbol> message) const {
    detail::require(message.size() == k(), ErrorCode::LengthMismatch, "message length != k");
    std::vector<Symbol> word(n_, 0);
    for (std::size_t i = 0; i < k(); ++i) {
      if (message[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) word[j] = field_.add(word[j], field_.mul(message[i], gen_(i, j)));
    }
    return word;
  }

  bool contains(std::span<const Symbol> word) const {
    detail::require(word.size() == n_, ErrorCode::LengthMismatch, "word length != n");
    for (std::size_t r = 0; r < pchk_.rows(); ++r) {
      Symbol s = 0;
      for (std::size_t j = 0; j < n_; ++j) s = field_.add(s, field_.mul(pchk_(r, j), word[j]));
      if (s != 0) return false;
    }
    return true;
  }

  /// gen pchk^T = 0, rank(gen) = k, rank(pchk) = n - k.
  bool invariants_hold() const {
    auto prod = multiply_transpose(gen_, pchk_, field_);
    if (std::any_of(prod.data().begin(), prod.data().end(), [](Symbol s) { return s != 0; })) return false;
    return rank(gen_, field_) == k() && rank(pchk_, field_) == n_ - k();
  }

 private:
  static void check_symbols(const Field& f, const SymbolMatrix& m) {
    for (Symbol s : m.data()) detail::require(f.contains(s), ErrorCode::OutOfRange, "matrix entry outside GF(q)");
  }

  Field field_;
  std::size_t n_ = 0;
  SymbolMatrix gen_;
  SymbolMatrix pchk_;
  std::optional<KnownDistance> distance_;
};

/// Calls fn(index, word) for every codeword whose message index (base-q,
/// digit 0 least significant) lies in [begin, end). Consecutive words are
/// updated incrementally, one changed message digit at a time.
template <class Fn>
void for_each_codeword(const LinearCode& code, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  const Field& f = code.field();
  const auto q = static_cast<std::uint64_t>(f.q());
  const std::size_t k = code.k();
  const std::size_t n = code.n();
  std::vector<Symbol> msg(k, 0);
  std::uint64_t rest = begin;
  for (std::size_t i = 0; i < k; ++i) {
    msg[i] = static_cast<Symbol>(rest % q);
    rest /= q;
  }
  std::vector<Symbol> word = code.encode(msg);
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    fn(idx, std::span<const Symbol>(word));
    if (idx + 1 == end) break;
    for (std::size_t i = 0; i < k; ++i) {
      const Symbol old = msg[i];
      const Symbol next = static_cast<Symbol>((old + 1) % q);
      msg[i] = next;
      const Symbol delta = f.sub(next, old);
      const Symbol* row = code.gen().row(i);
      for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(delta, row[j]));
      if (next != 0) break;
    }
  }
}

template <class Fn>
void for_each_codeword(const LinearCode& code, Fn&& fn) {
  for_each_codeword(code, 0, code.size(), std::forward<Fn>(fn));
}

inline std::size_t hamming_weight(std::span<const Symbol> word) {
  return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Symbol s) { return s != 0; }));
}

}  // namespace explab
