#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "explab/error.hpp"

namespace explab {

/// Field element encoded as sum c_i p^i of its polynomial coefficients.
using Symbol = std::uint16_t;

inline constexpr int kMaxFieldSize = 1024;

namespace detail {

struct BuiltinModulus {
  int p;
  int k;
  std::vector<int> coeffs;  // low degree first, monic
};

// Smallest primitive polynomial (by base-p encoding) for every p^k <= 1024, k >= 2.
inline const std::vector<BuiltinModulus>& builtin_moduli() {
  static const std::vector<BuiltinModulus> table = {
      {2, 2, {1, 1, 1}},
      {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 0, 0, 0, 1}},
      {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
      {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
      {2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
      {3, 2, {2, 1, 1}},
      {3, 3, {1, 2, 0, 1}},
      {3, 4, {2, 1, 0, 0, 1}},
      {3, 5, {1, 2, 0, 0, 0, 1}},
      {3, 6, {2, 1, 0, 0, 0, 0, 1}},
      {5, 2, {2, 1, 1}},
      {5, 3, {2, 3, 0, 1}},
      {5, 4, {2, 2, 1, 0, 1}},
      {7, 2, {3, 1, 1}},
      {7, 3, {2, 3, 0, 1}},
      {11, 2, {7, 1, 1}},
      {13, 2, {2, 1, 1}},
      {17, 2, {3, 1, 1}},
      {19, 2, {2, 1, 1}},
      {23, 2, {7, 1, 1}},
      {29, 2, {3, 1, 1}},
      {31, 2, {12, 1, 1}},
  };
  return table;
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int i = 2; i * i <= n; ++i)
    if (n % i == 0) return false;
  return true;
}

// Remainder of a by monic b over GF(p); both low degree first.
inline std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    int lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    }
    a.pop_back();
  }
  return a;
}

/// Trial factorization: no monic divisor of degree 1..deg/2.
inline bool is_irreducible(const std::vector<int>& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int dg = 1; dg <= deg / 2; ++dg) {
    int count = 1;
    for (int i = 0; i < dg; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      std::vector<int> g(dg + 1);
      int c = code;
      for (int i = 0; i < dg; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[dg] = 1;
      auto r = poly_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](int x) { return x == 0; })) return false;
    }
  }
  return true;
}

struct FieldTables {
  int p = 0;
  int k = 0;
  int q = 0;
  std::vector<int> modulus;
  std::vector<Symbol> add;  // q*q
  std::vector<Symbol> mul;  // q*q
  std::vector<Symbol> neg;
  std::vector<Symbol> inv;  // inv[0] unused
};

inline std::shared_ptr<const FieldTables> build_tables(int p, int k) {
  require(k >= 1, ErrorCode::BadParameters, "extension degree must be >= 1");
  require(is_prime(p), ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  long long q_ll = 1;
  for (int i = 0; i < k; ++i) {
    q_ll *= p;
    require(q_ll <= kMaxFieldSize, ErrorCode::FieldTooLarge,
            std::to_string(p) + "^" + std::to_string(k) + " exceeds " + std::to_string(kMaxFieldSize));
  }
  auto t = std::make_shared<FieldTables>();
  t->p = p;
  t->k = k;
  t->q = static_cast<int>(q_ll);
  const int q = t->q;

  if (k == 1) {
    t->modulus = {0, 1};
  } else {
    auto& table = builtin_moduli();
    auto it = std::find_if(table.begin(), table.end(), [&](const auto& m) { return m.p == p && m.k == k; });
    require(it != table.end(), ErrorCode::BadParameters, "no built-in modulus");
    t->modulus = it->coeffs;
    require(is_irreducible(t->modulus, p), ErrorCode::CheckFailed, "built-in modulus is reducible");
  }

  std::vector<int> pw(k + 1, 1);
  for (int i = 1; i <= k; ++i) pw[i] = pw[i - 1] * p;

  t->add.resize(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      int s = 0;
      for (int i = 0; i < k; ++i) s += ((a / pw[i] % p + b / pw[i] % p) % p) * pw[i];
      t->add[static_cast<std::size_t>(a) * q + b] = static_cast<Symbol>(s);
    }
  t->neg.resize(q);
  for (int a = 0; a < q; ++a) {
    int s = 0;
    for (int i = 0; i < k; ++i) s += ((p - a / pw[i] % p) % p) * pw[i];
    t->neg[a] = static_cast<Symbol>(s);
  }

  // mul[a][b] = mul[a][b - p^j] + a*x^j where j is the top nonzero digit of b.
  t->mul.assign(static_cast<std::size_t>(q) * q, 0);
  for (int a = 0; a < q; ++a) {
    std::vector<int> coeffs(k);
    for (int i = 0; i < k; ++i) coeffs[i] = a / pw[i] % p;
    std::vector<int> ax(k);
    for (int j = 0; j < k; ++j) {
      int enc = 0;
      for (int i = 0; i < k; ++i) enc += coeffs[i] * pw[i];
      ax[j] = enc;
      if (k == 1) break;
      // coeffs *= x mod f
      int top = coeffs[k - 1];
      for (int i = k - 1; i > 0; --i) coeffs[i] = coeffs[i - 1];
      coeffs[0] = 0;
      for (int i = 0; i < k; ++i) coeffs[i] = ((coeffs[i] - top * t->modulus[i]) % p + p) % p;
    }
    Symbol* row = &t->mul[static_cast<std::size_t>(a) * q];
    for (int b = 1; b < q; ++b) {
      int j = k - 1;
      while (b < pw[j]) --j;
      row[b] = t->add[static_cast<std::size_t>(row[b - pw[j]]) * q + ax[j]];
    }
  }
  t->inv.assign(q, 0);
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (t->mul[static_cast<std::size_t>(a) * q + b] == 1) {
        t->inv[a] = static_cast<Symbol>(b);
        break;
      }
  return t;
}

}  // namespace detail

/// GF(p^k) with table arithmetic. Cheap to copy; tables are shared and immutable.
class Field {
 public:
  Field() = default;

  /// Returns GF(p^k) using the fixed built-in modulus; tables are cached per (p, k).
  static Field make(int p, int k = 1) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const detail::FieldTables>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, detail::build_tables(p, k)).first;
    Field f;
    f.t_ = it->second;
    return f;
  }

  bool valid() const noexcept { return t_ != nullptr; }
  int p() const noexcept { return t_->p; }
  int k() const noexcept { return t_->k; }
  int q() const noexcept { return t_->q; }
  /// Modulus coefficients, low degree first. GF(p) reports x.
  const std::vector<int>& modulus() const noexcept { return t_->modulus; }

  Symbol add(Symbol a, Symbol b) const noexcept { return t_->add[idx(a, b)]; }
  Symbol sub(Symbol a, Symbol b) const noexcept { return t_->add[idx(a, t_->neg[b])]; }
  Symbol mul(Symbol a, Symbol b) const noexcept { return t_->mul[idx(a, b)]; }
  Symbol neg(Symbol a) const noexcept { return t_->neg[a]; }
  Symbol inv(Symbol a) const {
    detail::require(a != 0, ErrorCode::BadParameters, "inverse of zero");
    return t_->inv[a];
  }
  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

  bool contains(Symbol a) const noexcept { return a < t_->q; }
  /// Elements of the prime subfield are exactly the constants 0..p-1.
  bool in_prime_subfield(Symbol a) const noexcept { return a < t_->p; }

  /// Coordinates of a over the prime subfield (polynomial coefficients).
  std::vector<int> coordinates(Symbol a) const {
    std::vector<int> c(t_->k);
    int v = a;
    for (int i = 0; i < t_->k; ++i) {
      c[i] = v % t_->p;
      v /= t_->p;
    }
    return c;
  }

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.t_ == b.t_ || (a.t_ && b.t_ && a.t_->p == b.t_->p && a.t_->k == b.t_->k);
  }

 private:
  std::size_t idx(Symbol a, Symbol b) const noexcept { return static_cast<std::size_t>(a) * t_->q + b; }

  std::shared_ptr<const detail::FieldTables> t_;
};

inline Field field_make(int p, int k) { return Field::make(p, k); }

/// One symbol of GF(q^d), held as its coordinate vector in GF(q)^d.
/// Only the vector-space structure is used; no extension multiplication.
struct ExtSymbol {
  int q = 0;
  std::vector<Symbol> coords;

  std::size_t size() const noexcept { return coords.size(); }
  bool is_zero() const noexcept {
    return std::all_of(coords.begin(), coords.end(), [](Symbol s) { return s == 0; });
  }
  friend bool operator==(const ExtSymbol&, const ExtSymbol&) = default;
};

inline ExtSymbol ext_pack(const Field& base, std::span<const Symbol> v, std::size_t d) {
  detail::require(v.size() == d, ErrorCode::LengthMismatch,
                  "expected " + std::to_string(d) + " coordinates, got " + std::to_string(v.size()));
  for (Symbol s : v) detail::require(base.contains(s), ErrorCode::OutOfRange, "coordinate outside GF(q)");
  return ExtSymbol{base.q(), std::vector<Symbol>(v.begin(), v.end())};
}

inline std::vector<Symbol> ext_unpack(const ExtSymbol& s) { return s.coords; }

/// Hamming weight over the extension alphabet: number of nonzero symbols.
inline std::size_t ext_weight(std::span<const ExtSymbol> word) {
  return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](const ExtSymbol& s) { return !s.is_zero(); }));
}

}  // namespace explab
