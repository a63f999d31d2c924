#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "explab/error.hpp"

namespace explab {

/// Exact fraction num/den with den > 0 and gcd(num, den) = 1.
///
/// Arithmetic goes through 128-bit intermediates and throws Overflow if the
/// reduced result does not fit in 64 bits. All quantities handled by the
/// library (subset sizes, degrees, code lengths) stay far below that.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit from integers
  Rational(std::int64_t num, std::int64_t den) { *this = make(num, den); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  long double to_long_double() const noexcept {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }

  /// floor(this * m) computed exactly.
  std::int64_t floor_times(std::int64_t m) const {
    __int128 p = static_cast<__int128>(num_) * m;
    __int128 q = p / den_;
    if (p % den_ != 0 && p < 0) --q;
    return narrow(q);
  }

  std::int64_t floor() const { return floor_times(1); }
  std::int64_t ceil() const { return -Rational(-num_, den_).floor(); }
  bool is_integer() const noexcept { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                   static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                   static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    detail::require(b.num_ != 0, ErrorCode::BadParameters, "division by zero");
    return from128(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  /// Parses "p/q", an integer, or a finite decimal such as "0.25".
  static Rational parse(std::string_view text) {
    auto bad = [&] { detail::fail(ErrorCode::BadParameters, "not a fraction: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      std::int64_t p = 0, q = 0;
      if (!parse_int(text.substr(0, slash), p) || !parse_int(text.substr(slash + 1), q) || q == 0) bad();
      return Rational(p, q);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string digits(text.substr(0, dot));
      std::string_view frac = text.substr(dot + 1);
      if (frac.size() > 15) bad();
      digits += frac;
      std::int64_t p = 0;
      if (digits == "-" || digits.empty() || !parse_int(digits, p)) bad();
      std::int64_t q = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) q *= 10;
      return Rational(p, q);
    }
    std::int64_t p = 0;
    if (!parse_int(text, p)) bad();
    return Rational(p);
  }

 private:
  static bool parse_int(std::string_view s, std::int64_t& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  }

  static std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) detail::fail(ErrorCode::Overflow, "rational component exceeds 64 bits");
    return static_cast<std::int64_t>(v);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from128(__int128 n, __int128 d) {
    detail::require(d != 0, ErrorCode::BadParameters, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  static Rational make(std::int64_t n, std::int64_t d) { return from128(n, d); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace explab
