#include <gtest/gtest.h>

#include <vector>

#include "explab/fields.hpp"

using namespace explab;

namespace {

struct PrimePower {
  int p, k, q;
};

std::vector<PrimePower> prime_powers_up_to(int limit) {
  std::vector<PrimePower> out;
  for (int p = 2; p <= limit; ++p) {
    bool prime = true;
    for (int i = 2; i * i <= p; ++i) prime = prime && p % i != 0;
    if (!prime) continue;
    for (int k = 1, q = p; q <= limit; ++k, q *= p) out.push_back({p, k, q});
  }
  return out;
}

// Schoolbook product of the two coefficient vectors, reduced by the monic modulus.
Symbol naive_mul(const PrimePower& f, const std::vector<int>& modulus, int a, int b) {
  std::vector<int> x(f.k), y(f.k);
  for (int i = 0, u = a, v = b; i < f.k; ++i, u /= f.p, v /= f.p) {
    x[i] = u % f.p;
    y[i] = v % f.p;
  }
  std::vector<int> prod(2 * f.k - 1, 0);
  for (int i = 0; i < f.k; ++i)
    for (int j = 0; j < f.k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % f.p;
  if (f.k > 1) {
    for (int top = 2 * f.k - 2; top >= f.k; --top) {
      const int lead = prod[top];
      for (int i = 0; i <= f.k; ++i) {
        int& c = prod[top - f.k + i];
        c = ((c - lead * modulus[i]) % f.p + f.p) % f.p;
      }
    }
  }
  int enc = 0;
  for (int i = f.k - 1; i >= 0; --i) enc = enc * f.p + prod[i];
  return static_cast<Symbol>(enc);
}

Symbol naive_add(const PrimePower& f, int a, int b) {
  int enc = 0, pw = 1;
  for (int i = 0; i < f.k; ++i, a /= f.p, b /= f.p, pw *= f.p) enc += ((a % f.p + b % f.p) % f.p) * pw;
  return static_cast<Symbol>(enc);
}

}  // namespace

TEST(Fields, TablesMatchPolynomialArithmeticUpTo64) {
  for (const auto& pp : prime_powers_up_to(64)) {
    const Field f = Field::make(pp.p, pp.k);
    ASSERT_EQ(f.q(), pp.q);
    for (int a = 0; a < pp.q; ++a)
      for (int b = 0; b < pp.q; ++b) {
        ASSERT_EQ(f.add(a, b), naive_add(pp, a, b)) << pp.q << " " << a << "+" << b;
        ASSERT_EQ(f.mul(a, b), naive_mul(pp, f.modulus(), a, b)) << pp.q << " " << a << "*" << b;
      }
  }
}

TEST(Fields, AxiomsHoldUpTo64) {
  for (const auto& pp : prime_powers_up_to(64)) {
    const Field f = Field::make(pp.p, pp.k);
    const int q = pp.q;
    for (int a = 0; a < q; ++a) {
      ASSERT_EQ(f.add(a, 0), a);
      ASSERT_EQ(f.mul(a, 1), a);
      ASSERT_EQ(f.add(a, f.neg(a)), 0);
      ASSERT_EQ(f.sub(a, a), 0);
      if (a != 0) ASSERT_EQ(f.mul(a, f.inv(a)), 1) << q << " " << a;
      for (int b = 0; b < q; ++b) {
        ASSERT_EQ(f.add(a, b), f.add(b, a));
        ASSERT_EQ(f.mul(a, b), f.mul(b, a));
        if (b != 0) ASSERT_EQ(f.mul(f.div(a, b), b), a);
      }
    }
    // Triples: exhaustive for small q, a stride otherwise.
    const int step = q <= 27 ? 1 : 5;
    for (int a = 0; a < q; a += step)
      for (int b = 0; b < q; b += step)
        for (int c = 0; c < q; c += step) {
          ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
          ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
  }
}

TEST(Fields, BuiltinModuliArePrimitive) {
  for (const auto& m : detail::builtin_moduli()) {
    const Field f = Field::make(m.p, m.k);
    const Symbol x = static_cast<Symbol>(m.p);  // the class of x
    Symbol acc = 1;
    int order = 0;
    do {
      acc = f.mul(acc, x);
      ++order;
    } while (acc != 1 && order <= f.q());
    EXPECT_EQ(order, f.q() - 1) << m.p << "^" << m.k;
  }
}

TEST(Fields, EveryPrimePowerUpTo1024IsConstructible) {
  for (const auto& pp : prime_powers_up_to(1024)) {
    const Field f = Field::make(pp.p, pp.k);
    EXPECT_EQ(f.q(), pp.q);
    // Frobenius fixes exactly the prime subfield.
    int fixed = 0;
    for (int a = 0; a < f.q(); ++a) {
      Symbol pw = 1;
      for (int i = 0; i < pp.p; ++i) pw = f.mul(pw, static_cast<Symbol>(a));
      if (pw == a) {
        ++fixed;
        EXPECT_TRUE(f.in_prime_subfield(static_cast<Symbol>(a)));
      }
    }
    EXPECT_EQ(fixed, pp.p);
  }
}

TEST(Fields, PrimeFieldIsModularArithmetic) {
  const Field f = Field::make(1021);
  for (int a = 0; a < 1021; a += 37)
    for (int b = 0; b < 1021; b += 41) {
      EXPECT_EQ(f.mul(a, b), a * b % 1021);
      EXPECT_EQ(f.add(a, b), (a + b) % 1021);
    }
}

TEST(Fields, RejectsBadParameters) {
  auto code_of = [](int p, int k) {
    try {
      (void)Field::make(p, k);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::CheckFailed;
  };
  EXPECT_EQ(code_of(6, 1), ErrorCode::NonPrime);
  EXPECT_EQ(code_of(1, 1), ErrorCode::NonPrime);
  EXPECT_EQ(code_of(2, 11), ErrorCode::FieldTooLarge);
  EXPECT_EQ(code_of(37, 2), ErrorCode::FieldTooLarge);
  EXPECT_EQ(code_of(1031, 1), ErrorCode::FieldTooLarge);
}

TEST(Fields, CoordinatesRoundTrip) {
  const Field f = Field::make(3, 3);
  for (int a = 0; a < f.q(); ++a) {
    auto c = f.coordinates(static_cast<Symbol>(a));
    EXPECT_EQ(c[0] + 3 * c[1] + 9 * c[2], a);
  }
}

TEST(Fields, ExtensionSymbolsPackAndCountWeight) {
  const Field f = Field::make(2);
  std::vector<Symbol> block{1, 0, 1};
  auto s = ext_pack(f, block, 3);
  EXPECT_EQ(s.q, 2);
  EXPECT_EQ(ext_unpack(s), block);
  std::vector<ExtSymbol> word{s, ext_pack(f, std::vector<Symbol>{0, 0, 0}, 3), s};
  EXPECT_EQ(ext_weight(word), 2u);
  try {
    (void)ext_pack(f, block, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
  }
  try {
    (void)ext_pack(f, std::vector<Symbol>{2, 0, 0}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
  }
}
