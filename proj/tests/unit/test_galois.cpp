#include <gtest/gtest.h>

#include "generators.hpp"
#include "ldlab/error.hpp"
#include "ldlab/galois.hpp"

using namespace ldlab;

namespace {

// Independent polynomial product mod the reduction polynomial, digit by digit.
Symbol slow_mul(const Field& f, Symbol a, Symbol b) {
  const std::uint32_t p = f.characteristic(), e = f.degree();
  std::vector<std::uint32_t> x(e), y(e), prod(2 * e, 0);
  for (std::uint32_t i = 0, u = a, v = b; i < e; ++i, u /= p, v /= p) {
    x[i] = u % p;
    y[i] = v % p;
  }
  for (std::uint32_t i = 0; i < e; ++i)
    for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  const auto& mod = f.modulus();
  for (std::uint32_t d = 2 * e - 1; d >= e; --d) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= e; ++i) prod[d - e + i] = (prod[d - e + i] + (p - c) * mod[i] % p) % p;
  }
  Symbol out = 0;
  for (std::uint32_t i = e; i-- > 0;) out = static_cast<Symbol>(out * p + prod[i]);
  return out;
}

}  // namespace

TEST(Galois, PrimeFieldBasics) {
  const FieldPtr f2 = make_field(2);
  EXPECT_EQ(f2->order(), 2u);
  EXPECT_EQ(f2->add(1, 1), 0);
  const FieldPtr f5 = make_field(5);
  EXPECT_EQ(f5->inv(3), 2);
  EXPECT_EQ(f5->mul(3, 4), 2);
  EXPECT_EQ(f5->neg(2), 3);
  EXPECT_EQ(f5->pow(2, 4), 1);
}

TEST(Galois, Gf4UsesFirstIrreducibleQuadratic) {
  const FieldPtr f4 = make_field(4);
  EXPECT_EQ(f4->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  // x is encoded as 2; x * x = x + 1
  EXPECT_EQ(f4->mul(2, 2), 3);
}

TEST(Galois, ReductionPolynomialsAreIrreducible) {
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 128u, 243u, 256u, 1024u, 4096u}) {
    const FieldPtr f = make_field(q);
    EXPECT_TRUE(is_irreducible(f->modulus(), f->characteristic())) << q;
    EXPECT_EQ(f->modulus().back(), 1u) << q;
  }
  EXPECT_FALSE(is_irreducible({1, 0, 1}, 2));  // x^2 + 1 = (x + 1)^2
  EXPECT_TRUE(is_irreducible({1, 1, 0, 1}, 2));
}

TEST(Galois, RejectsBadOrders) {
  for (std::uint32_t q : {0u, 1u, 6u, 10u, 12u, 100u}) {
    try {
      make_field(q);
      FAIL() << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kNotPrimePower) << q;
    }
  }
  try {
    make_field(8192);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kOrderTooLarge);
  }
}

TEST(Galois, PrimePowerDecompose) {
  EXPECT_EQ(prime_power_decompose(81), std::make_pair(3u, 4u));
  EXPECT_EQ(prime_power_decompose(7), std::make_pair(7u, 1u));
  EXPECT_EQ(prime_power_decompose(4096), std::make_pair(2u, 12u));
}

TEST(Galois, FieldAxiomsExhaustive) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
    const FieldPtr fp = make_field(q);
    const Field& f = *fp;
    for (Symbol a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0);
      EXPECT_EQ(f.sub(a, a), 0);
      EXPECT_EQ(f.mul(a, 1), a);
      if (a != 0) { EXPECT_EQ(f.mul(a, f.inv(a)), 1); }
      EXPECT_EQ(f.pow(a, q), a);  // Frobenius fixes GF(q)
      for (Symbol b = 0; b < q; ++b) {
        EXPECT_EQ(f.add(a, b), f.add(b, a));
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        EXPECT_EQ(f.mul(a, b), slow_mul(f, a, b));
        EXPECT_LT(f.add(a, b), q);
      }
    }
  }
}

TEST(Galois, AssociativityAndDistributivityProperty) {
  Rng rng(11);
  for (int i = 0; i < gen::kCases * 10; ++i) {
    const FieldPtr f = make_field(std::vector<std::uint32_t>{2, 3, 4, 8, 9, 27, 256, 625, 1024}[uniform_below(rng, 9)]);
    const Symbol a = gen::element(*f, rng), b = gen::element(*f, rng), c = gen::element(*f, rng);
    EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
    EXPECT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
    EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
    if (b != 0) { EXPECT_EQ(f->mul(f->div(a, b), b), a); }
  }
}

TEST(Galois, InverseOfZeroThrows) {
  const FieldPtr f = make_field(7);
  try {
    f->inv(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDivisionByZero);
  }
}
