#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fieldunits/gf2poly.hpp"

using namespace fieldunits;

namespace {

using Bits = std::vector<bool>;

Bits to_bits(const Gf2Poly& p) {
  Bits b(static_cast<std::size_t>(p.degree() + 1));
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = p.coeff(i);
  return b;
}

Gf2Poly from_bits(const Bits& b) {
  Gf2Poly p;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) p.set_coeff(i, true);
  return p;
}

Bits schoolbook(const Bits& a, const Bits& b) {
  if (a.empty() || b.empty()) return {};
  Bits r(a.size() + b.size() - 1, false);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] != b[j];
  return r;
}

Gf2Poly random_poly(std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  Gf2Poly p;
  const std::size_t d = deg(rng);
  for (std::size_t i = 0; i < d; ++i)
    if (rng() & 1) p.set_coeff(i, true);
  p.set_coeff(d, true);
  return p;
}

// Irreducible iff no factor of degree 1..deg/2; divisors tried as bit masks.
bool trial_irreducible(std::uint64_t f) {
  const int d = 63 - __builtin_clzll(f);
  auto mod = [](std::uint64_t a, std::uint64_t b) {
    const int db = 63 - __builtin_clzll(b);
    while (a && 63 - __builtin_clzll(a) >= db) a ^= b << ((63 - __builtin_clzll(a)) - db);
    return a;
  };
  for (std::uint64_t g = 2; 63 - __builtin_clzll(g) <= d / 2; ++g)
    if (mod(f, g) == 0) return false;
  return d >= 1;
}

}  // namespace

TEST(Gf2Poly, KnownValues) {
  const Gf2Poly x = Gf2Poly::x(), one = Gf2Poly::one();
  EXPECT_EQ((x + one).square(), Gf2Poly::from_exponents({2, 0}));
  const auto [q, r] = Gf2Poly::monomial(3).divmod(x + one);
  EXPECT_EQ(q, Gf2Poly::from_exponents({2, 1, 0}));
  EXPECT_EQ(r, one);
  EXPECT_EQ((x + one) * q + r, Gf2Poly::monomial(3));
  EXPECT_EQ(Gf2Poly::from_exponents({2, 1, 0}).derivative(), one);
  EXPECT_EQ(gcd(Gf2Poly::from_exponents({2, 1}), x), x);
  EXPECT_EQ(gcd(Gf2Poly::from_exponents({2, 0}), x + one), x + one);
  EXPECT_EQ(gcd(Gf2Poly::from_exponents({3, 1, 0}), Gf2Poly::from_exponents({2, 1, 0})), one);
  EXPECT_TRUE(is_irreducible(Gf2Poly::from_exponents({2, 1, 0})));
  EXPECT_FALSE(is_irreducible(Gf2Poly::from_exponents({2, 0})));
  EXPECT_TRUE(is_irreducible(Gf2Poly::from_exponents({4, 1, 0})));
}

TEST(Gf2Poly, Basics) {
  EXPECT_EQ(Gf2Poly().degree(), -1);
  EXPECT_EQ(Gf2Poly::monomial(200).degree(), 200);
  EXPECT_EQ(Gf2Poly::from_exponents({3, 3, 1}), Gf2Poly::x());
  EXPECT_THROW(Gf2Poly::x().divmod(Gf2Poly()), std::domain_error);
  EXPECT_THROW(is_irreducible(Gf2Poly::one()), std::domain_error);
  EXPECT_THROW(factor(Gf2Poly()), std::domain_error);
  EXPECT_TRUE(factor(Gf2Poly::one()).empty());
  EXPECT_LT(Gf2Poly::from_exponents({1, 0}), Gf2Poly::from_exponents({2}));
  EXPECT_LT(Gf2Poly::from_exponents({2}), Gf2Poly::from_exponents({2, 0}));
}

TEST(Gf2Poly, ProductsMatchSchoolbook) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Gf2Poly a = random_poly(rng, 700), b = random_poly(rng, 700);
    ASSERT_EQ(to_bits(a * b), schoolbook(to_bits(a), to_bits(b)));
    ASSERT_EQ(a.square(), a * a);
    ASSERT_EQ(a.square().sqrt(), a);
  }
}

TEST(Gf2Poly, DivisionIdentity) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const Gf2Poly a = random_poly(rng, 600), b = random_poly(rng, 300);
    const auto [q, r] = a.divmod(b);
    ASSERT_EQ(q * b + r, a);
    ASSERT_LT(r.degree(), b.degree());
    const Gf2Poly m = random_poly(rng, 200);
    if (m.degree() < 1) continue;
    ASSERT_EQ(mulmod(a, b, m), (a * b) % m);
    ASSERT_EQ(sqrmod(a, m), (a * a) % m);
    ASSERT_EQ(powmod(a, 5, m), (a * a * a * a * a) % m);
  }
}

TEST(Gf2Poly, GcdDividesBoth) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Gf2Poly c = random_poly(rng, 30);
    const Gf2Poly a = random_poly(rng, 100) * c, b = random_poly(rng, 100) * c;
    const Gf2Poly g = gcd(a, b);
    ASSERT_TRUE((a % g).is_zero());
    ASSERT_TRUE((b % g).is_zero());
    ASSERT_TRUE((g % c).is_zero());
    ASSERT_TRUE(gcd(a / g, b / g).is_one());
  }
}

TEST(Gf2Poly, IrreducibilityAgreesWithTrialDivision) {
  for (std::uint64_t f = 2; f < (1u << 15); ++f)
    ASSERT_EQ(is_irreducible(Gf2Poly(std::vector<std::uint64_t>{f})), trial_irreducible(f)) << f;
}

TEST(Gf2Poly, KnownIrreducibles) {
  // x^127 + x + 1 is a primitive trinomial; x^128 + x + 1 is reducible (a
  // trinomial x^n + x + 1 with n = 0 mod 8 has a factor by Swan's theorem).
  EXPECT_TRUE(is_irreducible(Gf2Poly::from_exponents({127, 1, 0})));
  EXPECT_FALSE(is_irreducible(Gf2Poly::from_exponents({128, 1, 0})));
  EXPECT_TRUE(is_irreducible(Gf2Poly::from_exponents({521, 32, 0})));
}

TEST(Gf2Poly, FactorsMultiplyBackAndAreIrreducible) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 60; ++i) {
    // Build f with known repeated factors to exercise the squarefree step.
    const Gf2Poly a = random_poly(rng, 40), b = random_poly(rng, 20);
    const Gf2Poly f = a * b.square() * b;
    const auto fs = factor(f, static_cast<std::uint64_t>(i));
    Gf2Poly product = Gf2Poly::one();
    for (const auto& g : fs) {
      ASSERT_TRUE(is_irreducible(g.poly));
      product *= g.poly.pow(g.multiplicity);
    }
    ASSERT_EQ(product, f);
    ASSERT_TRUE(std::is_sorted(fs.begin(), fs.end(), [](const Gf2Factor& x, const Gf2Factor& y) { return x.poly < y.poly; }));
  }
}

TEST(Gf2Poly, FactorizationIndependentOfSeed) {
  std::mt19937_64 rng(8);
  const Gf2Poly f = random_poly(rng, 200) * random_poly(rng, 100);
  EXPECT_EQ(factor(f, 0), factor(f, 12345));
}

TEST(Gf2Poly, Example) {
  const auto fs = factor(Gf2Poly::from_exponents({5, 1, 0}));
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0], (Gf2Factor{Gf2Poly::from_exponents({2, 1, 0}), 1}));
  EXPECT_EQ(fs[1], (Gf2Factor{Gf2Poly::from_exponents({3, 2, 0}), 1}));
}

TEST(Gf2Poly, DistinctDegreeSplitsByDegree) {
  // Product of all irreducibles of degree 1..4 equals the squarefree part of
  // prod (x^(2^d) - x); each DDF block g_d has degree d * (count of degree d).
  Gf2Poly f = Gf2Poly::one();
  std::vector<unsigned> count(5, 0);
  for (std::uint64_t g = 2; g < 32; ++g)
    if (trial_irreducible(g)) {
      f *= Gf2Poly(std::vector<std::uint64_t>{g});
      ++count[63 - __builtin_clzll(g)];
    }
  for (const auto& [block, d] : distinct_degree_factorization(f)) {
    ASSERT_EQ(block.degree(), static_cast<long>(d * count[d]));
    ASSERT_EQ(equal_degree_factorization(block, d, 0).size(), count[d]);
  }
}
