#include <gtest/gtest.h>

#include <random>

#include "fieldunits/field.hpp"
#include "fieldunits/text.hpp"

using namespace fieldunits;

namespace {

using Digits = std::vector<std::uint64_t>;

// Schoolbook product of coefficient vectors, reduced by the monic modulus.
Digits naive_mul(const Digits& a, const Digits& b, const Digits& m, std::uint64_t p) {
  const std::size_t n = m.size() - 1;
  Digits r(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (std::size_t k = 2 * n - 1; k >= n; --k) {
    const std::uint64_t c = r[k];
    for (std::size_t i = 0; i <= n; ++i) r[k - n + i] = (r[k - n + i] + (p - c) * m[i]) % p;
  }
  r.resize(n);
  return r;
}

// Irreducible iff no monic factor of degree 1..n/2, checked by trial
// division over F_p on coefficient vectors.
bool brute_irreducible(const Digits& f, std::uint64_t p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Digits g(d + 1, 0);
      g[d] = 1;
      for (std::uint64_t c = code, i = 0; i < d; ++i, c /= p) g[i] = c % p;
      Digits r = f;
      for (std::size_t k = n; k >= d; --k) {
        const std::uint64_t c = r[k];
        for (std::size_t i = 0; i <= d; ++i) r[k - d + i] = (r[k - d + i] + (p - c) * g[i]) % p;
        if (k == d) break;
      }
      bool zero = true;
      for (std::size_t i = 0; i < d; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

// The first monic irreducible of degree n in base-p order.
Digits first_irreducible(std::uint64_t p, unsigned n) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < n; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Digits f(n + 1, 0);
    f[n] = 1;
    for (std::uint64_t c = code, i = 0; i < n; ++i, c /= p) f[i] = c % p;
    if (brute_irreducible(f, p)) return f;
  }
  return {};
}

}  // namespace

TEST(Field, Interning) {
  EXPECT_EQ(Field::make(3, 2), Field::make(3, 2));
  EXPECT_FALSE(Field::make(3, 2) == Field::make(3, 1));
  EXPECT_EQ(Field::make(2, 1), Field::gf2());
}

TEST(Field, Errors) {
  EXPECT_THROW(Field::make(4, 1), std::invalid_argument);
  EXPECT_THROW(Field::make(2, 0), std::invalid_argument);
  EXPECT_THROW(Field::make(2, 64), std::overflow_error);
  EXPECT_THROW(Field::make(3).inv(0), std::domain_error);
  EXPECT_THROW(Field::make(3).generator(), std::domain_error);
}

TEST(Field, CanonicalModulusIsFirstIrreducible) {
  EXPECT_EQ(Field::make(3, 2).modulus(), (Digits{1, 0, 1}));
  EXPECT_EQ(Field::make(2, 4).modulus(), (Digits{1, 1, 0, 0, 1}));
  EXPECT_TRUE(Field::make(2, 1).modulus().empty());
  for (auto [p, n] : {std::pair{2ull, 2u}, {2, 3}, {2, 5}, {2, 8}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}, {11, 2}})
    EXPECT_EQ(Field::make(p, n).modulus(), first_irreducible(p, n)) << p << "^" << n;
}

TEST(Field, SmallExamples) {
  const Field f2 = Field::gf2(), f3 = Field::make(3), f9 = Field::make(3, 2);
  EXPECT_EQ(f2.add(1, 1), 0u);
  EXPECT_EQ(f3.inv(2), 2u);
  const auto a = f9.generator();
  EXPECT_EQ(f9.mul(a, a), 2u);  // a^2 = -1
  EXPECT_EQ(format_elem(f9, f9.mul(a, a)), "2");
}

TEST(Field, ProductsMatchNaiveReduction) {
  std::mt19937_64 rng(1);
  for (auto [p, n] : {std::pair{2ull, 4u}, {2, 13}, {2, 40}, {3, 2}, {3, 5}, {3, 11}, {5, 3}, {257, 2}}) {
    const Field f = Field::make(p, n);
    std::uniform_int_distribution<Field::Code> pick(0, f.order() - 1);
    for (int i = 0; i < 500; ++i) {
      const Field::Code a = pick(rng), b = pick(rng);
      ASSERT_EQ(f.digits(f.mul(a, b)), naive_mul(f.digits(a), f.digits(b), f.modulus(), p)) << f.name();
    }
  }
}

TEST(Field, AxiomsOnRandomElements) {
  std::mt19937_64 rng(2);
  for (auto [p, n] : {std::pair{2ull, 1u}, {7, 1}, {9223372036854775783ull, 1}, {2, 8}, {3, 2}, {3, 10}, {3, 11}, {5, 4}}) {
    const Field f = Field::make(p, n);
    std::uniform_int_distribution<Field::Code> pick(0, f.order() - 1);
    for (int i = 0; i < 300; ++i) {
      const Field::Code a = pick(rng), b = pick(rng), c = pick(rng);
      ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))) << f.name();
      ASSERT_EQ(f.add(a, f.neg(a)), 0u);
      ASSERT_EQ(f.sub(f.add(a, b), b), a);
      if (a != 0) {
        ASSERT_EQ(f.mul(a, f.inv(a)), 1u) << f.name() << " " << a;
        ASSERT_EQ(f.pow(a, f.order() - 1), 1u);
      }
      ASSERT_EQ(f.pow(f.pth_root(a), p), a);
    }
  }
}

TEST(Field, DigitsRoundTrip) {
  const Field f = Field::make(5, 3);
  for (Field::Code c = 0; c < f.order(); ++c) ASSERT_EQ(f.from_digits(f.digits(c)), c);
  EXPECT_EQ(f.from_int(-1), 4u);
  EXPECT_EQ(Field::make(7).from_int(-15), 6u);
}

TEST(FqElem, MixedFieldsRejected) {
  const FqElem a(Field::make(3), 1), b(Field::make(5), 1);
  EXPECT_THROW((void)(a + b), std::invalid_argument);
  EXPECT_THROW(FqElem(Field::make(3), 3), std::invalid_argument);
}

TEST(FqElem, Text) {
  const Field f9 = Field::make(3, 2);
  EXPECT_EQ(FqElem(f9, f9.generator()).to_string(), "a");
  EXPECT_EQ(FqElem(f9, 7).to_string(), "2*a+1");
  EXPECT_EQ(parse_elem(f9, "2*a+1"), FqElem(f9, 7));
  EXPECT_EQ(parse_elem(Field::make(7), "-3"), FqElem(Field::make(7), 4));
  EXPECT_EQ(parse_field("GF(9)"), f9);
  EXPECT_EQ(parse_field("GF(3^2)"), f9);
  EXPECT_EQ(parse_field(" GF(2) "), Field::gf2());
  EXPECT_THROW(parse_field("GF(10)"), std::invalid_argument);
  EXPECT_THROW(parse_field("F(3)"), std::invalid_argument);
}
