#include <gtest/gtest.h>

#include <random>

#include "fieldunits/lattice.hpp"
#include "fieldunits/ratfunc.hpp"
#include "fieldunits/text.hpp"
#include "fieldunits/valuation.hpp"

using namespace fieldunits;

namespace {

const Field F2 = Field::gf2();
const Field F3 = Field::make(3);

RatFunc rf(Field f, const char* text) { return parse_ratfunc(f, text); }
Poly poly(Field f, const char* text) { return parse_poly(f, text); }

// Rank over Q with exact rational Gaussian elimination.
std::size_t gauss_rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t r = rank;
    while (r < a.size() && a[r][c] == 0) ++r;
    if (r == a.size()) continue;
    std::swap(a[r], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      const Rational f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(RatFunc, Normalization) {
  EXPECT_EQ(rf(F2, "(x^2+x)/x"), rf(F2, "x+1"));
  EXPECT_EQ(rf(F3, "(2*x+2)/(2*x)").to_string(), "(x+1)/x");
  EXPECT_EQ(rf(F2, "x/(x+1)").inv(), rf(F2, "(x+1)/x"));
  EXPECT_EQ(rf(F3, "(2*x+2)/(2*x)").den(), poly(F3, "x"));
  EXPECT_TRUE(rf(F3, "0/(x+1)").is_zero());
  EXPECT_EQ(rf(F3, "0/(x+1)").den(), poly(F3, "1"));
  EXPECT_THROW(RatFunc(poly(F3, "x"), Poly(F3)), std::domain_error);
  EXPECT_THROW(rf(F3, "0").inv(), std::domain_error);
  EXPECT_THROW(rf(F3, "1/(x-x)"), std::domain_error);
}

TEST(RatFunc, FieldOperations) {
  std::mt19937_64 rng(21);
  for (Field f : {F2, F3, Field::make(3, 2)}) {
    for (int i = 0; i < 100; ++i) {
      const RatFunc a = random_ratfunc(f, 5, rng), b = random_ratfunc(f, 5, rng), c = random_ratfunc(f, 5, rng);
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ((a / b) * b, a);
      ASSERT_EQ(a - a, RatFunc::zero(f));
      ASSERT_EQ(a.pow(3) * a.pow(-3), RatFunc::one(f));
      ASSERT_EQ(rf(f, a.to_string().c_str()), a) << a.to_string();
    }
  }
}

TEST(RatFunc, Text) {
  EXPECT_EQ(rf(F2, "1/x^2").to_string(), "1/x^2");
  EXPECT_EQ(rf(F2, "x^(-2)").to_string(), "1/x^2");
  EXPECT_EQ(rf(F2, "(x^2+x+1)/x").to_string(), "(x^2+x+1)/x");
  EXPECT_EQ(rf(F2, "x/(x+1)").to_string(), "x/(x+1)");
  EXPECT_THROW(rf(F2, "x/"), ParseError);
}

TEST(Decompose, KnownValues) {
  const auto a = decompose(rf(F2, "x/(x+1)"));
  EXPECT_TRUE(a.constant().is_one());
  EXPECT_EQ(a.factors(), (std::vector<UnitFactor>{{poly(F2, "x"), 1}, {poly(F2, "x+1"), -1}}));
  const auto b = decompose(rf(F3, "2*x^2+2*x"));
  EXPECT_EQ(b.constant(), FqElem(F3, 2));
  EXPECT_EQ(b.factors(), (std::vector<UnitFactor>{{poly(F3, "x"), 1}, {poly(F3, "x+1"), 1}}));
  // x^5+x+1 = (x^2+x+1)(x^3+x^2+1), checked by expansion.
  ASSERT_EQ(poly(F2, "x^2+x+1") * poly(F2, "x^3+x^2+1"), poly(F2, "x^5+x+1"));
  const auto c = decompose(rf(F2, "(x^5+x+1)/x"));
  EXPECT_EQ(c.factors(), (std::vector<UnitFactor>{{poly(F2, "x"), -1}, {poly(F2, "x^2+x+1"), 1}, {poly(F2, "x^3+x^2+1"), 1}}));
  EXPECT_THROW(decompose(RatFunc::zero(F2)), std::domain_error);
}

TEST(Recompose, KnownValues) {
  EXPECT_EQ(recompose(UnitDecomposition(FqElem(F2, 1), {})), RatFunc::one(F2));
  EXPECT_EQ(recompose(UnitDecomposition(FqElem(F2, 1), {{poly(F2, "x"), -2}})), rf(F2, "1/x^2"));
  EXPECT_EQ(recompose(UnitDecomposition(FqElem(F2, 1), {{poly(F2, "x"), -1}, {poly(F2, "x^2+x+1"), 1}})),
            rf(F2, "(x^2+x+1)/x"));
}

TEST(Decompose, InvariantsAreEnforced) {
  const FqElem one(F2, 1);
  EXPECT_THROW(UnitDecomposition(FqElem(F2, 0), {}), std::invalid_argument);
  EXPECT_THROW(UnitDecomposition(one, {{poly(F2, "x^2+1"), 1}}), std::invalid_argument);
  EXPECT_THROW(UnitDecomposition(one, {{poly(F2, "x"), 0}}), std::invalid_argument);
  EXPECT_THROW(UnitDecomposition(one, {{poly(F2, "x+1"), 1}, {poly(F2, "x"), 1}}), std::invalid_argument);
  EXPECT_THROW(UnitDecomposition(FqElem(F3, 1), {{poly(F3, "2*x+1"), 1}}), std::invalid_argument);
}

TEST(Decompose, RoundTripAndHomomorphism) {
  std::mt19937_64 rng(22);
  for (Field f : {F2, F3, Field::make(3, 2), Field::make(2, 2), Field::make(7)}) {
    for (int i = 0; i < 40; ++i) {
      const RatFunc a = random_ratfunc(f, 10, rng), b = random_ratfunc(f, 10, rng);
      ASSERT_EQ(recompose(decompose(a)), a);
      ASSERT_EQ(decompose(a * b), decompose(a).combine(decompose(b)));
      ASSERT_EQ(decompose(a.inv()), decompose(a).combine(decompose(a.inv())).combine(decompose(a.inv())));
    }
  }
}

TEST(ValuationAt, KnownValues) {
  EXPECT_EQ(valuation_at(rf(F2, "x^3/(x+1)"), poly(F2, "x")), 3);
  EXPECT_EQ(valuation_at(rf(F2, "x^3/(x+1)"), poly(F2, "x+1")), -1);
  EXPECT_EQ(valuation_at(rf(F2, "x^5+x+1"), poly(F2, "x^2+x+1")), 1);
  EXPECT_EQ(valuation_at(rf(F2, "x^3/(x+1)"), poly(F2, "x^2+x+1")), 0);
  EXPECT_THROW(valuation_at(RatFunc::zero(F2), poly(F2, "x")), std::domain_error);
  EXPECT_THROW(valuation_at(rf(F2, "x"), poly(F2, "x^2+1")), std::invalid_argument);
  EXPECT_THROW(valuation_at(rf(F3, "x"), poly(F3, "2*x")), std::invalid_argument);
}

TEST(ValuationAt, MatchesDecomposition) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const RatFunc q = random_ratfunc(F3, 12, rng);
    for (const auto& f : decompose(q).factors()) ASSERT_EQ(valuation_at(q, f.poly), f.exponent);
  }
}

TEST(Rank, KnownValues) {
  EXPECT_EQ(multiplicative_rank({rf(F2, "x"), rf(F2, "x+1"), rf(F2, "x^2+x")}), 2u);
  EXPECT_EQ(multiplicative_rank({rf(F2, "x^2")}), 1u);
  EXPECT_EQ(multiplicative_rank({rf(F3, "2")}), 0u);
  EXPECT_EQ(multiplicative_rank({}), 0u);
  EXPECT_THROW(multiplicative_rank({RatFunc::zero(F3)}), std::domain_error);
  const auto m = exponent_matrix({rf(F2, "x"), rf(F2, "x+1"), rf(F2, "x^2+x")});
  EXPECT_EQ(m.columns, (std::vector<Poly>{poly(F2, "x"), poly(F2, "x+1")}));
  EXPECT_EQ(m.rows, (IntMatrix{{1, 0}, {0, 1}, {1, 1}}));
}

TEST(Lattice, IntegerRankMatchesGaussianElimination) {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<int> entry(-5, 5), size(1, 12);
  for (int i = 0; i < 300; ++i) {
    const int rows = size(rng), cols = size(rng);
    IntMatrix m(rows, std::vector<std::int64_t>(cols));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    if (rows > 2) m[0] = m[1];
    ASSERT_EQ(integer_rank(m), gauss_rank(m));
  }
}

TEST(Lattice, LargeEntriesDoNotOverflow) {
  const std::int64_t big = std::int64_t{1} << 62;
  EXPECT_EQ(integer_rank({{big, big - 1}, {big - 1, big - 2}}), 2u);
  EXPECT_EQ(integer_rank({{big, 2}, {big / 2, 1}}), 1u);
  EXPECT_EQ(integer_rank({}), 0u);
  EXPECT_EQ(integer_rank({{0, 0}, {0, 0}}), 0u);
}
