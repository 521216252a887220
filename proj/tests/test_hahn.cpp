#include <gtest/gtest.h>

#include <map>
#include <random>

#include "fieldunits/hahn.hpp"
#include "fieldunits/text.hpp"

using namespace fieldunits;

namespace {

const Field F2 = Field::gf2();
const Field F3 = Field::make(3);
const GroupDescriptor Z = GroupDescriptor::integers();
const GroupDescriptor Z2 = GroupDescriptor::lex(2);
const GroupDescriptor D = GroupDescriptor::dyadic();

HahnSeries hs(Field f, GroupDescriptor g, const char* text) { return parse_hahn(f, g, text); }

using Naive = std::map<GroupElem, Field::Code>;

Naive to_map(const HahnSeries& a) {
  Naive m;
  for (const auto& t : a.terms()) m[t.exponent] = t.coeff;
  return m;
}

// Schoolbook product of exact series over all pairs of terms.
Naive naive_mul(const HahnSeries& a, const HahnSeries& b) {
  const Field f = a.field();
  Naive m;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) {
      auto [it, fresh] = m.try_emplace(s.exponent + t.exponent, 0);
      it->second = f.add(it->second, f.mul(s.coeff, t.coeff));
    }
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  return m;
}

Naive naive_add(const HahnSeries& a, const HahnSeries& b) {
  const Field f = a.field();
  Naive m = to_map(a);
  for (const auto& t : b.terms()) {
    auto [it, fresh] = m.try_emplace(t.exponent, 0);
    it->second = f.add(it->second, t.coeff);
  }
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  return m;
}

}  // namespace

TEST(Hahn, KnownInverseExamples) {
  EXPECT_EQ(hs_inv(hs(F2, Z, "1+x"), 4).to_string(), "1+x^(1)+x^(2)+x^(3)+O(x^(4))");
  EXPECT_EQ(hs_inv(hs(F3, Z, "1+2*x"), 3).to_string(), "1+x^(1)+x^(2)+O(x^(3))");
  EXPECT_EQ(hs_inv(hs(F2, Z, "x^2"), 1), hs(F2, Z, "x^(-2)"));
  EXPECT_TRUE(hs_inv(hs(F2, Z, "x^2"), 1).is_exact());
  EXPECT_THROW(hs_inv(HahnSeries(F2, Z), 3), std::domain_error);
  EXPECT_THROW(hs_inv(hs(F2, Z, "O(x^2)"), 3), std::domain_error);
  EXPECT_THROW(hs_inv(hs(F2, Z, "1+x"), 0), std::invalid_argument);
}

TEST(Hahn, InverseTimesSeriesIsOneBelowPrecision) {
  std::mt19937_64 rng(41);
  for (Field f : {F2, F3, Field::make(2, 2)}) {
    for (GroupDescriptor g : {Z, Z2, D}) {
      for (int i = 0; i < 60; ++i) {
        const HahnSeries a = random_hahn(f, g, rng);
        const HahnSeries b = hs_inv(a, 6);
        const HahnSeries prod = a * b;
        const HahnSeries one = HahnSeries::constant(f, g, 1);
        if (b.is_exact()) {
          ASSERT_EQ(prod, one) << a.to_string();
        } else {
          ASSERT_GT(*prod.precision(), GroupElem::zero(g)) << a.to_string();
          ASSERT_EQ(prod, one.truncated(*prod.precision())) << a.to_string() << " -> " << b.to_string();
        }
      }
    }
  }
}

TEST(Hahn, InversePrecisionGrowsWithTerms) {
  const HahnSeries a = hs(F2, Z, "x^(-1)+1+x^(3)");
  EXPECT_EQ(*hs_inv(a, 2).precision(), GroupElem(1 + 2 * 1));
  EXPECT_EQ(*hs_inv(a, 5).precision(), GroupElem(1 + 5 * 1));
  // A series known only below O(x^2) cannot yield more.
  const HahnSeries b = hs(F2, Z, "1+x+O(x^2)");
  EXPECT_EQ(*hs_inv(b, 10).precision(), GroupElem(2));
}

TEST(Hahn, ArithmeticMatchesNaiveOracle) {
  std::mt19937_64 rng(42);
  for (Field f : {F2, F3, Field::make(3, 2)}) {
    for (GroupDescriptor g : {Z, Z2, D}) {
      for (int i = 0; i < 100; ++i) {
        const HahnSeries a = random_hahn(f, g, rng, 6), b = random_hahn(f, g, rng, 6);
        ASSERT_EQ(to_map(a * b), naive_mul(a, b));
        ASSERT_EQ(to_map(a + b), naive_add(a, b));
        ASSERT_TRUE((a - a).is_exact_zero());
      }
    }
  }
}

TEST(Hahn, PrecisionSemantics) {
  const HahnSeries a = hs(F2, Z, "1+x+O(x^3)");
  const HahnSeries b = hs(F2, Z, "x^2+O(x^2)");
  EXPECT_EQ((a + b).to_string(), "1+x^(1)+O(x^(2))");
  // (1 + x + O(x^3)) * (x + O(x^4)) = x + x^2 + O(x^4).
  EXPECT_EQ((a * hs(F2, Z, "x+O(x^4)")).to_string(), "x^(1)+x^(2)+O(x^(4))");
  EXPECT_EQ((a * hs(F2, Z, "x^5")).to_string(), "x^(5)+x^(6)+O(x^(8))");
  EXPECT_EQ(hs(F2, Z, "1+x+x^2+x^3").truncated(GroupElem(2)), hs(F2, Z, "1+x+O(x^2)"));
  EXPECT_TRUE(hs(F2, Z, "x^3+O(x^2)").has_no_terms());
  EXPECT_FALSE(hs(F2, Z, "O(x^2)").is_exact_zero());
}

TEST(Hahn, Text) {
  EXPECT_EQ(hs(F2, Z2, "x^(1,-2)+x^(0,5)").to_string(), "x^(0,5)+x^(1,-2)");
  EXPECT_EQ(hs(F2, D, "(x^(1/2)+1)*(x^(1/2)+1)").to_string(), "1+x^(1)");
  EXPECT_EQ(hs(Field::make(2, 2), Z, "a*x+1").to_string(), "1+a*x^(1)");
  EXPECT_EQ(HahnSeries(F2, Z).to_string(), "0");
  EXPECT_EQ(HahnSeries::big_o(F2, GroupElem(3)).to_string(), "O(x^(3))");
  EXPECT_THROW(hs(F2, Z2, "x"), ParseError);
  EXPECT_THROW(hs(F2, Z, "x^(1/2)"), ParseError);
  std::mt19937_64 rng(43);
  for (Field f : {F2, F3, Field::make(2, 3)})
    for (GroupDescriptor g : {Z, Z2, D})
      for (int i = 0; i < 50; ++i) {
        const HahnSeries a = random_hahn(f, g, rng, 5);
        ASSERT_EQ(hs(f, g, a.to_string().c_str()), a) << a.to_string();
      }
}

TEST(Hahn, ValuationAndSplit) {
  EXPECT_EQ(hs_valuation(hs(F2, Z, "x^2+x^3")), GroupElem(2));
  EXPECT_EQ(hs_valuation(hs(F2, Z2, "x^(1,-2)+x^(0,5)")), GroupElem(LexVector{{0, 5}}));
  EXPECT_EQ(hs_valuation(hs(F2, D, "x^(3/4)+x")), GroupElem(Dyadic(3, 2)));
  EXPECT_THROW(hs_valuation(HahnSeries(F2, Z)), std::domain_error);

  const auto [g, u] = hs_unit_split(hs(F2, Z, "x^2+x^3"));
  EXPECT_EQ(g, GroupElem(2));
  EXPECT_EQ(u, hs(F2, Z, "1+x"));
  const auto [h, w] = hs_unit_split(hs(F3, Z2, "2*x^(0,1)+x^(1,0)"));
  EXPECT_EQ(h, GroupElem(LexVector{{0, 1}}));
  EXPECT_EQ(w, hs(F3, Z2, "2+x^(1,-1)"));

  std::mt19937_64 rng(44);
  for (GroupDescriptor grp : {Z, Z2, D})
    for (int i = 0; i < 100; ++i) {
      const HahnSeries a = random_hahn(F3, grp, rng);
      const auto [v, unit] = hs_unit_split(a);
      ASSERT_EQ(hs_section(F3, v) * unit, a);
      ASSERT_TRUE(hs_valuation(unit).is_zero());
    }
}

TEST(Hahn, ValuationAxiomsHold) {
  for (GroupDescriptor g : {Z, Z2, D}) EXPECT_TRUE(check_valuation_axioms(hahn_probe(F3, g), 500, 5).passed());
}

TEST(Hahn, MixedGroupsAreRejected) {
  EXPECT_THROW(hs(F2, Z, "x") + hs(F2, D, "x"), std::invalid_argument);
  EXPECT_THROW(hs(F2, Z, "x") * hs(F3, Z, "x"), std::invalid_argument);
}
