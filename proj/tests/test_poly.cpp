#include <gtest/gtest.h>

#include <map>
#include <random>

#include "fieldunits/poly.hpp"
#include "fieldunits/text.hpp"
#include "fieldunits/valuation.hpp"

using namespace fieldunits;

namespace {

// All monic polynomials of the given degree.
std::vector<Poly> monics(Field f, unsigned degree) {
  std::vector<Poly> out;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < degree; ++i) count *= f.order();
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<Field::Code> c(degree + 1);
    std::uint64_t r = code;
    for (unsigned i = 0; i < degree; ++i, r /= f.order()) c[i] = r % f.order();
    c[degree] = 1;
    out.emplace_back(f, c);
  }
  return out;
}

// Irreducible iff no monic divisor of degree 1..deg/2.
bool brute_irreducible(const Poly& p) {
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(p.degree()); ++d)
    for (const Poly& g : monics(p.field(), d))
      if ((p % g).is_zero()) return false;
  return p.degree() >= 1;
}

// Factorization by repeatedly dividing out the smallest monic divisor.
std::map<std::string, unsigned> brute_factor(Poly p) {
  std::map<std::string, unsigned> out;
  p = p.monic();
  for (unsigned d = 1; p.degree() >= 1 && d <= static_cast<unsigned>(p.degree()); ++d) {
    for (const Poly& g : monics(p.field(), d)) {
      while (p.degree() >= 1 && (p % g).is_zero()) {
        ++out[g.to_string()];
        p = p / g;
      }
    }
  }
  return out;
}

std::map<std::string, unsigned> as_map(const PolyFactorization& f) {
  std::map<std::string, unsigned> out;
  for (const auto& pf : f.factors) out[pf.poly.to_string()] += pf.multiplicity;
  return out;
}

}  // namespace

TEST(Poly, Arithmetic) {
  const Field f2 = Field::gf2(), f3 = Field::make(3);
  EXPECT_EQ(parse_poly(f2, "(x+1)^2"), parse_poly(f2, "x^2+1"));
  const auto [q, r] = parse_poly(f2, "x^3").divmod(parse_poly(f2, "x+1"));
  EXPECT_EQ(q, parse_poly(f2, "x^2+x+1"));
  EXPECT_EQ(r, parse_poly(f2, "1"));
  EXPECT_EQ(parse_poly(f2, "x^2+x+1").derivative(), parse_poly(f2, "1"));
  EXPECT_EQ(gcd(parse_poly(f2, "x^2+x"), parse_poly(f2, "x")), parse_poly(f2, "x"));
  EXPECT_EQ(gcd(parse_poly(f3, "2*x^2+2*x"), parse_poly(f3, "x^2-1")), parse_poly(f3, "x+1"));
  EXPECT_THROW(gcd(Poly(f3), Poly(f3)), std::domain_error);
  EXPECT_THROW(parse_poly(f3, "x").divmod(Poly(f3)), std::domain_error);
  EXPECT_EQ(parse_poly(f3, "x^3+2").pth_root(), parse_poly(f3, "x+2"));
  EXPECT_THROW(parse_poly(f3, "x^2").pth_root(), std::domain_error);
}

TEST(Poly, TextRoundTrip) {
  const Field f9 = Field::make(3, 2);
  const Poly p = parse_poly(f9, "(a+1)*x^2 + a");
  EXPECT_EQ(p.to_string(), "(a+1)*x^2+a");
  EXPECT_EQ(parse_poly(f9, p.to_string()), p);
  EXPECT_EQ(parse_poly(Field::gf2(), "x^2 x + 1").to_string(), "x^3+1");
  EXPECT_EQ(parse_poly(Field::make(5), "3x - 4").to_string(), "3*x+1");
  EXPECT_EQ(Poly(f9).to_string(), "0");
  EXPECT_THROW(parse_poly(f9, "x^"), ParseError);
  EXPECT_THROW(parse_poly(f9, "y+1"), ParseError);
  EXPECT_THROW(parse_poly(Field::make(3), "a"), ParseError);
  std::mt19937_64 rng(11);
  for (Field f : {Field::make(2, 3), Field::make(7), Field::make(5, 2)}) {
    for (int i = 0; i < 100; ++i) {
      const Poly q = random_poly(f, 8, rng);
      ASSERT_EQ(parse_poly(f, q.to_string()), q) << q.to_string();
    }
  }
}

TEST(Poly, IrreducibilityAgreesWithBruteForce) {
  for (Field f : {Field::make(3), Field::make(2, 2), Field::make(5)})
    for (unsigned d = 1; d <= 4; ++d)
      for (const Poly& p : monics(f, d)) ASSERT_EQ(is_irreducible(p), brute_irreducible(p)) << f.name() << " " << p.to_string();
}

TEST(Poly, KnownFactorExamples) {
  const Field f2 = Field::gf2(), f3 = Field::make(3);
  const auto a = factor_poly(parse_poly(f2, "x^2+x"));
  EXPECT_TRUE(a.unit.is_one());
  EXPECT_EQ(as_map(a), (std::map<std::string, unsigned>{{"x", 1}, {"x+1", 1}}));
  const auto b = factor_poly(parse_poly(f2, "x^5+x+1"));
  EXPECT_EQ(b.factors.at(0).poly, parse_poly(f2, "x^2+x+1"));
  EXPECT_EQ(b.factors.at(1).poly, parse_poly(f2, "x^3+x^2+1"));
  EXPECT_EQ(b.expand(), parse_poly(f2, "x^5+x+1"));
  const auto c = factor_poly(parse_poly(f3, "2*x^2+2*x"));
  EXPECT_EQ(c.unit, FqElem(f3, 2));
  EXPECT_EQ(as_map(c), (std::map<std::string, unsigned>{{"x", 1}, {"x+1", 1}}));
  EXPECT_THROW(factor_poly(Poly(f3)), std::domain_error);
}

TEST(Poly, ExhaustiveFactorizationOverSmallFields) {
  for (auto [f, max_degree] : {std::pair{Field::make(3), 6u}, {Field::make(2, 2), 5u}, {Field::make(5), 4u}}) {
    for (unsigned d = 1; d <= max_degree; ++d) {
      for (const Poly& p : monics(f, d)) {
        const auto fac = factor_poly(p);
        ASSERT_EQ(as_map(fac), brute_factor(p)) << f.name() << " " << p.to_string();
        ASSERT_EQ(fac.expand(), p);
      }
    }
  }
}

TEST(Poly, FieldPolynomialSplitsCompletely) {
  // x^q - x is the product of all x - c, c in F_q.
  for (Field f : {Field::make(3, 2), Field::make(2, 3), Field::make(7), Field::make(2, 4)}) {
    const Poly p = Poly::monomial(f, 1, f.order()) - Poly::x(f);
    const auto fac = factor_poly(p);
    ASSERT_EQ(fac.factors.size(), f.order());
    for (const auto& pf : fac.factors) {
      EXPECT_EQ(pf.poly.degree(), 1);
      EXPECT_EQ(pf.multiplicity, 1u);
    }
  }
}

TEST(Poly, RandomFactorizationsOverExtensionFields) {
  std::mt19937_64 rng(12);
  for (Field f : {Field::make(3, 2), Field::make(2, 3), Field::make(5, 2), Field::make(2, 8), Field::make(3, 11), Field::make(101)}) {
    for (int i = 0; i < 25; ++i) {
      const Poly a = random_poly(f, 12, rng), b = random_poly(f, 5, rng);
      if (a.is_zero() || b.is_zero()) continue;
      const Poly p = a * b.pow(3);
      const auto fac = factor_poly(p, static_cast<std::uint64_t>(i));
      ASSERT_EQ(fac.expand(), p) << f.name() << " " << p.to_string();
      for (std::size_t k = 0; k < fac.factors.size(); ++k) {
        ASSERT_TRUE(fac.factors[k].poly.is_monic());
        ASSERT_TRUE(is_irreducible(fac.factors[k].poly));
        if (k) ASSERT_LT(fac.factors[k - 1].poly, fac.factors[k].poly);
      }
    }
  }
}

TEST(Poly, SquarefreeDecompositionInCharacteristicP) {
  const Field f3 = Field::make(3);
  // (x+1)^3 (x+2)^2 x: derivative of the cube vanishes, forcing the p-th root path.
  const Poly p = parse_poly(f3, "(x+1)^3*(x+2)^2*x");
  const auto parts = squarefree_decomposition(p);
  Poly product = Poly::constant(FqElem(f3, 1));
  for (const auto& s : parts) product *= s.poly.pow(s.multiplicity);
  EXPECT_EQ(product, p);
  for (const auto& s : parts) EXPECT_TRUE(gcd(s.poly, s.poly.derivative()).is_one());
}

TEST(Poly, VariableMismatch) {
  const Field f = Field::make(3);
  EXPECT_THROW(parse_poly(f, "x+1") + parse_poly(f, "t+1", "t"), std::invalid_argument);
  EXPECT_EQ(parse_poly(f, "x+1") + parse_poly(f, "1", "t"), parse_poly(f, "x+2"));
}
