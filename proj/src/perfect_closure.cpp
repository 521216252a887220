#include "fieldunits/perfect_closure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fieldunits/expr.hpp"
#include "fieldunits/text.hpp"

namespace fieldunits {

namespace {

// P(s) -> P(s^(2^k)), i.e. the same element written at k more levels.
Gf2Poly lift(Gf2Poly p, unsigned k) {
  for (unsigned i = 0; i < k; ++i) p = p.square();
  return p;
}

std::string format_exponent(const Dyadic& e) {
  if (e == Dyadic(1)) return "t";
  if (e.is_integer()) return "t^" + e.to_string();
  return "t^(" + e.to_string() + ")";
}

bool is_monomial(const Gf2Poly& p) { return p.popcount() == 1; }

}  // namespace

DyadicPoly::DyadicPoly(unsigned level, Gf2Poly poly) : level_(level), poly_(std::move(poly)) {
  if (poly_.is_zero()) level_ = 0;
  while (level_ > 0 && poly_.is_square()) {
    poly_ = poly_.sqrt();
    --level_;
  }
}

DyadicPoly DyadicPoly::from_exponents(const std::vector<Dyadic>& exponents) {
  unsigned level = 0;
  for (const auto& e : exponents) {
    if (e < Dyadic(0)) throw std::invalid_argument("DyadicPoly: negative exponent " + e.to_string());
    level = std::max(level, e.exponent());
  }
  Gf2Poly p;
  for (const auto& e : exponents) p += Gf2Poly::monomial(static_cast<std::size_t>(e.at_level(level)));
  return DyadicPoly(level, std::move(p));
}

std::vector<Dyadic> DyadicPoly::exponents() const {
  std::vector<Dyadic> out;
  for (long i = 0; i <= poly_.degree(); ++i)
    if (poly_.coeff(static_cast<std::size_t>(i))) out.emplace_back(i, level_);
  return out;
}

Gf2Poly DyadicPoly::at_level(unsigned level) const {
  if (level < level_) throw std::invalid_argument("DyadicPoly::at_level below the stored level");
  return lift(poly_, level - level_);
}

DyadicPoly DyadicPoly::operator+(const DyadicPoly& o) const {
  const unsigned k = std::max(level_, o.level_);
  return DyadicPoly(k, at_level(k) + o.at_level(k));
}

DyadicPoly DyadicPoly::operator*(const DyadicPoly& o) const {
  const unsigned k = std::max(level_, o.level_);
  return DyadicPoly(k, at_level(k) * o.at_level(k));
}

std::string DyadicPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  auto exps = exponents();
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
    if (!out.empty()) out += "+";
    out += *it == Dyadic(0) ? "1" : format_exponent(*it);
  }
  return out;
}

DyadicRatFunc::DyadicRatFunc(unsigned level, Gf2Poly num, Gf2Poly den)
    : level_(level), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("DyadicRatFunc: zero denominator");
  normalize();
}

void DyadicRatFunc::normalize() {
  if (num_.is_zero()) {
    level_ = 0;
    den_ = Gf2Poly::one();
    return;
  }
  const Gf2Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  // With num and den coprime, the element lies one level down exactly when
  // both are squares.
  while (level_ > 0 && num_.is_square() && den_.is_square()) {
    num_ = num_.sqrt();
    den_ = den_.sqrt();
    --level_;
  }
}

DyadicRatFunc DyadicRatFunc::operator+(const DyadicRatFunc& o) const {
  const unsigned k = std::max(level_, o.level_);
  const Gf2Poly an = lift(num_, k - level_), ad = lift(den_, k - level_);
  const Gf2Poly bn = lift(o.num_, k - o.level_), bd = lift(o.den_, k - o.level_);
  return DyadicRatFunc(k, an * bd + bn * ad, ad * bd);
}

DyadicRatFunc DyadicRatFunc::operator*(const DyadicRatFunc& o) const {
  const unsigned k = std::max(level_, o.level_);
  return DyadicRatFunc(k, lift(num_, k - level_) * lift(o.num_, k - o.level_),
                       lift(den_, k - level_) * lift(o.den_, k - o.level_));
}

DyadicRatFunc DyadicRatFunc::inv() const {
  if (is_zero()) throw std::domain_error("DyadicRatFunc: inverse of zero");
  return DyadicRatFunc(level_, den_, num_);
}

DyadicRatFunc DyadicRatFunc::operator/(const DyadicRatFunc& o) const { return *this * o.inv(); }

DyadicRatFunc DyadicRatFunc::pow(std::int64_t e) const {
  if (e < 0) return inv().pow(-e);
  const auto n = static_cast<std::uint64_t>(e);
  return DyadicRatFunc(level_, num_.pow(n), den_.pow(n));
}

std::string DyadicRatFunc::to_string() const {
  const DyadicPoly n = numerator(), d = denominator();
  if (d.poly().is_one()) return n.to_string();
  auto part = [](const DyadicPoly& p) {
    return is_monomial(p.poly()) ? p.to_string() : "(" + p.to_string() + ")";
  };
  return part(n) + "/" + part(d);
}

DyadicRatFunc frobenius(const DyadicRatFunc& q) {
  if (q.level() == 0) return DyadicRatFunc(0, q.num().square(), q.den().square());
  return DyadicRatFunc(q.level() - 1, q.num(), q.den());
}

DyadicRatFunc frobenius_inv(const DyadicRatFunc& q) {
  if (q.is_zero()) return q;
  return DyadicRatFunc(q.level() + 1, q.num(), q.den());
}

unsigned pc_level(const DyadicRatFunc& q) {
  if (q.is_zero()) throw std::domain_error("pc_level: zero has no level");
  return q.level();
}

PCDecomposition::PCDecomposition(std::vector<PCFactor> factors) : factors_(std::move(factors)) {
  const Field f2 = Field::gf2();
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    if (!(f.poly.field() == f2)) throw std::invalid_argument("PCDecomposition: factor over " + f.poly.field().name());
    if (f.exponent == Dyadic(0)) throw std::invalid_argument("PCDecomposition: zero exponent for " + f.poly.to_string());
    if (f.poly.degree() < 1 || !is_irreducible(f.poly.to_gf2()))
      throw std::invalid_argument("PCDecomposition: " + f.poly.to_string() + " is not irreducible");
    if (i > 0 && !(factors_[i - 1].poly < f.poly))
      throw std::invalid_argument("PCDecomposition: factors not in canonical order");
  }
}

PCDecomposition PCDecomposition::combine(const PCDecomposition& o) const {
  std::vector<PCFactor> out;
  std::size_t i = 0, j = 0;
  while (i < factors_.size() || j < o.factors_.size()) {
    if (j == o.factors_.size() || (i < factors_.size() && factors_[i].poly < o.factors_[j].poly)) {
      out.push_back(factors_[i++]);
    } else if (i == factors_.size() || o.factors_[j].poly < factors_[i].poly) {
      out.push_back(o.factors_[j++]);
    } else {
      const Dyadic e = factors_[i].exponent + o.factors_[j].exponent;
      if (!(e == Dyadic(0))) out.push_back({factors_[i].poly, e});
      ++i;
      ++j;
    }
  }
  return PCDecomposition(std::move(out));
}

PCDecomposition pc_decompose(const DyadicRatFunc& q, std::uint64_t seed) {
  const unsigned k = pc_level(q);
  // q^(2^k) = num(t)/den(t): the same polynomials read in t.
  std::map<Gf2Poly, std::int64_t> exps;
  for (const auto& f : factor(q.num(), seed)) exps[f.poly] += f.multiplicity;
  for (const auto& f : factor(q.den(), seed)) exps[f.poly] -= f.multiplicity;
  std::vector<PCFactor> out;
  for (const auto& [p, e] : exps)
    if (e != 0) out.push_back({Poly::from_gf2(p, "t"), Dyadic(e, k)});
  return PCDecomposition(std::move(out));
}

DyadicRatFunc pc_recompose(const PCDecomposition& d) {
  unsigned k = 0;
  for (const auto& f : d.factors()) k = std::max(k, f.exponent.exponent());
  Gf2Poly num = Gf2Poly::one(), den = Gf2Poly::one();
  for (const auto& f : d.factors()) {
    const std::int64_t m = f.exponent.at_level(k);
    const Gf2Poly p = f.poly.to_gf2().pow(static_cast<std::uint64_t>(m < 0 ? -m : m));
    (m < 0 ? den : num) *= p;
  }
  // The integer-exponent product read at level k is its 2^k-th root.
  return DyadicRatFunc(k, std::move(num), std::move(den));
}

namespace {

struct PCAtoms {
  DyadicRatFunc number(std::string_view digits) const {
    return (digits.back() - '0') % 2 == 1 ? DyadicRatFunc::one() : DyadicRatFunc();
  }
  bool is_function(const std::string&) const { return false; }
  DyadicRatFunc call(const std::string& id, const DyadicRatFunc&) const { throw ParseError("unknown function " + id); }
  DyadicRatFunc name(const std::string& id) const {
    if (id != "t") throw ParseError("unknown symbol '" + id + "' (the variable is t)");
    return DyadicRatFunc(0, Gf2Poly::x(), Gf2Poly::one());
  }
  DyadicRatFunc power_of_name(const std::string& id, const std::string& e) const { return pow(name(id), e); }
  DyadicRatFunc pow(const DyadicRatFunc& b, const std::string& raw) const {
    Dyadic e;
    try {
      e = parse_dyadic(raw);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(ex.what());
    }
    if (b.is_zero() && e < Dyadic(0)) throw ParseError("negative power of zero");
    DyadicRatFunc r = b.pow(e.numerator());
    for (unsigned i = 0; i < e.exponent(); ++i) r = frobenius_inv(r);
    return r;
  }
  DyadicRatFunc add(const DyadicRatFunc& a, const DyadicRatFunc& b) const { return a + b; }
  DyadicRatFunc sub(const DyadicRatFunc& a, const DyadicRatFunc& b) const { return a + b; }
  DyadicRatFunc neg(const DyadicRatFunc& a) const { return a; }
  DyadicRatFunc mul(const DyadicRatFunc& a, const DyadicRatFunc& b) const { return a * b; }
  DyadicRatFunc div(const DyadicRatFunc& a, const DyadicRatFunc& b) const {
    if (b.is_zero()) throw ParseError("division by zero");
    return a / b;
  }
};

Gf2Poly random_poly(std::mt19937_64& rng, unsigned max_degree, bool nonzero) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::bernoulli_distribution bit(0.5);
  for (;;) {
    const unsigned d = deg(rng);
    Gf2Poly p;
    for (unsigned i = 0; i <= d; ++i)
      if (bit(rng)) p.set_coeff(i, true);
    if (!nonzero || !p.is_zero()) return p;
  }
}

}  // namespace

DyadicRatFunc parse_dyadic_ratfunc(std::string_view text) {
  PCAtoms atoms;
  return read_expression<DyadicRatFunc>(text, atoms);
}

HahnSeries to_hahn(const DyadicPoly& p) {
  std::vector<HahnSeries::Term> terms;
  for (const auto& e : p.exponents()) terms.push_back({GroupElem(e), 1});
  return HahnSeries(Field::gf2(), GroupDescriptor::dyadic(), std::move(terms));
}

DyadicRatFunc random_dyadic_ratfunc(std::mt19937_64& rng, unsigned max_level, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> level(0, max_level);
  const unsigned k = level(rng);
  return DyadicRatFunc(k, random_poly(rng, max_degree, true), random_poly(rng, max_degree, true));
}

DyadicPoly random_dyadic_poly(std::mt19937_64& rng, unsigned max_level, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> level(0, max_level);
  const unsigned k = level(rng);
  return DyadicPoly(k, random_poly(rng, max_degree, true));
}

}  // namespace fieldunits
