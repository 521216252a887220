#include "fieldunits/ratfunc.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fieldunits/integer.hpp"
#include "fieldunits/text.hpp"

namespace fieldunits {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  const std::string var = num_.is_constant() ? den_.variable() : num_.variable();
  if (num_.is_zero()) {
    den_ = Poly::constant(FqElem(den_.field(), 1), var);
    num_ = num_.with_variable(var);
    return;
  }
  const Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const FqElem lead_inv = den_.leading().inv();
  num_ = num_.scaled(lead_inv).with_variable(var);
  den_ = den_.scaled(lead_inv).with_variable(var);
}

RatFunc::RatFunc(Poly num) : RatFunc(num, Poly::constant(FqElem(num.field(), 1), num.variable())) {}

RatFunc RatFunc::constant(const FqElem& c, std::string variable) {
  return RatFunc(Poly::constant(c, std::move(variable)));
}
RatFunc RatFunc::zero(Field field, std::string variable) { return constant(FqElem(field, 0), std::move(variable)); }
RatFunc RatFunc::one(Field field, std::string variable) { return constant(FqElem(field, 1), std::move(variable)); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }
RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  // Cross-cancel first to keep the operands small.
  const Poly g1 = gcd(num_.is_zero() ? den_ : num_, o.den_);
  const Poly g2 = gcd(o.num_.is_zero() ? o.den_ : o.num_, den_);
  return RatFunc((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw std::domain_error("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::pow(std::int64_t e) const {
  if (e < 0) return inv().pow(-e);
  // Reduced form is preserved by powers.
  RatFunc r = *this;
  r.num_ = num_.pow(static_cast<std::uint64_t>(e));
  r.den_ = den_.pow(static_cast<std::uint64_t>(e));
  return r;
}

namespace {
std::string wrap(const Poly& p) {
  std::size_t terms = 0;
  for (auto c : p.coeffs()) terms += c != 0;
  return terms > 1 ? "(" + p.to_string() + ")" : p.to_string();
}
}  // namespace

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return wrap(num_) + "/" + wrap(den_);
}

namespace {

struct RatFuncAtoms {
  Field field;
  std::string variable;

  RatFunc number(std::string_view digits) const {
    const std::uint64_t p = field.characteristic();
    std::uint64_t r = 0;
    for (char ch : digits) r = (mulmod(r, 10, p) + static_cast<std::uint64_t>(ch - '0')) % p;
    return RatFunc::constant(FqElem(field, r), variable);
  }
  bool is_function(const std::string&) const { return false; }
  RatFunc call(const std::string& id, const RatFunc&) const { throw ParseError("unknown function " + id); }
  RatFunc name(const std::string& id) const {
    if (id == variable) return RatFunc(Poly::x(field, variable));
    if (id == "a" && !field.is_prime_field()) return RatFunc::constant(FqElem(field, field.generator()), variable);
    throw ParseError("unknown symbol '" + id + "' (field " + field.name() + ", variable " + variable + ")");
  }
  RatFunc power_of_name(const std::string& id, const std::string& e) const { return pow(name(id), e); }
  RatFunc pow(const RatFunc& b, const std::string& e) const { return b.pow(parse_integer(e)); }
  RatFunc add(const RatFunc& a, const RatFunc& b) const { return a + b; }
  RatFunc sub(const RatFunc& a, const RatFunc& b) const { return a - b; }
  RatFunc neg(const RatFunc& a) const { return -a; }
  RatFunc mul(const RatFunc& a, const RatFunc& b) const { return a * b; }
  RatFunc div(const RatFunc& a, const RatFunc& b) const { return a / b; }
};

}  // namespace

RatFunc parse_ratfunc(Field field, std::string_view text, const std::string& variable) {
  RatFuncAtoms atoms{field, variable};
  return read_expression<RatFunc>(text, atoms);
}

UnitDecomposition::UnitDecomposition(FqElem constant, std::vector<UnitFactor> factors)
    : constant_(constant), factors_(std::move(factors)) {
  if (constant_.is_zero()) throw std::invalid_argument("UnitDecomposition: zero constant");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    if (!(f.poly.field() == constant_.field())) throw std::invalid_argument("UnitDecomposition: mixed fields");
    if (f.exponent == 0) throw std::invalid_argument("UnitDecomposition: zero exponent");
    if (f.poly.degree() < 1 || !f.poly.is_monic() || !is_irreducible(f.poly))
      throw std::invalid_argument("UnitDecomposition: " + f.poly.to_string() + " is not monic irreducible");
    if (i > 0 && !(factors_[i - 1].poly < f.poly))
      throw std::invalid_argument("UnitDecomposition: factors not in canonical order");
  }
}

UnitDecomposition UnitDecomposition::combine(const UnitDecomposition& o) const {
  std::vector<UnitFactor> merged;
  std::size_t i = 0, j = 0;
  const auto& a = factors_;
  const auto& b = o.factors_;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].poly < b[j].poly)) {
      merged.push_back(a[i++]);
    } else if (i == a.size() || b[j].poly < a[i].poly) {
      merged.push_back(b[j++]);
    } else {
      const std::int64_t e = a[i].exponent + b[j].exponent;
      if (e != 0) merged.push_back({a[i].poly, e});
      ++i;
      ++j;
    }
  }
  return UnitDecomposition(constant_ * o.constant_, std::move(merged));
}

UnitDecomposition decompose(const RatFunc& q, std::uint64_t seed) {
  if (q.is_zero()) throw std::domain_error("decompose: zero has no unit decomposition");
  const auto num = factor_poly(q.num(), seed);
  const auto den = factor_poly(q.den(), seed);
  std::vector<UnitFactor> factors;
  for (const auto& [g, m] : num.factors) factors.push_back({g, static_cast<std::int64_t>(m)});
  for (const auto& [g, m] : den.factors) factors.push_back({g, -static_cast<std::int64_t>(m)});
  std::sort(factors.begin(), factors.end(), [](const UnitFactor& a, const UnitFactor& b) { return a.poly < b.poly; });
  return UnitDecomposition(num.unit / den.unit, std::move(factors));
}

RatFunc recompose(const UnitDecomposition& d, const std::string& variable) {
  Poly num = Poly::constant(d.constant(), variable);
  Poly den = Poly::constant(FqElem(d.constant().field(), 1), variable);
  for (const auto& [g, e] : d.factors()) {
    const Poly power = g.with_variable(variable).pow(static_cast<std::uint64_t>(e > 0 ? e : -e));
    if (e > 0)
      num = num * power;
    else
      den = den * power;
  }
  return RatFunc(num, den);
}

std::int64_t valuation_at(const RatFunc& q, const Poly& p) {
  if (q.is_zero()) throw std::domain_error("valuation_at: v(0) is infinite");
  if (p.degree() < 1 || !p.is_monic() || !is_irreducible(p))
    throw std::invalid_argument("valuation_at: " + p.to_string() + " is not monic irreducible");
  const Poly pp = p.with_variable(q.variable());
  auto multiplicity = [&](Poly f) {
    std::int64_t n = 0;
    for (;;) {
      auto [quo, rem] = f.divmod(pp);
      if (!rem.is_zero()) return n;
      f = std::move(quo);
      ++n;
    }
  };
  // p divides at most one of num, den.
  return multiplicity(q.num()) - multiplicity(q.den());
}

ExponentMatrix exponent_matrix(const std::vector<RatFunc>& elems, std::uint64_t seed) {
  std::vector<UnitDecomposition> decs;
  for (const auto& e : elems) {
    if (e.is_zero()) throw std::domain_error("multiplicative_rank: zero is not a unit");
    decs.push_back(decompose(e, seed));
  }
  ExponentMatrix m;
  std::vector<Poly> cols;
  for (const auto& d : decs)
    for (const auto& f : d.factors()) cols.push_back(f.poly);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  m.columns = cols;
  for (const auto& d : decs) {
    std::vector<std::int64_t> row(cols.size(), 0);
    for (const auto& f : d.factors()) {
      const auto it = std::lower_bound(cols.begin(), cols.end(), f.poly);
      row[static_cast<std::size_t>(it - cols.begin())] = f.exponent;
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

std::size_t multiplicative_rank(const std::vector<RatFunc>& elems, std::uint64_t seed) {
  const ExponentMatrix m = exponent_matrix(elems, seed);
  if (m.columns.empty()) return 0;
  return integer_rank(m.rows);
}

}  // namespace fieldunits
