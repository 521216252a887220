#include "fieldunits/poly.hpp"

#include <stdexcept>

namespace fieldunits {

Poly::Poly(Field field, std::string variable) : field_(field), variable_(std::move(variable)) {}

Poly::Poly(Field field, std::vector<Code> coeffs, std::string variable)
    : field_(field), coeffs_(std::move(coeffs)), variable_(std::move(variable)) {
  for (auto c : coeffs_)
    if (!field_.contains(c)) throw std::invalid_argument("Poly: coefficient out of range for " + field_.name());
  normalize();
}

Poly Poly::constant(const FqElem& c, std::string variable) {
  return Poly(c.field(), {c.code()}, std::move(variable));
}

Poly Poly::monomial(Field field, Code c, std::size_t e, std::string variable) {
  std::vector<Code> coeffs(e + 1, 0);
  coeffs[e] = c;
  return Poly(field, std::move(coeffs), std::move(variable));
}

Poly Poly::from_gf2(const Gf2Poly& f, std::string variable) {
  std::vector<Code> coeffs(static_cast<std::size_t>(f.degree() + 1));
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = f.coeff(i) ? 1 : 0;
  return Poly(Field::gf2(), std::move(coeffs), std::move(variable));
}

Gf2Poly Poly::to_gf2() const {
  if (!field_.is_gf2()) throw std::invalid_argument("Poly::to_gf2: polynomial is over " + field_.name());
  std::vector<std::uint64_t> words((coeffs_.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i]) words[i / 64] |= std::uint64_t{1} << (i % 64);
  return Gf2Poly(std::move(words));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::check_compatible(const Poly& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("mixed fields: " + field_.name() + " and " + o.field_.name());
  if (variable_ != o.variable_ && !is_constant() && !o.is_constant())
    throw std::invalid_argument("mixed variables: " + variable_ + " and " + o.variable_);
}

FqElem Poly::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
  return FqElem(field_, coeffs_.back());
}

Poly Poly::operator+(const Poly& o) const {
  check_compatible(o);
  Poly r(field_, is_constant() ? o.variable_ : variable_);
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = field_.add(coeff_code(i), o.coeff_code(i));
  r.normalize();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = field_.neg(c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_compatible(o);
  Poly r(field_, is_constant() ? o.variable_ : variable_);
  if (is_zero() || o.is_zero()) return r;
  if (field_.is_gf2()) return from_gf2(to_gf2() * o.to_gf2(), r.variable_);
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] = field_.add(r.coeffs_[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
  }
  r.normalize();
  return r;
}

Poly Poly::scaled(const FqElem& c) const {
  if (!(c.field() == field_)) throw std::invalid_argument("Poly::scaled: mixed fields");
  Poly r = *this;
  for (auto& x : r.coeffs_) x = field_.mul(x, c.code());
  r.normalize();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  const std::string& var = is_constant() ? divisor.variable_ : variable_;
  if (field_.is_gf2()) {
    auto [q, r] = to_gf2().divmod(divisor.to_gf2());
    return {from_gf2(q, var), from_gf2(r, var)};
  }
  Poly rem = *this;
  rem.variable_ = var;
  Poly quo(field_, var);
  const long dd = divisor.degree();
  if (degree() < dd) return {quo, rem};
  quo.coeffs_.assign(static_cast<std::size_t>(degree() - dd + 1), 0);
  const Code lead_inv = field_.inv(divisor.coeffs_.back());
  for (long k = degree(); k >= dd; --k) {
    const Code c = field_.mul(rem.coeff_code(static_cast<std::size_t>(k)), lead_inv);
    if (c == 0) continue;
    const auto shift = static_cast<std::size_t>(k - dd);
    quo.coeffs_[shift] = c;
    for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i)
      rem.coeffs_[shift + i] = field_.sub(rem.coeffs_[shift + i], field_.mul(c, divisor.coeffs_[i]));
  }
  rem.normalize();
  quo.normalize();
  return {quo, rem};
}

FqElem Poly::eval(const FqElem& at) const {
  if (!(at.field() == field_)) throw std::invalid_argument("Poly::eval: mixed fields");
  Code acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, at.code()), coeffs_[i]);
  return FqElem(field_, acc);
}

Poly Poly::derivative() const {
  Poly r(field_, variable_);
  if (coeffs_.size() <= 1) return r;
  r.coeffs_.resize(coeffs_.size() - 1);
  const std::uint64_t p = field_.characteristic();
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    const Code k = field_.from_int(static_cast<std::int64_t>(i % p));
    r.coeffs_[i - 1] = field_.mul(k, coeffs_[i]);
  }
  r.normalize();
  return r;
}

Poly Poly::monic() const { return scaled(leading().inv()); }

Poly Poly::pow(std::uint64_t e) const {
  Poly result = constant(FqElem(field_, 1), variable_);
  Poly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::pth_root() const {
  const std::uint64_t p = field_.characteristic();
  Poly r(field_, variable_);
  if (is_zero()) return r;
  r.coeffs_.assign(static_cast<std::size_t>(degree()) / p + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (i % p != 0) throw std::domain_error("Poly::pth_root: not a p-th power");
    r.coeffs_[i / p] = field_.pth_root(coeffs_[i]);
  }
  r.normalize();
  return r;
}

Poly Poly::with_variable(std::string variable) const {
  Poly r = *this;
  r.variable_ = std::move(variable);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_) || a.coeffs_ != b.coeffs_) return false;
  return a.is_constant() || a.variable_ == b.variable_;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.coeffs_.size(); i-- > 0;)
    if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  if (a.field().is_gf2() && b.field().is_gf2()) {
    const std::string& var = a.is_constant() ? b.variable() : a.variable();
    return Poly::from_gf2(gcd(a.to_gf2(), b.to_gf2()), var);
  }
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus) {
  Poly result = Poly::constant(FqElem(base.field(), 1), base.variable()) % modulus;
  Poly b = base % modulus;
  while (e) {
    if (e & 1) result = (result * b) % modulus;
    e >>= 1;
    if (e) b = (b * b) % modulus;
  }
  return result;
}

}  // namespace fieldunits
