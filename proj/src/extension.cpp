#include "fieldunits/extension.hpp"

#include <regex>
#include <stdexcept>

#include "fieldunits/expr.hpp"
#include "fieldunits/integer.hpp"
#include "fieldunits/text.hpp"
#include "fieldunits/valuation.hpp"

namespace fieldunits {

std::string to_string(IrreducibilityStatus s) {
  return s == IrreducibilityStatus::Verified ? "Verified" : "AssumedSquarefree";
}

namespace {

void trim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

YPoly derivative(const YPoly& p, Field field) {
  YPoly d;
  for (std::size_t i = 1; i < p.size(); ++i)
    d.push_back(p[i] * RatFunc::constant(FqElem::from_int(field, static_cast<std::int64_t>(i % field.characteristic())),
                                         p[i].variable()));
  trim(d);
  return d;
}

// Remainder of a modulo b over the field F_q(t); b nonzero.
YPoly remainder(YPoly a, const YPoly& b) {
  trim(a);
  const RatFunc lead_inv = b.back().inv();
  while (a.size() >= b.size()) {
    const RatFunc c = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = a[shift + j] - c * b[j];
    trim(a);
  }
  return a;
}

std::size_t gcd_degree(YPoly a, YPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    YPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() - 1;
}

std::string ypoly_to_string(const YPoly& p, const std::string& y) {
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i].is_zero()) continue;
    if (!out.empty()) out += "+";
    const std::string c = p[i].to_string();
    const std::string mono = i == 0 ? "" : i == 1 ? y : y + "^" + std::to_string(i);
    if (i == 0) {
      out += c;
    } else if (p[i].is_one()) {
      out += mono;
    } else {
      const bool single = c.find_first_of("+-/*()") == std::string::npos;
      out += (single ? c : "(" + c + ")") + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

Poly lcm(const Poly& a, const Poly& b) { return (a * b) / gcd(a, b); }

}  // namespace

SimpleExtension SimpleExtension::make(Field field, YPoly m, std::string base_variable, std::string variable) {
  trim(m);
  if (m.size() < 3) throw std::invalid_argument("extension modulus must have degree >= 2 in " + variable);
  for (const auto& c : m)
    if (!(c.field() == field)) throw std::invalid_argument("extension modulus has coefficients outside " + field.name());
  if (!m.back().is_one()) throw std::invalid_argument("extension modulus " + ypoly_to_string(m, variable) + " is not monic");
  const YPoly dm = derivative(m, field);
  if (dm.empty() || gcd_degree(m, dm) != 0)
    throw std::invalid_argument("extension modulus " + ypoly_to_string(m, variable) + " is not squarefree");

  auto data = std::make_shared<Data>(Data{field, base_variable, variable, std::move(m), IrreducibilityStatus::AssumedSquarefree, {}});
  const std::size_t d = data->m.size() - 1;
  for (std::uint64_t a = 0; a < field.order(); ++a) {
    const FqElem at(field, a);
    std::vector<Field::Code> spec;
    bool defined = true;
    for (const auto& c : data->m) {
      const FqElem den = c.den().eval(at);
      if (den.code() == 0) {
        defined = false;
        break;
      }
      spec.push_back((c.num().eval(at) / den).code());
    }
    if (!defined) continue;
    const Poly s(field, spec, variable);
    if (static_cast<std::size_t>(s.degree()) == d && is_irreducible(s)) {
      data->status = IrreducibilityStatus::Verified;
      data->witness = at;
      break;
    }
  }
  return SimpleExtension(std::move(data));
}

bool operator==(const SimpleExtension& a, const SimpleExtension& b) {
  if (a.data_ == b.data_) return true;
  return a.field() == b.field() && a.base_variable() == b.base_variable() && a.variable() == b.variable() &&
         a.modulus() == b.modulus();
}

std::string SimpleExtension::to_string() const {
  return field().name() + "(" + base_variable() + ")[" + variable() + "]/(" + ypoly_to_string(modulus(), variable()) + ")";
}

ExtElem::ExtElem(SimpleExtension ext, YPoly coeffs) : ext_(std::move(ext)) {
  for (const auto& c : coeffs)
    if (!(c.field() == ext_.field())) throw std::invalid_argument("element coefficients outside " + ext_.field().name());
  // The modulus is monic, so reduction needs no division.
  const YPoly& m = ext_.modulus();
  const std::size_t d = ext_.degree();
  trim(coeffs);
  while (coeffs.size() > d) {
    const RatFunc c = coeffs.back();
    const std::size_t shift = coeffs.size() - 1 - d;
    for (std::size_t j = 0; j <= d; ++j) coeffs[shift + j] = coeffs[shift + j] - c * m[j];
    trim(coeffs);
  }
  coeffs.resize(d, RatFunc::zero(ext_.field(), ext_.base_variable()));
  coeffs_ = std::move(coeffs);
}

ExtElem ExtElem::base(SimpleExtension ext, const RatFunc& c) { return ExtElem(std::move(ext), YPoly{c}); }

ExtElem ExtElem::generator(SimpleExtension ext) {
  const Field f = ext.field();
  const std::string t = ext.base_variable();
  return ExtElem(std::move(ext), YPoly{RatFunc::zero(f, t), RatFunc::one(f, t)});
}

bool ExtElem::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

void ExtElem::check_compatible(const ExtElem& o) const {
  if (!(ext_ == o.ext_)) throw std::invalid_argument("mixed extensions: " + ext_.to_string() + ", " + o.ext_.to_string());
}

ExtElem ExtElem::operator+(const ExtElem& o) const {
  check_compatible(o);
  YPoly r = coeffs_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + o.coeffs_[i];
  return ExtElem(ext_, std::move(r));
}

ExtElem ExtElem::operator-() const {
  YPoly r = coeffs_;
  for (auto& c : r) c = -c;
  return ExtElem(ext_, std::move(r));
}

ExtElem ExtElem::operator-(const ExtElem& o) const { return *this + (-o); }

ExtElem ExtElem::operator*(const ExtElem& o) const {
  check_compatible(o);
  const std::size_t d = ext_.degree();
  YPoly r(2 * d - 1, RatFunc::zero(ext_.field(), ext_.base_variable()));
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (!o.coeffs_[j].is_zero()) r[i + j] = r[i + j] + coeffs_[i] * o.coeffs_[j];
  }
  return ExtElem(ext_, std::move(r));
}

ExtElem ExtElem::pow(std::uint64_t e) const {
  ExtElem result = base(ext_, RatFunc::one(ext_.field(), ext_.base_variable()));
  ExtElem b = *this;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

std::string ExtElem::to_string() const { return ypoly_to_string(coeffs_, ext_.variable()); }

Poly determinant(std::vector<std::vector<Poly>> a) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  const Field f = a[0][0].field();
  const std::string var = a[0][0].variable();
  Poly prev = Poly::constant(FqElem(f, 1), var);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return Poly(f, {}, var);
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = Poly(f, {}, var);
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

RatFunc norm(const ExtElem& u) {
  if (u.is_zero()) throw std::domain_error("norm of zero");
  const SimpleExtension& ext = u.extension();
  const Field f = ext.field();
  const std::string t = ext.base_variable();
  const std::size_t d = ext.degree();
  YPoly g = u.coeffs();
  trim(g);
  const std::size_t e = g.size() - 1;
  if (e == 0) return g[0].pow(static_cast<std::int64_t>(d));

  // Clear denominators: M = delta*m, G = gamma*g over F_q[t], and
  // Res(m, g) = delta^-e gamma^-d Res(M, G).
  Poly delta = Poly::constant(FqElem(f, 1), t), gamma = delta;
  for (const auto& c : ext.modulus()) delta = lcm(delta, c.den());
  for (const auto& c : g) gamma = lcm(gamma, c.den());
  std::vector<Poly> M, G;
  for (const auto& c : ext.modulus()) M.push_back(c.num() * (delta / c.den()));
  for (const auto& c : g) G.push_back(c.num() * (gamma / c.den()));

  // Sylvester matrix: e shifted rows of M, then d shifted rows of G, leading coefficients first.
  const std::size_t n = d + e;
  std::vector<std::vector<Poly>> syl(n, std::vector<Poly>(n, Poly(f, {}, t)));
  for (std::size_t r = 0; r < e; ++r)
    for (std::size_t j = 0; j <= d; ++j) syl[r][r + j] = M[d - j];
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t j = 0; j <= e; ++j) syl[e + r][r + j] = G[e - j];
  const Poly res = determinant(std::move(syl));
  return RatFunc(res, delta.pow(e) * gamma.pow(d));
}

namespace {

struct YAtoms {
  Field field;
  std::string t, y;

  YPoly constant(const RatFunc& c) const { return YPoly{c}; }
  RatFunc zero() const { return RatFunc::zero(field, t); }

  YPoly number(std::string_view digits) const {
    const std::uint64_t p = field.characteristic();
    std::uint64_t r = 0;
    for (char ch : digits) r = (mulmod(r, 10, p) + static_cast<std::uint64_t>(ch - '0')) % p;
    return constant(RatFunc::constant(FqElem(field, r), t));
  }
  bool is_function(const std::string&) const { return false; }
  YPoly call(const std::string& id, const YPoly&) const { throw ParseError("unknown function " + id); }
  YPoly name(const std::string& id) const {
    if (id == y) return YPoly{zero(), RatFunc::one(field, t)};
    if (id == t) return constant(RatFunc(Poly::x(field, t)));
    if (id == "a" && !field.is_prime_field()) return constant(RatFunc::constant(FqElem(field, field.generator()), t));
    throw ParseError("unknown symbol '" + id + "'");
  }
  YPoly power_of_name(const std::string& id, const std::string& e) const { return pow(name(id), e); }
  YPoly pow(const YPoly& b, const std::string& raw) const {
    if (b.size() <= 1 && !raw.empty() && raw[0] == '-') {
      const std::int64_t e = parse_integer(raw);
      if (b.empty() || b[0].is_zero()) throw ParseError("negative power of zero");
      return constant(b[0].pow(e));
    }
    const std::uint64_t n = parse_natural_exponent(raw);
    YPoly r = constant(RatFunc::one(field, t));
    for (std::uint64_t i = 0; i < n; ++i) r = mul(r, b);
    return r;
  }
  YPoly add(YPoly a, const YPoly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), zero());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
    trim(a);
    return a;
  }
  YPoly neg(YPoly a) const {
    for (auto& c : a) c = -c;
    return a;
  }
  YPoly sub(const YPoly& a, const YPoly& b) const { return add(a, neg(b)); }
  YPoly mul(const YPoly& a, const YPoly& b) const {
    if (a.empty() || b.empty()) return {};
    YPoly r(a.size() + b.size() - 1, zero());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    trim(r);
    return r;
  }
  YPoly div(const YPoly& a, const YPoly& b) const {
    if (b.size() != 1) throw ParseError("division is only supported by nonzero elements of " + field.name() + "(" + t + ")");
    const RatFunc inv = b[0].inv();
    YPoly r = a;
    for (auto& c : r) c = c * inv;
    return r;
  }
};

YPoly parse_ypoly(Field field, const std::string& t, const std::string& y, std::string_view text) {
  YAtoms atoms{field, t, y};
  try {
    return read_expression<YPoly>(text, atoms);
  } catch (const std::domain_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

SimpleExtension parse_extension(std::string_view text) {
  static const std::regex form(R"(\s*(GF\([^)]*\))\s*\(\s*([A-Za-z_]\w*)\s*\)\s*\[\s*([A-Za-z_]\w*)\s*\]\s*/\s*\((.*)\)\s*)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, form))
    throw ParseError("extension descriptor must look like GF(q)(t)[y]/(m(y)), got \"" + std::string(text) + "\"");
  const Field field = parse_field(m[1].str());
  const std::string t = m[2].str(), y = m[3].str();
  if (t == y) throw ParseError("extension and base variables must differ");
  return SimpleExtension::make(field, parse_ypoly(field, t, y, m[4].str()), t, y);
}

ExtElem parse_ext_elem(const SimpleExtension& ext, std::string_view text) {
  return ExtElem(ext, parse_ypoly(ext.field(), ext.base_variable(), ext.variable(), text));
}

ExtElem random_ext_elem(const SimpleExtension& ext, unsigned max_degree, std::mt19937_64& rng) {
  YPoly c;
  for (std::size_t i = 0; i < ext.degree(); ++i) c.push_back(random_ratfunc(ext.field(), max_degree, rng, ext.base_variable()));
  return ExtElem(ext, std::move(c));
}

}  // namespace fieldunits
