#include "fieldunits/valuation.hpp"

#include "fieldunits/expr.hpp"
#include "fieldunits/integer.hpp"

namespace fieldunits {

const GroupElem& ExtendedValue::value() const {
  if (!value_) throw std::domain_error("valuation is infinite");
  return *value_;
}

std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  return *a.value_ <=> *b.value_;
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Multiplicative: return "multiplicative";
    case Axiom::Ultrametric: return "ultrametric";
    case Axiom::ZeroIsInfinity: return "zero-is-infinity";
  }
  return "?";
}

std::int64_t padic_valuation(const Rational& r, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("padic_valuation: " + std::to_string(p) + " is not prime");
  if (r == 0) throw std::domain_error("padic_valuation: v_p(0) is infinite");
  auto count = [p](BigInt n) {
    std::int64_t k = 0;
    if (n < 0) n = -n;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    return k;
  };
  return count(numerator(r)) - count(denominator(r));
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  const auto slash = s.find('/');
  auto to_big = [](const std::string& digits) {
    std::string d = digits;
    bool negative = false;
    if (!d.empty() && (d[0] == '-' || d[0] == '+')) {
      negative = d[0] == '-';
      d = d.substr(1);
    }
    if (d.empty() || d.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("expected a rational number, got \"" + digits + "\"");
    BigInt n(d);
    return negative ? BigInt(-n) : n;
  };
  if (slash == std::string::npos) return Rational(to_big(s));
  const BigInt den = to_big(s.substr(slash + 1));
  if (den == 0) throw std::domain_error("rational number with zero denominator");
  return Rational(to_big(s.substr(0, slash)), den);
}

namespace detail {

void check_free_basis(const GroupDescriptor& group, const std::vector<GroupElem>& basis) {
  switch (group.kind) {
    case GroupKind::Dyadic:
      throw std::invalid_argument("section_free: Z[1/2] is not free on a finite basis");
    case GroupKind::Int:
      if (basis.size() != 1 || !(basis[0].group() == group) || (basis[0].as_int() != 1 && basis[0].as_int() != -1))
        throw std::invalid_argument("section_free: a basis of Z is {1} or {-1}");
      return;
    case GroupKind::IntVecLex: {
      if (basis.size() != group.arity) throw std::invalid_argument("section_free: basis of Z^k needs k elements");
      for (const auto& b : basis)
        if (!(b.group() == group)) throw std::invalid_argument("section_free: basis element outside " + group.to_string());
      // Determinant must be +-1.
      const std::size_t k = group.arity;
      std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[i].as_lex().coords[j];
      Rational det = 1;
      for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        while (piv < k && m[piv][c] == 0) ++piv;
        if (piv == k) throw std::invalid_argument("section_free: basis is linearly dependent");
        if (piv != c) {
          std::swap(m[piv], m[c]);
          det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < k; ++i) {
          const Rational f = m[i][c] / m[c][c];
          for (std::size_t j = c; j < k; ++j) m[i][j] -= f * m[c][j];
        }
      }
      if (det != 1 && det != -1) throw std::invalid_argument("section_free: basis does not generate Z^k");
      return;
    }
  }
}

std::vector<std::int64_t> basis_coordinates(const std::vector<GroupElem>& basis, const GroupElem& g) {
  if (basis.empty()) throw std::invalid_argument("basis_coordinates: empty basis");
  const GroupDescriptor group = basis[0].group();
  if (!(g.group() == group))
    throw std::invalid_argument("section: " + g.to_string() + " is not in " + group.to_string());
  if (group.kind == GroupKind::Int) return {g.as_int() * basis[0].as_int()};
  if (group.kind != GroupKind::IntVecLex) throw std::invalid_argument("section: group is not free");
  // Solve sum_i c_i basis[i] = g, i.e. B^T c = g.
  const std::size_t k = group.arity;
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k + 1));
  for (std::size_t row = 0; row < k; ++row) {
    for (std::size_t i = 0; i < k; ++i) m[row][i] = basis[i].as_lex().coords[row];
    m[row][k] = g.as_lex().coords[row];
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && m[piv][c] == 0) ++piv;
    if (piv == k) throw std::invalid_argument("section: singular basis");
    std::swap(m[piv], m[c]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= k; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<std::int64_t> coords(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Rational c = m[i][k] / m[i][i];
    if (denominator(c) != 1) throw std::invalid_argument("section: non-integral coordinates");
    coords[i] = static_cast<std::int64_t>(numerator(c));
  }
  return coords;
}

}  // namespace detail

Valuation<Rational> padic(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("padic: " + std::to_string(p) + " is not prime");
  return {"v_" + std::to_string(p), GroupDescriptor::integers(), [p](const Rational& r) {
            if (r == 0) return ExtendedValue::infinity();
            return ExtendedValue(GroupElem(padic_valuation(r, p)));
          }};
}

ValuationProbe<Rational> padic_probe(std::uint64_t p) {
  ValuationProbe<Rational> probe;
  probe.valuation = padic(p);
  probe.sample = [p](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> mag(1, 5000), shift(-4, 4), sign(0, 1);
    Rational r(BigInt(mag(rng)), BigInt(mag(rng)));
    const int k = shift(rng);
    Rational pk = 1;
    for (int i = 0; i < (k < 0 ? -k : k); ++i) pk *= Rational(BigInt(p));
    r = k < 0 ? r / pk : r * pk;
    return sign(rng) ? Rational(-r) : r;
  };
  probe.add = [](const Rational& a, const Rational& b) { return Rational(a + b); };
  probe.mul = [](const Rational& a, const Rational& b) { return Rational(a * b); };
  probe.is_zero = [](const Rational& a) { return a == 0; };
  probe.show = [](const Rational& a) { return a.str(); };
  return probe;
}

Poly random_poly(Field field, unsigned max_degree, std::mt19937_64& rng, const std::string& variable) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<Field::Code> coeff(0, field.order() - 1);
  std::vector<Field::Code> c(deg(rng) + 1);
  for (auto& x : c) x = coeff(rng);
  return Poly(field, std::move(c), variable);
}

RatFunc random_ratfunc(Field field, unsigned max_degree, std::mt19937_64& rng, const std::string& variable) {
  Poly num = random_poly(field, max_degree, rng, variable);
  while (num.is_zero()) num = random_poly(field, max_degree, rng, variable);
  Poly den = random_poly(field, max_degree, rng, variable);
  while (den.is_zero()) den = random_poly(field, max_degree, rng, variable);
  return RatFunc(num, den);
}

Valuation<RatFunc> polynomial_valuation(const Poly& p) {
  if (p.degree() < 1 || !p.is_monic() || !is_irreducible(p))
    throw std::invalid_argument("polynomial_valuation: " + p.to_string() + " is not monic irreducible");
  return {"v_{" + p.to_string() + "}", GroupDescriptor::integers(), [p](const RatFunc& q) {
            if (q.is_zero()) return ExtendedValue::infinity();
            return ExtendedValue(GroupElem(valuation_at(q, p)));
          }};
}

namespace {
void fill_ratfunc_ops(ValuationProbe<RatFunc>& probe) {
  probe.add = [](const RatFunc& a, const RatFunc& b) { return a + b; };
  probe.mul = [](const RatFunc& a, const RatFunc& b) { return a * b; };
  probe.is_zero = [](const RatFunc& a) { return a.is_zero(); };
  probe.show = [](const RatFunc& a) { return a.to_string(); };
}
}  // namespace

ValuationProbe<RatFunc> polynomial_valuation_probe(const Poly& p, unsigned max_degree) {
  ValuationProbe<RatFunc> probe;
  probe.valuation = polynomial_valuation(p);
  const RatFunc prf(p);
  probe.sample = [prf, max_degree](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> shift(-3, 3);
    return random_ratfunc(prf.field(), max_degree, rng, prf.variable()) * prf.pow(shift(rng));
  };
  fill_ratfunc_ops(probe);
  return probe;
}

ValuationProbe<RatFunc> degree_map_probe(Field field, unsigned max_degree) {
  ValuationProbe<RatFunc> probe;
  probe.valuation = {"deg", GroupDescriptor::integers(), [](const RatFunc& q) {
                       if (q.is_zero()) return ExtendedValue::infinity();
                       if (!q.is_polynomial()) throw std::domain_error("deg: argument is not a polynomial");
                       return ExtendedValue(GroupElem(static_cast<std::int64_t>(q.num().degree())));
                     }};
  probe.sample = [field, max_degree](std::mt19937_64& rng) {
    Poly f = random_poly(field, max_degree, rng);
    while (f.is_zero()) f = random_poly(field, max_degree, rng);
    return RatFunc(f);
  };
  fill_ratfunc_ops(probe);
  return probe;
}

}  // namespace fieldunits
