#include "fieldunits/text.hpp"

#include <cctype>
#include <charconv>

#include "fieldunits/integer.hpp"

namespace fieldunits {

long long parse_integer(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError("expected an integer, got \"" + std::string(text) + "\"");
  return value;
}

std::uint64_t parse_natural_exponent(std::string_view raw) {
  const long long e = parse_integer(raw);
  if (e < 0) throw ParseError("negative exponent " + std::string(raw) + " not allowed here");
  return static_cast<std::uint64_t>(e);
}

Field parse_field(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 5 || s.substr(0, 3) != "GF(" || s.back() != ')')
    throw ParseError("expected GF(p) or GF(p^n), got \"" + std::string(text) + "\"");
  const std::string inner = s.substr(3, s.size() - 4);
  const auto caret = inner.find('^');
  if (caret != std::string::npos) {
    const long long p = parse_integer(inner.substr(0, caret));
    const long long n = parse_integer(inner.substr(caret + 1));
    if (p < 2 || n < 1 || n > 63) throw ParseError("invalid field " + s);
    return Field::make(static_cast<std::uint64_t>(p), static_cast<unsigned>(n));
  }
  const long long q = parse_integer(inner);
  if (q < 2) throw ParseError("invalid field " + s);
  const auto pp = is_prime_power(static_cast<std::uint64_t>(q));
  if (!pp) throw std::invalid_argument("field order " + inner + " is not a prime power");
  return Field::make(pp->prime, pp->exponent);
}

std::string format_elem(Field field, Field::Code c) {
  if (field.is_prime_field()) return std::to_string(c);
  const auto d = field.digits(c);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]) + "*";
    out += 'a';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

bool elem_needs_parens(Field field, Field::Code c) {
  if (field.is_prime_field()) return false;
  int terms = 0;
  for (auto d : field.digits(c)) terms += d != 0;
  return terms > 1;
}

std::string FqElem::to_string() const { return format_elem(field_, code_); }

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Code c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    const bool parens = elem_needs_parens(field_, c);
    if (i == 0) {
      out += parens ? "(" + format_elem(field_, c) + ")" : format_elem(field_, c);
      continue;
    }
    if (c != 1) out += (parens ? "(" + format_elem(field_, c) + ")" : format_elem(field_, c)) + "*";
    out += variable_;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

struct PolyAtoms {
  Field field;
  std::string variable;

  Poly constant(Field::Code c) const { return Poly(field, {c}, variable); }

  Poly number(std::string_view digits) const {
    // Reduce a decimal string modulo p without overflow.
    const std::uint64_t p = field.characteristic();
    std::uint64_t r = 0;
    for (char ch : digits) r = (mulmod(r, 10, p) + static_cast<std::uint64_t>(ch - '0')) % p;
    return constant(r);
  }
  bool is_function(const std::string&) const { return false; }
  Poly call(const std::string& id, const Poly&) const { throw ParseError("unknown function " + id); }
  Poly name(const std::string& id) const {
    if (id == variable) return Poly::x(field, variable);
    if (id == "a" && !field.is_prime_field()) return constant(field.generator());
    throw ParseError("unknown symbol '" + id + "' (field " + field.name() + ", variable " + variable + ")");
  }
  Poly power_of_name(const std::string& id, const std::string& e) const { return pow(name(id), e); }
  Poly pow(const Poly& b, const std::string& e) const { return b.pow(parse_natural_exponent(e)); }
  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly neg(const Poly& a) const { return -a; }
  Poly mul(const Poly& a, const Poly& b) const { return a * b; }
  Poly div(const Poly& a, const Poly& b) const {
    if (b.is_zero()) throw std::domain_error("division by zero");
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw ParseError("polynomial division is not exact");
    return q;
  }
};

}  // namespace

Poly parse_poly(Field field, std::string_view text, const std::string& variable) {
  PolyAtoms atoms{field, variable};
  return read_expression<Poly>(text, atoms).with_variable(variable);
}

FqElem parse_elem(Field field, std::string_view text) {
  // An element is a constant polynomial in an otherwise unused variable.
  const Poly p = parse_poly(field, text, "__elem");
  if (p.degree() > 0) throw ParseError("expected a field element, got \"" + std::string(text) + "\"");
  return p.coeff(0);
}

}  // namespace fieldunits
