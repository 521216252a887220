#include "fieldunits/ordered_group.hpp"

#include <bit>
#include <stdexcept>

#include "fieldunits/expr.hpp"

namespace fieldunits {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in value group arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in value group arithmetic");
  return r;
}

Dyadic::Dyadic(std::int64_t numerator, unsigned exponent) : num_(numerator), exp_(exponent) {
  if (exp_ > 62) throw std::overflow_error("Dyadic: denominator exponent too large");
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && num_ % 2 == 0) {
    num_ /= 2;
    --exp_;
  }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  const unsigned e = std::max(exp_, o.exp_);
  const std::int64_t a = checked_mul(num_, std::int64_t{1} << (e - exp_));
  const std::int64_t b = checked_mul(o.num_, std::int64_t{1} << (e - o.exp_));
  return Dyadic(checked_add(a, b), e);
}

Dyadic Dyadic::operator-() const {
  if (num_ == INT64_MIN) throw std::overflow_error("Dyadic: negation overflow");
  return Dyadic(-num_, exp_);
}

Dyadic Dyadic::operator*(std::int64_t k) const { return Dyadic(checked_mul(num_, k), exp_); }

Dyadic Dyadic::scaled_pow2(int k) const {
  if (k >= 0) {
    if (static_cast<unsigned>(k) <= exp_) return Dyadic(num_, exp_ - static_cast<unsigned>(k));
    return Dyadic(checked_mul(num_, std::int64_t{1} << (static_cast<unsigned>(k) - exp_)), 0);
  }
  return Dyadic(num_, exp_ + static_cast<unsigned>(-k));
}

std::int64_t Dyadic::at_level(unsigned level) const {
  if (level < exp_) throw std::domain_error("Dyadic::at_level: level below the denominator exponent");
  return checked_mul(num_, std::int64_t{1} << (level - exp_));
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const unsigned e = std::max(a.exp_, b.exp_);
  const __int128 x = static_cast<__int128>(a.num_) << (e - a.exp_);
  const __int128 y = static_cast<__int128>(b.num_) << (e - b.exp_);
  return x <=> y;
}

std::string Dyadic::to_string() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(std::uint64_t{1} << exp_);
}

Dyadic parse_dyadic(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_integer(text));
  const std::int64_t num = parse_integer(text.substr(0, slash));
  std::string_view den = text.substr(slash + 1);
  while (!den.empty() && den.front() == ' ') den.remove_prefix(1);
  unsigned exponent;
  if (const auto caret = den.find('^'); caret != std::string_view::npos) {
    if (parse_integer(den.substr(0, caret)) != 2) throw ParseError("dyadic denominator must be 2^k");
    const long long k = parse_integer(den.substr(caret + 1));
    if (k < 0 || k > 62) throw ParseError("dyadic exponent out of range");
    exponent = static_cast<unsigned>(k);
  } else {
    const long long d = parse_integer(den);
    if (d <= 0 || !std::has_single_bit(static_cast<std::uint64_t>(d)))
      throw ParseError("dyadic denominator must be a power of two, got " + std::string(den));
    exponent = static_cast<unsigned>(std::countr_zero(static_cast<std::uint64_t>(d)));
  }
  return Dyadic(num, exponent);
}

std::string GroupDescriptor::to_string() const {
  switch (kind) {
    case GroupKind::Int: return "Z";
    case GroupKind::IntVecLex: return "Z^" + std::to_string(arity);
    case GroupKind::Dyadic: return "Z[1/2]";
  }
  return "?";
}

GroupDescriptor parse_group(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s == "Z") return GroupDescriptor::integers();
  if (s == "Z[1/2]" || s == "Dyadic") return GroupDescriptor::dyadic();
  if (s.size() > 2 && s.substr(0, 2) == "Z^") {
    const long long k = parse_integer(s.substr(2));
    if (k < 1 || k > 64) throw ParseError("lexicographic arity out of range: " + s);
    return GroupDescriptor::lex(static_cast<unsigned>(k));
  }
  throw ParseError("unknown value group \"" + std::string(text) + "\" (expected Z, Z^k or Z[1/2])");
}

GroupElem::GroupElem(LexVector v) : value_(std::move(v)) {
  if (std::get<LexVector>(value_).coords.empty()) throw std::invalid_argument("GroupElem: empty lex vector");
}

GroupElem GroupElem::zero(const GroupDescriptor& g) {
  switch (g.kind) {
    case GroupKind::Int: return GroupElem(std::int64_t{0});
    case GroupKind::IntVecLex: return GroupElem(LexVector{std::vector<std::int64_t>(g.arity, 0)});
    case GroupKind::Dyadic: return GroupElem(Dyadic(0));
  }
  throw std::logic_error("GroupElem::zero");
}

GroupDescriptor GroupElem::group() const {
  switch (value_.index()) {
    case 0: return GroupDescriptor::integers();
    case 1: return GroupDescriptor::lex(static_cast<unsigned>(std::get<1>(value_).coords.size()));
    default: return GroupDescriptor::dyadic();
  }
}

bool GroupElem::is_zero() const { return *this == zero(group()); }

std::int64_t GroupElem::as_int() const {
  if (auto p = std::get_if<std::int64_t>(&value_)) return *p;
  throw std::invalid_argument("GroupElem: not an element of Z");
}
const LexVector& GroupElem::as_lex() const {
  if (auto p = std::get_if<LexVector>(&value_)) return *p;
  throw std::invalid_argument("GroupElem: not an element of Z^k");
}
const Dyadic& GroupElem::as_dyadic() const {
  if (auto p = std::get_if<Dyadic>(&value_)) return *p;
  throw std::invalid_argument("GroupElem: not an element of Z[1/2]");
}

void GroupElem::check_same(const GroupElem& o) const {
  if (!(group() == o.group()))
    throw std::invalid_argument("mixed value groups: " + group().to_string() + " and " + o.group().to_string());
}

GroupElem GroupElem::operator+(const GroupElem& o) const {
  check_same(o);
  switch (value_.index()) {
    case 0: return GroupElem(checked_add(as_int(), o.as_int()));
    case 1: {
      LexVector r = as_lex();
      for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = checked_add(r.coords[i], o.as_lex().coords[i]);
      return GroupElem(std::move(r));
    }
    default: return GroupElem(as_dyadic() + o.as_dyadic());
  }
}

GroupElem GroupElem::operator-() const { return *this * -1; }

GroupElem GroupElem::operator*(std::int64_t k) const {
  switch (value_.index()) {
    case 0: return GroupElem(checked_mul(as_int(), k));
    case 1: {
      LexVector r = as_lex();
      for (auto& c : r.coords) c = checked_mul(c, k);
      return GroupElem(std::move(r));
    }
    default: return GroupElem(as_dyadic() * k);
  }
}

std::strong_ordering operator<=>(const GroupElem& a, const GroupElem& b) {
  a.check_same(b);
  switch (a.value_.index()) {
    case 0: return a.as_int() <=> b.as_int();
    case 1: return a.as_lex().coords <=> b.as_lex().coords;
    default: return a.as_dyadic() <=> b.as_dyadic();
  }
}

GroupElem min(const GroupElem& a, const GroupElem& b) { return b < a ? b : a; }

std::string GroupElem::to_string() const {
  switch (value_.index()) {
    case 0: return std::to_string(as_int());
    case 1: {
      std::string s = "(";
      for (std::size_t i = 0; i < as_lex().coords.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(as_lex().coords[i]);
      }
      return s + ")";
    }
    default: return as_dyadic().to_string();
  }
}

GroupElem parse_group_elem(const GroupDescriptor& g, std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  switch (g.kind) {
    case GroupKind::Int: return GroupElem(static_cast<std::int64_t>(parse_integer(s)));
    case GroupKind::Dyadic: return GroupElem(parse_dyadic(s));
    case GroupKind::IntVecLex: {
      if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
      LexVector v;
      std::size_t start = 0;
      for (;;) {
        const auto comma = s.find(',', start);
        v.coords.push_back(parse_integer(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (v.coords.size() != g.arity)
        throw ParseError("expected " + std::to_string(g.arity) + " coordinates, got \"" + std::string(text) + "\"");
      return GroupElem(std::move(v));
    }
  }
  throw std::logic_error("parse_group_elem");
}

}  // namespace fieldunits
