#include "fieldunits/hahn.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fieldunits/expr.hpp"
#include "fieldunits/integer.hpp"
#include "fieldunits/text.hpp"

namespace fieldunits {

HahnSeries::HahnSeries(Field field, GroupDescriptor group) : field_(field), group_(group) {}

HahnSeries::HahnSeries(Field field, GroupDescriptor group, std::vector<Term> terms, std::optional<GroupElem> precision)
    : field_(field), group_(group), precision_(std::move(precision)) {
  if (precision_ && !(precision_->group() == group_))
    throw std::invalid_argument("HahnSeries: precision outside " + group_.to_string());
  normalize(std::move(terms));
}

void HahnSeries::normalize(std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (!(t.exponent.group() == group_))
      throw std::invalid_argument("HahnSeries: exponent " + t.exponent.to_string() + " outside " + group_.to_string());
    if (!field_.contains(t.coeff)) throw std::invalid_argument("HahnSeries: coefficient outside " + field_.name());
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  terms_.clear();
  for (auto& t : terms) {
    if (precision_ && !(t.exponent < *precision_)) continue;
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coeff = field_.add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

HahnSeries HahnSeries::monomial(Field field, const GroupElem& exponent, Field::Code coeff) {
  return HahnSeries(field, exponent.group(), {{exponent, coeff}});
}

HahnSeries HahnSeries::constant(Field field, GroupDescriptor group, Field::Code coeff) {
  return HahnSeries(field, group, {{GroupElem::zero(group), coeff}});
}

HahnSeries HahnSeries::big_o(Field field, const GroupElem& cutoff) {
  return HahnSeries(field, cutoff.group(), {}, cutoff);
}

void HahnSeries::check_compatible(const HahnSeries& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("mixed coefficient fields: " + field_.name() + ", " + o.field_.name());
  if (!(group_ == o.group_))
    throw std::invalid_argument("mixed value groups: " + group_.to_string() + ", " + o.group_.to_string());
}

namespace {
std::optional<GroupElem> min_opt(const std::optional<GroupElem>& a, const std::optional<GroupElem>& b) {
  if (!a) return b;
  if (!b) return a;
  return min(*a, *b);
}
}  // namespace

HahnSeries HahnSeries::operator+(const HahnSeries& o) const {
  check_compatible(o);
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return HahnSeries(field_, group_, std::move(all), min_opt(precision_, o.precision_));
}

HahnSeries HahnSeries::operator-() const {
  HahnSeries r = *this;
  for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
  return r;
}

HahnSeries HahnSeries::operator*(const HahnSeries& o) const {
  check_compatible(o);
  if (is_exact_zero() || o.is_exact_zero()) return HahnSeries(field_, group_);
  // The lowest exponent that can carry a term (or an error) in each operand.
  const GroupElem low_a = terms_.empty() ? *precision_ : terms_.front().exponent;
  const GroupElem low_b = o.terms_.empty() ? *o.precision_ : o.terms_.front().exponent;
  std::optional<GroupElem> prec;
  if (o.precision_) prec = low_a + *o.precision_;
  if (precision_) prec = min_opt(prec, low_b + *precision_);

  std::map<GroupElem, Field::Code> acc;
  for (const auto& s : terms_) {
    for (const auto& t : o.terms_) {
      GroupElem e = s.exponent + t.exponent;
      if (prec && !(e < *prec)) continue;
      auto [it, inserted] = acc.try_emplace(std::move(e), 0);
      it->second = field_.add(it->second, field_.mul(s.coeff, t.coeff));
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) out.push_back({e, c});
  return HahnSeries(field_, group_, std::move(out), prec);
}

HahnSeries HahnSeries::scaled(Field::Code c) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = field_.mul(t.coeff, c);
  return HahnSeries(field_, group_, std::move(out), c == 0 ? std::nullopt : precision_);
}

HahnSeries HahnSeries::shifted(const GroupElem& g) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.exponent = t.exponent + g;
  return HahnSeries(field_, group_, std::move(out), precision_ ? std::optional<GroupElem>(*precision_ + g) : std::nullopt);
}

HahnSeries HahnSeries::truncated(const GroupElem& cutoff) const {
  return HahnSeries(field_, group_, terms_, min_opt(precision_, cutoff));
}

std::string HahnSeries::to_string() const {
  std::string out;
  auto exponent_text = [](const GroupElem& e) {
    // Tuples already carry parentheses.
    return e.group().kind == GroupKind::IntVecLex ? "x^" + e.to_string() : "x^(" + e.to_string() + ")";
  };
  for (const auto& t : terms_) {
    if (!out.empty()) out += "+";
    const bool parens = elem_needs_parens(field_, t.coeff);
    const std::string c = parens ? "(" + format_elem(field_, t.coeff) + ")" : format_elem(field_, t.coeff);
    if (t.exponent.is_zero()) {
      out += c;
      continue;
    }
    if (t.coeff != 1) out += c + "*";
    out += exponent_text(t.exponent);
  }
  if (precision_) {
    if (!out.empty()) out += "+";
    out += "O(" + exponent_text(*precision_) + ")";
  }
  return out.empty() ? "0" : out;
}

GroupElem hs_valuation(const HahnSeries& a) {
  if (a.has_no_terms()) throw std::domain_error("hs_valuation: series has no known terms");
  return a.terms().front().exponent;
}

HahnSeries hs_inv(const HahnSeries& a, std::size_t n_terms) {
  if (a.has_no_terms()) throw std::domain_error("hs_inv: series has no known terms");
  if (n_terms == 0) throw std::invalid_argument("hs_inv: n_terms must be positive");
  const Field F = a.field();
  const GroupElem g = hs_valuation(a);
  const Field::Code lead_inv = F.inv(a.terms().front().coeff);
  const HahnSeries unit = a.shifted(-g).scaled(lead_inv);  // 1 + R
  const HahnSeries one = HahnSeries::constant(F, a.group(), 1);
  const HahnSeries r = unit - one;

  std::optional<GroupElem> cutoff = unit.precision();
  if (!r.has_no_terms()) {
    const GroupElem bound = hs_valuation(r) * static_cast<std::int64_t>(n_terms);
    cutoff = cutoff ? min(*cutoff, bound) : bound;
  }
  if (!cutoff) return HahnSeries::monomial(F, -g, lead_inv);

  const HahnSeries minus_r = (-r).truncated(*cutoff);
  HahnSeries power = one.truncated(*cutoff);
  HahnSeries sum = power;
  for (std::size_t k = 1; k < n_terms && !power.has_no_terms(); ++k) {
    power = (power * minus_r).truncated(*cutoff);
    sum = sum + power;
  }
  return sum.truncated(*cutoff).scaled(lead_inv).shifted(-g);
}

HahnSeries hs_section(Field field, const GroupElem& g) { return HahnSeries::monomial(field, g, 1); }

std::pair<GroupElem, HahnSeries> hs_unit_split(const HahnSeries& a) {
  const GroupElem g = hs_valuation(a);
  return {g, a.shifted(-g)};
}

namespace {

struct HahnAtoms {
  Field field;
  GroupDescriptor group;

  HahnSeries constant(Field::Code c) const { return HahnSeries::constant(field, group, c); }

  HahnSeries number(std::string_view digits) const {
    const std::uint64_t p = field.characteristic();
    std::uint64_t r = 0;
    for (char ch : digits) r = (mulmod(r, 10, p) + static_cast<std::uint64_t>(ch - '0')) % p;
    return constant(r);
  }
  bool is_function(const std::string& id) const { return id == "O"; }
  HahnSeries call(const std::string&, const HahnSeries& arg) const {
    if (arg.terms().size() != 1 || !arg.is_exact()) throw ParseError("O(...) expects a monomial x^(e)");
    return HahnSeries::big_o(field, arg.terms().front().exponent);
  }
  HahnSeries name(const std::string& id) const {
    if (id == "x") {
      if (group.kind == GroupKind::IntVecLex) throw ParseError("bare x is ambiguous in " + group.to_string());
      return HahnSeries::monomial(field, group.kind == GroupKind::Int ? GroupElem(1) : GroupElem(Dyadic(1)));
    }
    if (id == "a" && !field.is_prime_field()) return constant(field.generator());
    throw ParseError("unknown symbol '" + id + "' in a series over " + field.name());
  }
  HahnSeries power_of_name(const std::string& id, const std::string& e) const {
    if (id == "x") return HahnSeries::monomial(field, parse_group_elem(group, e));
    return pow(name(id), e);
  }
  HahnSeries pow(const HahnSeries& b, const std::string& e) const {
    const std::uint64_t n = parse_natural_exponent(e);
    HahnSeries r = constant(1);
    for (std::uint64_t i = 0; i < n; ++i) r = r * b;
    return r;
  }
  HahnSeries add(const HahnSeries& a, const HahnSeries& b) const { return a + b; }
  HahnSeries sub(const HahnSeries& a, const HahnSeries& b) const { return a - b; }
  HahnSeries neg(const HahnSeries& a) const { return -a; }
  HahnSeries mul(const HahnSeries& a, const HahnSeries& b) const { return a * b; }
  HahnSeries div(const HahnSeries& a, const HahnSeries& b) const {
    if (b.terms().size() != 1 || !b.is_exact()) throw ParseError("series division is only supported by monomials");
    return a * hs_inv(b, 1);
  }
};

}  // namespace

HahnSeries parse_hahn(Field field, const GroupDescriptor& group, std::string_view text) {
  HahnAtoms atoms{field, group};
  return read_expression<HahnSeries>(text, atoms);
}

GroupElem random_group_elem(const GroupDescriptor& group, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> coord(-range, range);
  switch (group.kind) {
    case GroupKind::Int: return GroupElem(static_cast<std::int64_t>(coord(rng)));
    case GroupKind::IntVecLex: {
      LexVector v;
      for (unsigned i = 0; i < group.arity; ++i) v.coords.push_back(coord(rng));
      return GroupElem(std::move(v));
    }
    case GroupKind::Dyadic: {
      std::uniform_int_distribution<unsigned> level(0, 3);
      return GroupElem(Dyadic(coord(rng), level(rng)));
    }
  }
  throw std::logic_error("random_group_elem");
}

HahnSeries random_hahn(Field field, const GroupDescriptor& group, std::mt19937_64& rng, unsigned max_terms) {
  std::uniform_int_distribution<unsigned> count(1, max_terms);
  std::uniform_int_distribution<Field::Code> coeff(1, field.order() - 1);
  for (;;) {
    std::vector<HahnSeries::Term> terms;
    const unsigned n = count(rng);
    for (unsigned i = 0; i < n; ++i) terms.push_back({random_group_elem(group, rng), coeff(rng)});
    HahnSeries s(field, group, std::move(terms));
    if (!s.has_no_terms()) return s;
  }
}

ValuationProbe<HahnSeries> hahn_probe(Field field, const GroupDescriptor& group) {
  ValuationProbe<HahnSeries> probe;
  probe.valuation = {"min Supp over " + group.to_string(), group, [](const HahnSeries& a) {
                       if (a.is_exact_zero()) return ExtendedValue::infinity();
                       return ExtendedValue(hs_valuation(a));
                     }};
  probe.sample = [field, group](std::mt19937_64& rng) { return random_hahn(field, group, rng); };
  probe.add = [](const HahnSeries& a, const HahnSeries& b) { return a + b; };
  probe.mul = [](const HahnSeries& a, const HahnSeries& b) { return a * b; };
  probe.is_zero = [](const HahnSeries& a) { return a.is_exact_zero(); };
  probe.show = [](const HahnSeries& a) { return a.to_string(); };
  return probe;
}

}  // namespace fieldunits
