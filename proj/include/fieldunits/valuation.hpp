// Valuations v: K^x -> G, sections s: G -> K^x of free value groups, and
// the splitting K^x = s(G) x ker v given by (g, w) |-> s(g) w.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fieldunits/ordered_group.hpp"
#include "fieldunits/ratfunc.hpp"

namespace fieldunits {

using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// A value-group element or +infinity (the value of 0).
class ExtendedValue {
 public:
  ExtendedValue(GroupElem g) : value_(std::move(g)) {}
  static ExtendedValue infinity() { return ExtendedValue(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::domain_error for infinity.
  const GroupElem& value() const;

  friend bool operator==(const ExtendedValue&, const ExtendedValue&) = default;
  friend std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b);

  std::string to_string() const { return value_ ? value_->to_string() : "inf"; }

 private:
  ExtendedValue() = default;
  std::optional<GroupElem> value_;
};

/// The exponent of p in r. Throws std::domain_error for r = 0 and
/// std::invalid_argument when p is not prime.
std::int64_t padic_valuation(const Rational& r, std::uint64_t p);

/// "a", "-a/b".
Rational parse_rational(std::string_view text);

template <class T>
struct Valuation {
  std::string name;
  GroupDescriptor group;
  std::function<ExtendedValue(const T&)> eval;

  ExtendedValue operator()(const T& x) const { return eval(x); }
};

/// A valuation together with the field operations and a sampler of nonzero
/// elements, enough to test the valuation axioms on random pairs.
template <class T>
struct ValuationProbe {
  Valuation<T> valuation;
  std::function<T(std::mt19937_64&)> sample;
  std::function<T(const T&, const T&)> add;
  std::function<T(const T&, const T&)> mul;
  std::function<bool(const T&)> is_zero;
  std::function<std::string(const T&)> show;
};

enum class Axiom { Multiplicative, Ultrametric, ZeroIsInfinity };

std::string to_string(Axiom axiom);

template <class T>
struct Counterexample {
  T x;
  T y;
  Axiom axiom;
};

template <class T>
struct AxiomReport {
  std::size_t pairs_checked = 0;
  std::optional<Counterexample<T>> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

/// Checks v(xy) = v(x) + v(y) and v(x + y) >= min(v(x), v(y)) on the given
/// pairs (the ultrametric check is skipped when x + y = 0) and returns the
/// first violation.
template <class T>
AxiomReport<T> check_valuation_axioms_on(const ValuationProbe<T>& probe, const std::vector<std::pair<T, T>>& pairs) {
  AxiomReport<T> report;
  const auto& v = probe.valuation;
  for (const auto& [x, y] : pairs) {
    ++report.pairs_checked;
    const ExtendedValue vx = v(x), vy = v(y);
    if (probe.is_zero(x) != vx.is_infinite() || probe.is_zero(y) != vy.is_infinite()) {
      report.counterexample = Counterexample<T>{x, y, Axiom::ZeroIsInfinity};
      return report;
    }
    const ExtendedValue vxy = v(probe.mul(x, y));
    const bool mult_ok = (vx.is_infinite() || vy.is_infinite()) ? vxy.is_infinite()
                                                                   : (!vxy.is_infinite() && vxy.value() == vx.value() + vy.value());
    if (!mult_ok) {
      report.counterexample = Counterexample<T>{x, y, Axiom::Multiplicative};
      return report;
    }
    const T sum = probe.add(x, y);
    if (probe.is_zero(sum)) continue;
    if (v(sum) < std::min(vx, vy)) {
      report.counterexample = Counterexample<T>{x, y, Axiom::Ultrametric};
      return report;
    }
  }
  return report;
}

/// Seeded random version of check_valuation_axioms_on.
template <class T>
AxiomReport<T> check_valuation_axioms(const ValuationProbe<T>& probe, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("check_valuation_axioms: trials must be positive");
  std::mt19937_64 rng(seed);
  AxiomReport<T> total;
  for (std::size_t i = 0; i < trials; ++i) {
    T x = probe.sample(rng);
    T y = probe.sample(rng);
    auto r = check_valuation_axioms_on(probe, std::vector<std::pair<T, T>>{{x, y}});
    total.pairs_checked += r.pairs_checked;
    if (!r.passed()) {
      total.counterexample = std::move(r.counterexample);
      return total;
    }
  }
  return total;
}

/// x^e for e of either sign, using only *, / and a multiplicative identity.
template <class T>
T integer_power(const T& x, std::int64_t e, const T& one) {
  T result = one;
  T base = x;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return e < 0 ? one / result : result;
}

namespace detail {
/// Integer coordinates of g in the basis; throws std::invalid_argument when
/// the basis is not a Z-basis of the group.
std::vector<std::int64_t> basis_coordinates(const std::vector<GroupElem>& basis, const GroupElem& g);
void check_free_basis(const GroupDescriptor& group, const std::vector<GroupElem>& basis);
}  // namespace detail

/// A homomorphic right inverse of a valuation whose value group is free,
/// determined by the images of a basis.
template <class T>
class Section {
 public:
  Section(Valuation<T> valuation, std::vector<GroupElem> basis, std::vector<T> images, T one)
      : valuation_(std::move(valuation)), basis_(std::move(basis)), images_(std::move(images)), one_(std::move(one)) {}

  const Valuation<T>& valuation() const { return valuation_; }
  const std::vector<GroupElem>& basis() const { return basis_; }
  const std::vector<T>& images() const { return images_; }

  /// prod images[i]^c_i where g = sum c_i basis[i].
  T operator()(const GroupElem& g) const {
    const auto coords = detail::basis_coordinates(basis_, g);
    T result = one_;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0) result = result * integer_power(images_[i], coords[i], one_);
    return result;
  }

 private:
  Valuation<T> valuation_;
  std::vector<GroupElem> basis_;
  std::vector<T> images_;
  T one_;
};

/// Builds the section sending basis[i] to images[i]. Throws
/// std::invalid_argument when the value group is not free on the basis
/// (in particular for Z[1/2]) or when v(images[i]) != basis[i].
template <class T>
Section<T> section_free(const Valuation<T>& valuation, std::vector<GroupElem> basis, std::vector<T> images, T one) {
  detail::check_free_basis(valuation.group, basis);
  if (basis.size() != images.size()) throw std::invalid_argument("section_free: basis and images differ in length");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const ExtendedValue vi = valuation(images[i]);
    if (vi.is_infinite() || !(vi.value() == basis[i]))
      throw std::invalid_argument("section_free: image " + std::to_string(i) + " has valuation " + vi.to_string() +
                                  ", expected " + basis[i].to_string());
  }
  return Section<T>(valuation, std::move(basis), std::move(images), std::move(one));
}

/// (v(u), u / s(v(u))). Throws std::domain_error for u = 0.
template <class T>
std::pair<GroupElem, T> split_unit(const T& u, const Section<T>& s) {
  const ExtendedValue vu = s.valuation()(u);
  if (vu.is_infinite()) throw std::domain_error("split_unit: zero is not a unit");
  T w = u / s(vu.value());
  const ExtendedValue vw = s.valuation()(w);
  if (vw.is_infinite() || !vw.value().is_zero()) throw std::logic_error("split_unit: section is not a right inverse");
  return {vu.value(), std::move(w)};
}

/// s(g) * w. Throws std::invalid_argument unless v(w) = 0.
template <class T>
T recombine(const GroupElem& g, const T& w, const Section<T>& s) {
  const ExtendedValue vw = s.valuation()(w);
  if (vw.is_infinite() || !vw.value().is_zero())
    throw std::invalid_argument("recombine: w must lie in the kernel of the valuation (v(w) = " + vw.to_string() + ")");
  return s(g) * w;
}

// Concrete valuations and probes.

Valuation<Rational> padic(std::uint64_t p);
ValuationProbe<Rational> padic_probe(std::uint64_t p);

/// v_p on F_q(x) for a monic irreducible p.
Valuation<RatFunc> polynomial_valuation(const Poly& p);
ValuationProbe<RatFunc> polynomial_valuation_probe(const Poly& p, unsigned max_degree = 6);

/// deg on F_q[x] \ {0}: multiplicative, but not ultrametric.
ValuationProbe<RatFunc> degree_map_probe(Field field, unsigned max_degree = 6);

RatFunc random_ratfunc(Field field, unsigned max_degree, std::mt19937_64& rng, const std::string& variable = "x");
Poly random_poly(Field field, unsigned max_degree, std::mt19937_64& rng, const std::string& variable = "x");

}  // namespace fieldunits
