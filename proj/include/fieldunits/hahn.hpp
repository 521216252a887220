// Hahn series K((G)) with finite support, coefficients in F_q and exponents
// in an ordered value group, with an optional precision cutoff: a series
// carrying precision c stands for sum + O(x^c), i.e. every term with
// exponent >= c is unknown.
#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fieldunits/field.hpp"
#include "fieldunits/ordered_group.hpp"
#include "fieldunits/valuation.hpp"

namespace fieldunits {

class HahnSeries {
 public:
  struct Term {
    GroupElem exponent;
    Field::Code coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  /// The exact zero series.
  HahnSeries(Field field, GroupDescriptor group);
  /// Terms may come in any order; like exponents are combined, zero
  /// coefficients and terms at or beyond the precision are dropped.
  HahnSeries(Field field, GroupDescriptor group, std::vector<Term> terms,
             std::optional<GroupElem> precision = std::nullopt);

  static HahnSeries monomial(Field field, const GroupElem& exponent, Field::Code coeff = 1);
  static HahnSeries constant(Field field, GroupDescriptor group, Field::Code coeff);
  /// O(x^cutoff): no known terms.
  static HahnSeries big_o(Field field, const GroupElem& cutoff);

  Field field() const { return field_; }
  const GroupDescriptor& group() const { return group_; }
  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<GroupElem>& precision() const { return precision_; }
  bool is_exact() const { return !precision_.has_value(); }
  /// No known nonzero terms (exact zero, or O(x^c)).
  bool has_no_terms() const { return terms_.empty(); }
  bool is_exact_zero() const { return terms_.empty() && !precision_; }

  HahnSeries operator+(const HahnSeries& o) const;
  HahnSeries operator-() const;
  HahnSeries operator-(const HahnSeries& o) const { return *this + (-o); }
  HahnSeries operator*(const HahnSeries& o) const;
  HahnSeries scaled(Field::Code c) const;
  /// Multiplication by x^g; exact.
  HahnSeries shifted(const GroupElem& g) const;
  /// Drops terms with exponent >= cutoff and tightens the precision to it.
  HahnSeries truncated(const GroupElem& cutoff) const;

  friend bool operator==(const HahnSeries&, const HahnSeries&) = default;

  /// Terms ascending, `c*x^(e)`, then `+O(x^(e))` when inexact.
  std::string to_string() const;

 private:
  void check_compatible(const HahnSeries& o) const;
  void normalize(std::vector<Term> terms);

  Field field_;
  GroupDescriptor group_;
  std::vector<Term> terms_;
  std::optional<GroupElem> precision_;
};

/// min Supp A. Throws std::domain_error when A has no known terms.
GroupElem hs_valuation(const HahnSeries& a);

/// Geometric-series inverse with n_terms terms of the unit part. The result
/// is correct below its precision, which is -v(A) + n_terms * v(R) where
/// A = c x^v(A) (1 + R), further limited by the precision of A. A monomial
/// has an exact inverse.
/// Throws std::domain_error for A without terms, std::invalid_argument for n_terms = 0.
HahnSeries hs_inv(const HahnSeries& a, std::size_t n_terms);

/// The section s(g) = x^g.
HahnSeries hs_section(Field field, const GroupElem& g);

/// (v(A), A x^-v(A)). Throws std::domain_error when A has no known terms.
std::pair<GroupElem, HahnSeries> hs_unit_split(const HahnSeries& a);

HahnSeries parse_hahn(Field field, const GroupDescriptor& group, std::string_view text);

/// A random exact series with 1..max_terms terms and small exponents.
HahnSeries random_hahn(Field field, const GroupDescriptor& group, std::mt19937_64& rng, unsigned max_terms = 4);
GroupElem random_group_elem(const GroupDescriptor& group, std::mt19937_64& rng, int range = 5);

/// v(A) = min Supp A on exact series, with a random-series sampler.
ValuationProbe<HahnSeries> hahn_probe(Field field, const GroupDescriptor& group);

}  // namespace fieldunits
