// The perfect closure of F_2(t): the union of the fields F_2(t^(1/2^k)).
// An element at level k is stored as N(s)/D(s) with s = t^(1/2^k) and
// N, D in F_2[s]. Squaring in characteristic 2 is P(s)^2 = P(s^2), so
// Frobenius only moves the level.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fieldunits/gf2poly.hpp"
#include "fieldunits/hahn.hpp"
#include "fieldunits/ordered_group.hpp"
#include "fieldunits/poly.hpp"

namespace fieldunits {

/// A polynomial in t with exponents in Z[1/2], all >= 0.
class DyadicPoly {
 public:
  DyadicPoly() = default;
  /// poly(s) with s = t^(1/2^level); the stored level is made minimal.
  DyadicPoly(unsigned level, Gf2Poly poly);
  /// Sum of t^e; repeated exponents cancel. Throws std::invalid_argument on a negative exponent.
  static DyadicPoly from_exponents(const std::vector<Dyadic>& exponents);

  unsigned level() const { return level_; }
  const Gf2Poly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  /// Exponents in increasing order.
  std::vector<Dyadic> exponents() const;

  DyadicPoly operator+(const DyadicPoly& o) const;
  DyadicPoly operator*(const DyadicPoly& o) const;
  /// The same element written at a level >= level().
  Gf2Poly at_level(unsigned level) const;

  friend bool operator==(const DyadicPoly&, const DyadicPoly&) = default;
  /// Descending terms: "t^(3/2)+t^(1/2)", "t^2+1".
  std::string to_string() const;

 private:
  unsigned level_ = 0;
  Gf2Poly poly_;
};

class DyadicRatFunc {
 public:
  /// Zero.
  DyadicRatFunc() : den_(Gf2Poly::one()) {}
  /// num(s)/den(s) with s = t^(1/2^level). Throws std::domain_error for a zero denominator.
  DyadicRatFunc(unsigned level, Gf2Poly num, Gf2Poly den);
  explicit DyadicRatFunc(const DyadicPoly& p) : DyadicRatFunc(p.level(), p.poly(), Gf2Poly::one()) {}
  static DyadicRatFunc one() { return DyadicRatFunc(0, Gf2Poly::one(), Gf2Poly::one()); }

  unsigned level() const { return level_; }
  const Gf2Poly& num() const { return num_; }
  const Gf2Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  DyadicPoly numerator() const { return DyadicPoly(level_, num_); }
  DyadicPoly denominator() const { return DyadicPoly(level_, den_); }

  DyadicRatFunc operator+(const DyadicRatFunc& o) const;
  DyadicRatFunc operator-(const DyadicRatFunc& o) const { return *this + o; }
  DyadicRatFunc operator*(const DyadicRatFunc& o) const;
  /// Throws std::domain_error when dividing by zero.
  DyadicRatFunc operator/(const DyadicRatFunc& o) const;
  DyadicRatFunc inv() const;
  DyadicRatFunc pow(std::int64_t e) const;

  /// Normalized forms are unique, so equality is structural.
  friend bool operator==(const DyadicRatFunc&, const DyadicRatFunc&) = default;
  std::string to_string() const;

 private:
  void normalize();

  unsigned level_ = 0;
  Gf2Poly num_;
  Gf2Poly den_;
};

DyadicRatFunc frobenius(const DyadicRatFunc& q);
DyadicRatFunc frobenius_inv(const DyadicRatFunc& q);
/// Minimal k with q in F_2(t^(1/2^k)). Throws std::domain_error for zero.
unsigned pc_level(const DyadicRatFunc& q);

struct PCFactor {
  Poly poly;  // monic irreducible over F_2 in t
  Dyadic exponent;
  friend bool operator==(const PCFactor&, const PCFactor&) = default;
};

/// prod poly^exponent; factors distinct, in canonical order, exponents nonzero.
class PCDecomposition {
 public:
  PCDecomposition() = default;
  /// Validates the invariants; throws std::invalid_argument on violation.
  explicit PCDecomposition(std::vector<PCFactor> factors);
  const std::vector<PCFactor>& factors() const& { return factors_; }
  std::vector<PCFactor> factors() && { return std::move(factors_); }
  PCDecomposition combine(const PCDecomposition& o) const;
  friend bool operator==(const PCDecomposition&, const PCDecomposition&) = default;

 private:
  std::vector<PCFactor> factors_;
};

/// Throws std::domain_error for zero.
PCDecomposition pc_decompose(const DyadicRatFunc& q, std::uint64_t seed = 0);
DyadicRatFunc pc_recompose(const PCDecomposition& d);

/// Polynomials with exponents like t^(3/2); `^(m/2^k)` also applies to
/// parenthesized expressions.
DyadicRatFunc parse_dyadic_ratfunc(std::string_view text);

/// The series sum t^e in F_2((Z[1/2])).
HahnSeries to_hahn(const DyadicPoly& p);

/// Level uniform in [0, max_level]; numerator and denominator of degree
/// <= max_degree in s before normalization.
DyadicRatFunc random_dyadic_ratfunc(std::mt19937_64& rng, unsigned max_level = 3, unsigned max_degree = 10);
DyadicPoly random_dyadic_poly(std::mt19937_64& rng, unsigned max_level = 3, unsigned max_degree = 10);

}  // namespace fieldunits
