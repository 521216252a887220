// The rational function field F_q(x) and the explicit isomorphism
//
//   F_q(x)^x  ->  F_q^x  (+)  (+)_{f monic irreducible} Z
//
// sending Q to its leading constant and the exponents of its irreducible
// factors.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fieldunits/lattice.hpp"
#include "fieldunits/poly.hpp"

namespace fieldunits {

/// num/den with den monic, gcd(num, den) = 1; zero is 0/1.
class RatFunc {
 public:
  /// Throws std::domain_error for a zero denominator.
  RatFunc(Poly num, Poly den);
  explicit RatFunc(Poly num);
  static RatFunc constant(const FqElem& c, std::string variable = "x");
  static RatFunc zero(Field field, std::string variable = "x");
  static RatFunc one(Field field, std::string variable = "x");

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  Field field() const { return num_.field(); }
  const std::string& variable() const { return den_.variable(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  /// Throws std::domain_error when dividing by zero.
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inv() const;
  RatFunc pow(std::int64_t e) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// "num" when the denominator is 1, otherwise "(num)/(den)" with
  /// parentheses only around multi-term parts.
  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

RatFunc parse_ratfunc(Field field, std::string_view text, const std::string& variable = "x");

struct UnitFactor {
  Poly poly;
  std::int64_t exponent;
  friend bool operator==(const UnitFactor&, const UnitFactor&) = default;
};

/// constant * prod poly^exponent; factors monic irreducible, distinct, in
/// canonical order, exponents nonzero.
class UnitDecomposition {
 public:
  /// Validates the invariants; throws std::invalid_argument on violation.
  UnitDecomposition(FqElem constant, std::vector<UnitFactor> factors);

  const FqElem& constant() const { return constant_; }
  const std::vector<UnitFactor>& factors() const& { return factors_; }
  std::vector<UnitFactor> factors() && { return std::move(factors_); }

  /// Group operation of F_q^x (+) Z^(Delta): multiply constants, add exponents.
  UnitDecomposition combine(const UnitDecomposition& o) const;

  friend bool operator==(const UnitDecomposition&, const UnitDecomposition&) = default;

 private:
  FqElem constant_;
  std::vector<UnitFactor> factors_;
};

/// Throws std::domain_error for Q = 0.
UnitDecomposition decompose(const RatFunc& q, std::uint64_t seed = 0);
RatFunc recompose(const UnitDecomposition& d, const std::string& variable = "x");

/// v_p(Q) for monic irreducible p. Throws std::domain_error for Q = 0 and
/// std::invalid_argument when p is not monic irreducible.
std::int64_t valuation_at(const RatFunc& q, const Poly& p);

/// Rows are the exponent vectors of the inputs; columns the irreducibles that
/// occur, in canonical order.
struct ExponentMatrix {
  std::vector<Poly> columns;
  IntMatrix rows;
};

ExponentMatrix exponent_matrix(const std::vector<RatFunc>& elems, std::uint64_t seed = 0);

/// Rank of the subgroup of F_q(x)^x generated by elems, modulo torsion.
/// Throws std::domain_error if any element is zero.
std::size_t multiplicative_rank(const std::vector<RatFunc>& elems, std::uint64_t seed = 0);

}  // namespace fieldunits
