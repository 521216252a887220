// Dense univariate polynomials over F_q, with gcd, irreducibility testing
// and complete factorization.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fieldunits/field.hpp"
#include "fieldunits/gf2poly.hpp"

namespace fieldunits {

class Poly {
 public:
  using Code = Field::Code;

  explicit Poly(Field field, std::string variable = "x");
  /// Coefficients constant first; trailing zeros are dropped.
  Poly(Field field, std::vector<Code> coeffs, std::string variable = "x");

  static Poly constant(const FqElem& c, std::string variable = "x");
  static Poly monomial(Field field, Code c, std::size_t e, std::string variable = "x");
  static Poly x(Field field, std::string variable = "x") { return monomial(field, 1, 1, std::move(variable)); }
  static Poly from_gf2(const Gf2Poly& f, std::string variable = "x");

  Field field() const { return field_; }
  const std::string& variable() const { return variable_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<Code>& coeffs() const { return coeffs_; }
  Code coeff_code(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  FqElem coeff(std::size_t i) const { return FqElem(field_, coeff_code(i)); }
  /// Throws std::domain_error for the zero polynomial.
  FqElem leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const FqElem& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// (quotient, remainder); throws std::domain_error on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  Poly operator/(const Poly& divisor) const { return divmod(divisor).first; }
  Poly operator%(const Poly& divisor) const { return divmod(divisor).second; }

  FqElem eval(const FqElem& at) const;
  Poly derivative() const;
  Poly monic() const;
  Poly pow(std::uint64_t e) const;
  /// g with g^p == *this; requires every exponent with a nonzero
  /// coefficient to be divisible by p. Throws std::domain_error otherwise.
  Poly pth_root() const;
  Poly with_variable(std::string variable) const;

  /// Only meaningful over GF(2).
  Gf2Poly to_gf2() const;

  friend bool operator==(const Poly& a, const Poly& b);
  /// Canonical order: degree first, then the coefficient codes from the top down.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  void normalize();
  void check_compatible(const Poly& o) const;

  Field field_;
  std::vector<Code> coeffs_;
  std::string variable_;
};

/// Monic gcd. Throws std::domain_error if both are zero.
Poly gcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus);

/// Rabin's test. Throws std::domain_error for constant input.
bool is_irreducible(const Poly& f);

struct PolyFactor {
  Poly poly;
  unsigned multiplicity;
  friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

struct PolyFactorization {
  FqElem unit;
  std::vector<PolyFactor> factors;

  Poly expand() const;
};

/// Squarefree decomposition of a monic polynomial: (f_i, i) pairs.
std::vector<PolyFactor> squarefree_decomposition(const Poly& monic_f);

/// unit * prod factor^multiplicity, factors monic irreducible in canonical
/// order. Deterministic for a fixed seed. Throws std::domain_error on zero.
PolyFactorization factor_poly(const Poly& f, std::uint64_t seed = 0);

}  // namespace fieldunits
