// Bit-packed polynomials over GF(2): 64 coefficients per word, bit i of
// word w holding the coefficient of x^(64w + i).
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace fieldunits {

class Gf2Poly {
 public:
  Gf2Poly() = default;
  explicit Gf2Poly(std::vector<std::uint64_t> words);
  /// Sum of x^e over the given exponents (repeats cancel).
  static Gf2Poly from_exponents(std::initializer_list<std::size_t> exponents);
  static Gf2Poly monomial(std::size_t e);
  static Gf2Poly one() { return monomial(0); }
  static Gf2Poly x() { return monomial(1); }

  /// -1 for the zero polynomial.
  long degree() const;
  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
  bool coeff(std::size_t i) const;
  void set_coeff(std::size_t i, bool value);
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::size_t popcount() const;

  Gf2Poly& operator+=(const Gf2Poly& o);
  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator-(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
  Gf2Poly& operator*=(const Gf2Poly& o) { return *this = *this * o; }

  Gf2Poly square() const;
  /// Throws std::domain_error on a zero divisor.
  std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& divisor) const;
  Gf2Poly operator%(const Gf2Poly& divisor) const;
  Gf2Poly operator/(const Gf2Poly& divisor) const { return divmod(divisor).first; }
  Gf2Poly shifted(std::size_t k) const;

  Gf2Poly derivative() const;
  /// Square root of a polynomial whose odd coefficients vanish; throws std::domain_error otherwise.
  Gf2Poly sqrt() const;
  bool is_square() const;
  bool evaluate(bool at) const;
  Gf2Poly pow(std::uint64_t e) const;

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;
  /// Canonical order: by degree, then as a binary integer.
  friend std::strong_ordering operator<=>(const Gf2Poly& a, const Gf2Poly& b);

 private:
  void normalize();
  std::vector<std::uint64_t> words_;
};

Gf2Poly gcd(Gf2Poly a, Gf2Poly b);
Gf2Poly mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m);
Gf2Poly sqrmod(const Gf2Poly& a, const Gf2Poly& m);
Gf2Poly powmod(Gf2Poly base, std::uint64_t e, const Gf2Poly& m);

/// Rabin's test. Throws std::domain_error for constants.
bool is_irreducible(const Gf2Poly& f);

struct Gf2Factor {
  Gf2Poly poly;
  unsigned multiplicity;
  friend bool operator==(const Gf2Factor&, const Gf2Factor&) = default;
};

/// Squarefree parts (f_i, i) with f = prod f_i^i, f_i squarefree, pairwise coprime.
std::vector<Gf2Factor> squarefree_decomposition(const Gf2Poly& f);

/// Pairs (g_d, d): g_d is the product of the degree-d irreducible factors of a
/// squarefree f.
std::vector<std::pair<Gf2Poly, unsigned>> distinct_degree_factorization(const Gf2Poly& f);

/// Splits a squarefree product of irreducibles of degree d using the trace map.
std::vector<Gf2Poly> equal_degree_factorization(const Gf2Poly& f, unsigned d, std::uint64_t seed);

/// Complete factorization in canonical order. Throws std::domain_error on zero.
std::vector<Gf2Factor> factor(const Gf2Poly& f, std::uint64_t seed = 0);

}  // namespace fieldunits
