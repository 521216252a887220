// Finite fields F_{p^n} and their elements.
//
// A Field is a lightweight handle to interned, immutable field data; two
// handles compare equal iff they name the same (p, n). Elements are stored
// as codes: the coefficient vector in the generator `a` read as a base-p
// integer with the constant term least significant.
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fieldunits {

namespace detail {
struct FieldData;
}

class Field {
 public:
  using Code = std::uint64_t;

  /// GF(p^n) with the canonical modulus: the monic irreducible of degree n
  /// whose coefficient vector is minimal as a base-p integer.
  /// Throws std::invalid_argument if p is not prime, std::overflow_error
  /// if p^n > 2^63.
  static Field make(std::uint64_t p, unsigned n = 1);

  /// The field GF(2).
  static Field gf2() { return make(2, 1); }

  std::uint64_t characteristic() const;
  unsigned degree() const;
  std::uint64_t order() const;
  bool is_prime_field() const { return degree() == 1; }
  bool is_gf2() const { return characteristic() == 2 && degree() == 1; }

  /// Coefficients over F_p, constant first, length degree() + 1. Empty for prime fields.
  const std::vector<std::uint64_t>& modulus() const;

  /// "GF(p)" or "GF(p^n)".
  std::string name() const;

  Code zero() const { return 0; }
  Code one() const { return 1; }
  /// The generator `a`, i.e. x mod modulus. Throws std::domain_error for prime fields.
  Code generator() const;
  Code from_int(std::int64_t value) const;
  Code from_digits(std::span<const std::uint64_t> digits) const;
  std::vector<std::uint64_t> digits(Code c) const;
  bool contains(Code c) const { return c < order(); }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  /// Throws std::domain_error on zero.
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const;
  /// The unique b with b^p == a.
  Code pth_root(Code a) const;

  friend bool operator==(Field a, Field b) { return a.data_ == b.data_; }

 private:
  explicit Field(const detail::FieldData* data) : data_(data) {}
  static void build_tables(detail::FieldData& d);
  const detail::FieldData* data_;
};

/// An element of a finite field.
class FqElem {
 public:
  FqElem(Field field, Field::Code code);
  static FqElem from_int(Field field, std::int64_t value) { return FqElem(field, field.from_int(value)); }

  Field field() const { return field_; }
  Field::Code code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator-() const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem inv() const;
  FqElem pow(std::uint64_t e) const;

  friend bool operator==(const FqElem& a, const FqElem& b) { return a.field_ == b.field_ && a.code_ == b.code_; }

  std::string to_string() const;

 private:
  void check_same(const FqElem& o) const;
  Field field_;
  Field::Code code_;
};

}  // namespace fieldunits
