// Ordered abelian value groups: Z, Z^k under the lexicographic order, and
// the dyadic rationals Z[1/2].
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fieldunits {

/// numerator / 2^exponent, reduced: numerator odd or exponent 0.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t numerator, unsigned exponent = 0);

  std::int64_t numerator() const { return num_; }
  unsigned exponent() const { return exp_; }
  bool is_integer() const { return exp_ == 0; }

  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-() const;
  Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
  /// Integer multiple; overflow-checked.
  Dyadic operator*(std::int64_t k) const;
  /// this * 2^k, exact.
  Dyadic scaled_pow2(int k) const;
  /// The integer numerator * 2^(level - exponent); throws std::domain_error
  /// when level < exponent.
  std::int64_t at_level(unsigned level) const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// "3/4", "-1/2", "5".
  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  unsigned exp_ = 0;
};

/// Accepts "n", "n/2^k" and "n/d" with d a power of two.
Dyadic parse_dyadic(std::string_view text);

enum class GroupKind { Int, IntVecLex, Dyadic };

/// Which value group an element belongs to; arity is used by IntVecLex only.
struct GroupDescriptor {
  GroupKind kind = GroupKind::Int;
  unsigned arity = 1;

  static GroupDescriptor integers() { return {GroupKind::Int, 1}; }
  static GroupDescriptor lex(unsigned k) { return {GroupKind::IntVecLex, k}; }
  static GroupDescriptor dyadic() { return {GroupKind::Dyadic, 1}; }

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
  /// "Z", "Z^k", "Z[1/2]".
  std::string to_string() const;
};

/// "Z", "Z^k" (lexicographic), "Z[1/2]".
GroupDescriptor parse_group(std::string_view text);

struct LexVector {
  std::vector<std::int64_t> coords;
  friend bool operator==(const LexVector&, const LexVector&) = default;
};

class GroupElem {
 public:
  GroupElem() : value_(std::int64_t{0}) {}
  GroupElem(std::int64_t v) : value_(v) {}
  GroupElem(LexVector v);
  GroupElem(Dyadic v) : value_(v) {}

  static GroupElem zero(const GroupDescriptor& g);

  GroupDescriptor group() const;
  bool is_zero() const;

  std::int64_t as_int() const;
  const LexVector& as_lex() const;
  const Dyadic& as_dyadic() const;

  /// Throws std::invalid_argument for mixed variants or arities.
  GroupElem operator+(const GroupElem& o) const;
  GroupElem operator-() const;
  GroupElem operator-(const GroupElem& o) const { return *this + (-o); }
  GroupElem operator*(std::int64_t k) const;

  friend bool operator==(const GroupElem&, const GroupElem&) = default;
  /// Total order; throws std::invalid_argument for mixed variants or arities.
  friend std::strong_ordering operator<=>(const GroupElem& a, const GroupElem& b);

  /// "3", "(1,-2)", "3/4".
  std::string to_string() const;

 private:
  void check_same(const GroupElem& o) const;
  std::variant<std::int64_t, LexVector, Dyadic> value_;
};

GroupElem min(const GroupElem& a, const GroupElem& b);

/// Parses an element of the given group: an integer, a tuple "(a,b,...)" or
/// "a,b,...", or a dyadic fraction.
GroupElem parse_group_elem(const GroupDescriptor& g, std::string_view text);

/// Overflow-checked int64 arithmetic; throws std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace fieldunits
