// Simple extensions F_q(t)[y]/(m(y)) with m monic and squarefree, and the
// field norm N(g(y)) = Res_y(m, g) = prod g(theta_i) over the roots of m.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fieldunits/ratfunc.hpp"

namespace fieldunits {

enum class IrreducibilityStatus { Verified, AssumedSquarefree };
std::string to_string(IrreducibilityStatus s);

/// A polynomial in y with coefficients in F_q(t), constant term first.
using YPoly = std::vector<RatFunc>;

class SimpleExtension {
 public:
  /// m must be monic in y of degree >= 2 and squarefree. Throws
  /// std::invalid_argument otherwise (including m' = 0).
  static SimpleExtension make(Field field, YPoly m, std::string base_variable = "t", std::string variable = "y");

  Field field() const { return data_->field; }
  const std::string& base_variable() const { return data_->base_variable; }
  const std::string& variable() const { return data_->variable; }
  const YPoly& modulus() const { return data_->m; }
  std::size_t degree() const { return data_->m.size() - 1; }
  IrreducibilityStatus status() const { return data_->status; }
  /// A point t = a at which m specializes to an irreducible of degree d.
  const std::optional<FqElem>& witness() const { return data_->witness; }

  friend bool operator==(const SimpleExtension& a, const SimpleExtension& b);

  /// "GF(2)(t)[y]/(y^2+y+t)".
  std::string to_string() const;

 private:
  struct Data {
    Field field;
    std::string base_variable;
    std::string variable;
    YPoly m;
    IrreducibilityStatus status;
    std::optional<FqElem> witness;
  };
  explicit SimpleExtension(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

class ExtElem {
 public:
  /// Reduces coeffs modulo m.
  ExtElem(SimpleExtension ext, YPoly coeffs);
  static ExtElem base(SimpleExtension ext, const RatFunc& c);
  static ExtElem generator(SimpleExtension ext);

  const SimpleExtension& extension() const { return ext_; }
  /// Exactly degree() coefficients, constant term first.
  const YPoly& coeffs() const { return coeffs_; }
  bool is_zero() const;

  ExtElem operator+(const ExtElem& o) const;
  ExtElem operator-(const ExtElem& o) const;
  ExtElem operator-() const;
  ExtElem operator*(const ExtElem& o) const;
  ExtElem pow(std::uint64_t e) const;

  friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.ext_ == b.ext_ && a.coeffs_ == b.coeffs_; }

  /// Descending powers of y, e.g. "y+t", "(t+1)*y^2+1/t".
  std::string to_string() const;

 private:
  void check_compatible(const ExtElem& o) const;
  SimpleExtension ext_;
  YPoly coeffs_;
};

/// Throws std::domain_error for zero.
RatFunc norm(const ExtElem& u);

/// Determinant over F_q[t] by fraction-free (Bareiss) elimination.
Poly determinant(std::vector<std::vector<Poly>> matrix);

/// "GF(q)(t)[y]/(m)".
SimpleExtension parse_extension(std::string_view text);
ExtElem parse_ext_elem(const SimpleExtension& ext, std::string_view text);

/// Every coefficient is a random nonzero rational function of degree <= max_degree.
ExtElem random_ext_elem(const SimpleExtension& ext, unsigned max_degree, std::mt19937_64& rng);

}  // namespace fieldunits
