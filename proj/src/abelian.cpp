#include "fieldunits/abelian.hpp"

#include <numeric>
#include <stdexcept>

#include "fieldunits/integer.hpp"

namespace fieldunits {

FgAbelianGroup::FgAbelianGroup(unsigned free_rank, std::vector<std::uint64_t> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw std::invalid_argument("FgAbelianGroup: invariant factors must be >= 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      throw std::invalid_argument("FgAbelianGroup: invariant factors must form a divisibility chain");
  }
}

FgAbelianGroup FgAbelianGroup::cyclic(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("FgAbelianGroup::cyclic: order must be positive");
  if (n == 1) return FgAbelianGroup();
  return FgAbelianGroup(0, {n});
}

bool is_indecomposable_fg(const FgAbelianGroup& group) {
  if (group.is_trivial()) return true;
  if (group.free_rank() == 1) return group.is_torsion_free();
  if (group.free_rank() > 1) return false;
  return group.torsion().size() == 1 && is_prime_power(group.torsion().front()).has_value();
}

std::string to_string(FieldFamily family) {
  switch (family) {
    case FieldFamily::F2: return "F2";
    case FieldFamily::F9: return "F9";
    case FieldFamily::FermatPrime: return "FermatPrime";
    case FieldFamily::MersennePlusOne: return "MersennePlusOne";
  }
  return "?";
}

Classification classify_finite_field(std::uint64_t q) {
  if (q < 2 || q > kMaxInteger) throw std::invalid_argument("classify_finite_field: q out of range");
  if (!is_prime_power(q)) throw std::invalid_argument("classify_finite_field: q must be a prime power");

  if (q == 2) return {q, Indecomposable{FieldFamily::F2}};
  if (q == 9) return {q, Indecomposable{FieldFamily::F9}};
  if (special_prime_kind(q).fermat) return {q, Indecomposable{FieldFamily::FermatPrime}};
  if (is_power_of_two(q) && special_prime_kind(q - 1).mersenne)
    return {q, Indecomposable{FieldFamily::MersennePlusOne}};

  const auto parts = primary_decomposition(q - 1);
  if (parts.size() < 2)
    throw std::logic_error("classify_finite_field: q - 1 is a prime power outside the four families, q = " +
                           std::to_string(q));
  const std::uint64_t a = parts.front();
  const std::uint64_t b = (q - 1) / a;
  return {q, Decomposable{a, b}};
}

}  // namespace fieldunits
