// Finitely generated abelian groups and the classification of finite
// fields whose multiplicative group is indecomposable.
#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace fieldunits {

/// Z^free_rank + C_{d_1} + ... + C_{d_k} with d_1 | d_2 | ... | d_k, each d_i >= 2.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  FgAbelianGroup(unsigned free_rank, std::vector<std::uint64_t> torsion);

  static FgAbelianGroup cyclic(std::uint64_t n);
  static FgAbelianGroup free(unsigned rank) { return FgAbelianGroup(rank, {}); }

  unsigned free_rank() const { return free_rank_; }
  const std::vector<std::uint64_t>& torsion() const { return torsion_; }
  bool is_torsion_free() const { return torsion_.empty(); }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

 private:
  unsigned free_rank_ = 0;
  std::vector<std::uint64_t> torsion_;
};

/// Trivial, Z, or C_{p^k}.
bool is_indecomposable_fg(const FgAbelianGroup& group);

enum class FieldFamily { F2, F9, FermatPrime, MersennePlusOne };

std::string to_string(FieldFamily family);

struct Indecomposable {
  FieldFamily family;
};

/// q - 1 = a * b with gcd(a, b) = 1 and a, b >= 2.
struct Decomposable {
  std::uint64_t a;
  std::uint64_t b;
};

struct Classification {
  std::uint64_t q;
  std::variant<Indecomposable, Decomposable> verdict;

  bool indecomposable() const { return std::holds_alternative<Indecomposable>(verdict); }
};

/// Matches q against the four families F_2, F_9, F_q (q Fermat prime) and
/// F_{p+1} (p Mersenne prime); otherwise returns the splitting of C_{q-1}
/// that takes the full power of the smallest prime dividing q - 1.
/// Throws std::invalid_argument if q is not a prime power <= 2^63.
Classification classify_finite_field(std::uint64_t q);

}  // namespace fieldunits
