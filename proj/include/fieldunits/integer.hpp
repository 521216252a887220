// Integer number theory for 64-bit inputs: primality, factorization,
// prime powers and the Fermat/Mersenne predicates.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace fieldunits {

/// Largest integer accepted by factor_integer and the classifier.
inline constexpr std::uint64_t kMaxInteger = std::uint64_t{1} << 63;

struct PrimeFactor {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// n together with its prime factorization, primes strictly increasing.
class FactoredInteger {
 public:
  FactoredInteger() = default;
  FactoredInteger(std::uint64_t value, std::vector<PrimeFactor> factors);

  std::uint64_t value() const { return value_; }
  const std::vector<PrimeFactor>& factors() const& { return factors_; }
  std::vector<PrimeFactor> factors() && { return std::move(factors_); }

 private:
  std::uint64_t value_ = 1;
  std::vector<PrimeFactor> factors_;
};

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct SpecialPrimeKind {
  bool fermat = false;
  bool mersenne = false;
  friend bool operator==(const SpecialPrimeKind&, const SpecialPrimeKind&) = default;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Throws std::out_of_range for n == 0 or n > 2^63.
FactoredInteger factor_integer(std::uint64_t n);

/// (p, k) with p^k == n, or nullopt for n == 1 and non prime powers.
std::optional<PrimePower> is_prime_power(std::uint64_t n);

bool is_power_of_two(std::uint64_t n);

/// Throws std::invalid_argument for n < 2.
SpecialPrimeKind special_prime_kind(std::uint64_t n);

/// Orders of the prime-power cyclic factors of C_n, by increasing prime.
std::vector<std::uint64_t> primary_decomposition(std::uint64_t n);

/// Floor of the k-th root of n.
std::uint64_t integer_root(std::uint64_t n, unsigned k);

}  // namespace fieldunits
