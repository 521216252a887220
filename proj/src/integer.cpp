#include "fieldunits/integer.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fieldunits {

FactoredInteger::FactoredInteger(std::uint64_t value, std::vector<PrimeFactor> factors)
    : value_(value), factors_(std::move(factors)) {
  unsigned __int128 product = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    if (f.exponent == 0 || !is_prime(f.prime))
      throw std::invalid_argument("FactoredInteger: invalid prime factor " + std::to_string(f.prime));
    if (i > 0 && factors_[i - 1].prime >= f.prime)
      throw std::invalid_argument("FactoredInteger: primes must be strictly increasing");
    for (unsigned e = 0; e < f.exponent; ++e) {
      product *= f.prime;
      if (product > value_) throw std::invalid_argument("FactoredInteger: product exceeds value");
    }
  }
  if (product != value_) throw std::invalid_argument("FactoredInteger: product does not match value");
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;
  const std::uint64_t d0 = n - 1;
  const int s = std::countr_zero(d0);
  const std::uint64_t d = d0 >> s;
  // These twelve witnesses are sufficient for all n < 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// Brent's variant of Pollard rho; n is odd, composite and not a prime power
// of a small prime.
std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  split_into(d, out);
  split_into(n / d, out);
}

}  // namespace

FactoredInteger factor_integer(std::uint64_t n) {
  if (n == 0 || n > kMaxInteger)
    throw std::out_of_range("factor_integer: argument must lie in [1, 2^63]");
  std::map<std::uint64_t, unsigned> found;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p < 1000 && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      ++found[p];
      rest /= p;
    }
  }
  split_into(rest, found);
  std::vector<PrimeFactor> factors;
  for (auto [p, e] : found) factors.push_back({p, e});
  return FactoredInteger(n, std::move(factors));
}

std::uint64_t integer_root(std::uint64_t n, unsigned k) {
  if (k == 0) throw std::invalid_argument("integer_root: k must be positive");
  if (k == 1 || n < 2) return n;
  if (k >= 64) return 1;
  // Binary search on r with r^k <= n, overflow-checked.
  auto pow_le = [&](std::uint64_t r) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
      acc *= r;
      if (acc > n) return false;
    }
    return true;
  };
  std::uint64_t lo = 1, hi = std::uint64_t{1} << (64 / k + 1);
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (pow_le(mid))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

std::optional<PrimePower> is_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  for (unsigned k = 63; k >= 1; --k) {
    const std::uint64_t r = integer_root(n, k);
    if (r < 2) continue;
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < k; ++i) acc *= r;
    if (acc == n && is_prime(r)) return PrimePower{r, k};
  }
  return std::nullopt;
}

bool is_power_of_two(std::uint64_t n) { return std::has_single_bit(n); }

SpecialPrimeKind special_prime_kind(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("special_prime_kind: n must be at least 2");
  SpecialPrimeKind kind;
  if (!is_prime(n)) return kind;
  kind.fermat = is_power_of_two(n - 1);
  kind.mersenne = n != UINT64_MAX && is_power_of_two(n + 1);
  return kind;
}

std::vector<std::uint64_t> primary_decomposition(std::uint64_t n) {
  std::vector<std::uint64_t> orders;
  for (const auto& f : factor_integer(n).factors()) {
    std::uint64_t q = 1;
    for (unsigned e = 0; e < f.exponent; ++e) q *= f.prime;
    orders.push_back(q);
  }
  return orders;
}

}  // namespace fieldunits
