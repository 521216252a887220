#include "fieldunits/oracles.hpp"

#include <bit>
#include <stdexcept>

#include "fieldunits/valuation.hpp"

namespace fieldunits::oracle {

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return true;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool unit_group_indecomposable(std::uint64_t q) { return q == 2 || is_prime_power(q - 1); }

namespace {
int deg(std::uint64_t a) { return a == 0 ? -1 : 63 - std::countl_zero(a); }
}  // namespace

std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t b) {
  if (b == 0) throw std::domain_error("gf2_mod: zero divisor");
  const int db = deg(b);
  while (deg(a) >= db) a ^= b << (deg(a) - db);
  return a;
}

bool gf2_irreducible(std::uint64_t f) {
  const int d = deg(f);
  if (d < 1) return false;
  for (std::uint64_t g = 2; deg(g) <= d / 2; ++g)
    if (gf2_mod(f, g) == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> gf2_factor(std::uint64_t f) {
  if (f == 0) throw std::domain_error("gf2_factor: zero");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  // The smallest divisor of degree >= 1 is always irreducible.
  for (std::uint64_t g = 2; deg(f) >= 1;) {
    if (2 * deg(g) > deg(f)) g = f;
    unsigned m = 0;
    while (deg(f) >= 1 && gf2_mod(f, g) == 0) {
      std::uint64_t quotient = 0, r = f;
      while (deg(r) >= deg(g)) {
        quotient |= std::uint64_t{1} << (deg(r) - deg(g));
        r ^= g << (deg(r) - deg(g));
      }
      f = quotient;
      ++m;
    }
    if (m) out.push_back({g, m});
    ++g;
  }
  return out;
}

std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  if (a.empty()) return 0;
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

RatFunc multiplication_norm(const ExtElem& u) {
  const SimpleExtension& ext = u.extension();
  const std::size_t d = ext.degree();
  const Field f = ext.field();
  const std::string& t = ext.base_variable();
  // Column j holds the coordinates of u * y^j.
  std::vector<std::vector<RatFunc>> a(d, std::vector<RatFunc>(d, RatFunc::zero(f, t)));
  ExtElem col = u;
  const ExtElem y = ExtElem::generator(ext);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) a[i][j] = col.coeffs()[i];
    col = col * y;
  }
  RatFunc det = RatFunc::one(f, t);
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t pivot = c;
    while (pivot < d && a[pivot][c].is_zero()) ++pivot;
    if (pivot == d) return RatFunc::zero(f, t);
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det = det * a[c][c];
    for (std::size_t r = c + 1; r < d; ++r) {
      if (a[r][c].is_zero()) continue;
      const RatFunc factor = a[r][c] / a[c][c];
      for (std::size_t j = c; j < d; ++j) a[r][j] = a[r][j] - factor * a[c][j];
    }
  }
  return det;
}

}  // namespace fieldunits::oracle
