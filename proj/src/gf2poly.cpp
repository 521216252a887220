#include "fieldunits/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "fieldunits/integer.hpp"

namespace fieldunits {

namespace {

// Carry-less 64x64 -> 128 product.
inline void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) {
  // 4-bit window over a.
  std::uint64_t table_lo[16], table_hi[16];
  table_lo[0] = 0;
  table_hi[0] = 0;
  for (int i = 1; i < 16; ++i) {
    if (i & 1) {
      table_lo[i] = table_lo[i - 1] ^ b;
      table_hi[i] = table_hi[i - 1];
    } else {
      table_lo[i] = table_lo[i >> 1] << 1;
      table_hi[i] = (table_hi[i >> 1] << 1) | (table_lo[i >> 1] >> 63);
    }
  }
  lo = 0;
  hi = 0;
  for (int shift = 60; shift >= 0; shift -= 4) {
    hi = (hi << 4) | (lo >> 60);
    lo <<= 4;
    const unsigned nib = static_cast<unsigned>(a >> shift) & 0xF;
    lo ^= table_lo[nib];
    hi ^= table_hi[nib];
  }
}

// Spreads the 32 low bits of w to even positions.
inline std::uint64_t spread32(std::uint64_t w) {
  w &= 0xFFFFFFFFull;
  w = (w | (w << 16)) & 0x0000FFFF0000FFFFull;
  w = (w | (w << 8)) & 0x00FF00FF00FF00FFull;
  w = (w | (w << 4)) & 0x0F0F0F0F0F0F0F0Full;
  w = (w | (w << 2)) & 0x3333333333333333ull;
  w = (w | (w << 1)) & 0x5555555555555555ull;
  return w;
}

// Gathers the even bits of w into the low 32 bits.
inline std::uint64_t gather_even(std::uint64_t w) {
  w &= 0x5555555555555555ull;
  w = (w | (w >> 1)) & 0x3333333333333333ull;
  w = (w | (w >> 2)) & 0x0F0F0F0F0F0F0F0Full;
  w = (w | (w >> 4)) & 0x00FF00FF00FF00FFull;
  w = (w | (w >> 8)) & 0x0000FFFF0000FFFFull;
  w = (w | (w >> 16)) & 0x00000000FFFFFFFFull;
  return w;
}

// a ^= b << shift, a already long enough.
void xor_shifted(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b, std::size_t shift) {
  const std::size_t ws = shift / 64, bs = shift % 64;
  if (bs == 0) {
    for (std::size_t i = 0; i < b.size(); ++i) a[i + ws] ^= b[i];
    return;
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    a[i + ws] ^= b[i] << bs;
    const std::uint64_t carry = b[i] >> (64 - bs);
    if (carry) a[i + ws + 1] ^= carry;
  }
}

long degree_of(const std::vector<std::uint64_t>& w) {
  for (std::size_t i = w.size(); i-- > 0;)
    if (w[i]) return static_cast<long>(64 * i + 63 - std::countl_zero(w[i]));
  return -1;
}

// Reduces a modulo m in place; returns the quotient if requested.
void reduce_in_place(std::vector<std::uint64_t>& a, const Gf2Poly& m, std::vector<std::uint64_t>* quotient) {
  const long dm = m.degree();
  long da = degree_of(a);
  if (quotient) quotient->assign(da >= dm ? static_cast<std::size_t>((da - dm) / 64 + 1) : 0, 0);
  while (da >= dm) {
    const auto shift = static_cast<std::size_t>(da - dm);
    xor_shifted(a, m.words(), shift);
    if (quotient) (*quotient)[shift / 64] ^= std::uint64_t{1} << (shift % 64);
    // The top bit is cleared; scan down to the next set bit.
    std::size_t wi = static_cast<std::size_t>(da) / 64;
    da = -1;
    for (std::size_t i = wi + 1; i-- > 0;) {
      if (a[i]) {
        da = static_cast<long>(64 * i + 63 - std::countl_zero(a[i]));
        break;
      }
    }
  }
}

}  // namespace

Gf2Poly::Gf2Poly(std::vector<std::uint64_t> words) : words_(std::move(words)) { normalize(); }

void Gf2Poly::normalize() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::from_exponents(std::initializer_list<std::size_t> exponents) {
  Gf2Poly f;
  for (auto e : exponents) f.set_coeff(e, !f.coeff(e));
  return f;
}

Gf2Poly Gf2Poly::monomial(std::size_t e) {
  Gf2Poly f;
  f.set_coeff(e, true);
  return f;
}

long Gf2Poly::degree() const { return degree_of(words_); }

bool Gf2Poly::coeff(std::size_t i) const {
  const std::size_t w = i / 64;
  return w < words_.size() && ((words_[w] >> (i % 64)) & 1);
}

void Gf2Poly::set_coeff(std::size_t i, bool value) {
  const std::size_t w = i / 64;
  if (w >= words_.size()) {
    if (!value) return;
    words_.resize(w + 1, 0);
  }
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value)
    words_[w] |= bit;
  else
    words_[w] &= ~bit;
  normalize();
}

std::size_t Gf2Poly::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& o) {
  if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
  for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
  normalize();
  return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.words_;
  const auto& y = b.words_;
  std::vector<std::uint64_t> r(x.size() + y.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      std::uint64_t lo, hi;
      clmul64(x[i], y[j], lo, hi);
      r[i + j] ^= lo;
      r[i + j + 1] ^= hi;
    }
  }
  return Gf2Poly(std::move(r));
}

Gf2Poly Gf2Poly::square() const {
  std::vector<std::uint64_t> r(2 * words_.size(), 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    r[2 * i] = spread32(words_[i]);
    r[2 * i + 1] = spread32(words_[i] >> 32);
  }
  return Gf2Poly(std::move(r));
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divmod(const Gf2Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Gf2Poly: division by the zero polynomial");
  std::vector<std::uint64_t> rem = words_;
  std::vector<std::uint64_t> quo;
  reduce_in_place(rem, divisor, &quo);
  return {Gf2Poly(std::move(quo)), Gf2Poly(std::move(rem))};
}

Gf2Poly Gf2Poly::operator%(const Gf2Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Gf2Poly: division by the zero polynomial");
  std::vector<std::uint64_t> rem = words_;
  reduce_in_place(rem, divisor, nullptr);
  return Gf2Poly(std::move(rem));
}

Gf2Poly Gf2Poly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<std::uint64_t> r(words_.size() + k / 64 + 1, 0);
  xor_shifted(r, words_, k);
  return Gf2Poly(std::move(r));
}

Gf2Poly Gf2Poly::derivative() const {
  // d/dx x^i = i x^(i-1): keep odd exponents, shift down by one.
  std::vector<std::uint64_t> r(words_.size(), 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t odd = words_[i] & 0xAAAAAAAAAAAAAAAAull;
    r[i] = odd >> 1;
  }
  return Gf2Poly(std::move(r));
}

bool Gf2Poly::is_square() const {
  for (auto w : words_)
    if (w & 0xAAAAAAAAAAAAAAAAull) return false;
  return true;
}

Gf2Poly Gf2Poly::sqrt() const {
  if (!is_square()) throw std::domain_error("Gf2Poly::sqrt: polynomial is not a square");
  std::vector<std::uint64_t> r((words_.size() + 1) / 2, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) r[i / 2] |= gather_even(words_[i]) << (32 * (i % 2));
  return Gf2Poly(std::move(r));
}

bool Gf2Poly::evaluate(bool at) const {
  if (!at) return coeff(0);
  return popcount() % 2 == 1;
}

Gf2Poly Gf2Poly::pow(std::uint64_t e) const {
  Gf2Poly result = one();
  Gf2Poly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base.square();
  }
  return result;
}

std::strong_ordering operator<=>(const Gf2Poly& a, const Gf2Poly& b) {
  if (auto c = a.words_.size() <=> b.words_.size(); c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;)
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    Gf2Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Gf2Poly mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m) { return (a * b) % m; }
Gf2Poly sqrmod(const Gf2Poly& a, const Gf2Poly& m) { return a.square() % m; }

Gf2Poly powmod(Gf2Poly base, std::uint64_t e, const Gf2Poly& m) {
  Gf2Poly result = Gf2Poly::one() % m;
  base = base % m;
  while (e) {
    if (e & 1) result = mulmod(result, base, m);
    e >>= 1;
    if (e) base = sqrmod(base, m);
  }
  return result;
}

namespace {

// x^(2^k) mod f.
Gf2Poly frobenius_x(const Gf2Poly& f, unsigned k) {
  Gf2Poly h = Gf2Poly::x() % f;
  for (unsigned i = 0; i < k; ++i) h = sqrmod(h, f);
  return h;
}

}  // namespace

bool is_irreducible(const Gf2Poly& f) {
  const long n = f.degree();
  if (n < 1) throw std::domain_error("is_irreducible: constant polynomial");
  if (n == 1) return true;
  const Gf2Poly x = Gf2Poly::x();
  if (!(frobenius_x(f, static_cast<unsigned>(n)) + x).is_zero()) return false;
  for (const auto& pf : factor_integer(static_cast<std::uint64_t>(n)).factors()) {
    const auto k = static_cast<unsigned>(n / static_cast<long>(pf.prime));
    if (!gcd(f, frobenius_x(f, k) + x).is_one()) return false;
  }
  return true;
}

std::vector<Gf2Factor> squarefree_decomposition(const Gf2Poly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
  std::vector<Gf2Factor> out;
  if (f.degree() == 0) return out;
  const Gf2Poly fp = f.derivative();
  if (fp.is_zero()) {
    for (auto& [g, m] : squarefree_decomposition(f.sqrt())) out.push_back({g, 2 * m});
    return out;
  }
  Gf2Poly c = gcd(f, fp);
  Gf2Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Gf2Poly y = gcd(w, c);
    Gf2Poly z = w / y;
    if (!z.is_one()) out.push_back({z, i});
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (!c.is_one()) {
    for (auto& [g, m] : squarefree_decomposition(c.sqrt())) out.push_back({g, 2 * m});
  }
  return out;
}

std::vector<std::pair<Gf2Poly, unsigned>> distinct_degree_factorization(const Gf2Poly& f) {
  std::vector<std::pair<Gf2Poly, unsigned>> out;
  Gf2Poly rest = f;
  Gf2Poly h = Gf2Poly::x() % rest;
  const Gf2Poly x = Gf2Poly::x();
  for (unsigned d = 1; rest.degree() >= 2 * static_cast<long>(d); ++d) {
    h = sqrmod(h, rest);
    Gf2Poly g = gcd(rest, h + x);
    if (!g.is_one()) {
      rest = rest / g;
      h = h % rest;
      out.emplace_back(std::move(g), d);
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

std::vector<Gf2Poly> equal_degree_factorization(const Gf2Poly& f, unsigned d, std::uint64_t seed) {
  const long n = f.degree();
  if (n == static_cast<long>(d)) return {f};
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ull));
  for (;;) {
    // Random nonzero r with deg r < n.
    std::vector<std::uint64_t> words(static_cast<std::size_t>(n + 63) / 64);
    for (auto& w : words) w = rng();
    if (n % 64) words.back() &= (std::uint64_t{1} << (n % 64)) - 1;
    Gf2Poly r(std::move(words));
    if (r.degree() < 1) continue;
    // Trace: r + r^2 + ... + r^(2^(d-1)) mod f.
    Gf2Poly t = r, acc = r;
    for (unsigned i = 1; i < d; ++i) {
      t = sqrmod(t, f);
      acc += t;
    }
    Gf2Poly g = gcd(f, acc);
    if (g.degree() > 0 && g.degree() < n) {
      auto left = equal_degree_factorization(g, d, rng());
      auto right = equal_degree_factorization(f / g, d, rng());
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<Gf2Factor> factor(const Gf2Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
  std::vector<Gf2Factor> out;
  std::uint64_t salt = seed;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& [block, d] : distinct_degree_factorization(part)) {
      for (auto& g : equal_degree_factorization(block, d, salt++)) out.push_back({std::move(g), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Gf2Factor& a, const Gf2Factor& b) { return a.poly < b.poly; });
  return out;
}

}  // namespace fieldunits
