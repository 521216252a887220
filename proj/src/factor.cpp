// Factorization over F_q: squarefree decomposition, distinct-degree
// factorization and Cantor-Zassenhaus equal-degree splitting. GF(2)
// inputs are routed to the bit-packed kernels.
#include <algorithm>
#include <random>
#include <stdexcept>

#include "fieldunits/integer.hpp"
#include "fieldunits/poly.hpp"

namespace fieldunits {

namespace {

// x^(q^k) mod f.
Poly frobenius_x(const Poly& f, unsigned k) {
  const std::uint64_t q = f.field().order();
  Poly h = Poly::x(f.field(), f.variable()) % f;
  for (unsigned i = 0; i < k; ++i) h = powmod(h, q, f);
  return h;
}

Poly random_below(const Poly& f, std::mt19937_64& rng) {
  const Field F = f.field();
  std::vector<Field::Code> coeffs(static_cast<std::size_t>(f.degree()));
  std::uniform_int_distribution<Field::Code> dist(0, F.order() - 1);
  for (auto& c : coeffs) c = dist(rng);
  return Poly(F, std::move(coeffs), f.variable());
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f) {
  std::vector<std::pair<Poly, unsigned>> out;
  const std::uint64_t q = f.field().order();
  const Poly x = Poly::x(f.field(), f.variable());
  Poly rest = f;
  Poly h = x % rest;
  for (unsigned d = 1; rest.degree() >= 2 * static_cast<long>(d); ++d) {
    h = powmod(h, q, rest);
    Poly g = gcd(rest, h - x);
    if (!g.is_one()) {
      rest = rest / g;
      h = h % rest;
      out.emplace_back(std::move(g), d);
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

// A candidate splitting polynomial for Cantor-Zassenhaus.
Poly splitting_element(const Poly& r, const Poly& f, unsigned d) {
  const Field F = f.field();
  const std::uint64_t q = F.order();
  if (F.characteristic() == 2) {
    // Absolute trace to F_2: sum of r^(2^i) for i < n*d.
    const unsigned steps = F.degree() * d;
    Poly t = r, acc = r;
    for (unsigned i = 1; i < steps; ++i) {
      t = (t * t) % f;
      acc = acc + t;
    }
    return acc;
  }
  // r^((q^d - 1)/2) = (prod_{i<d} r^(q^i))^((q-1)/2).
  Poly t = r, norm = r;
  for (unsigned i = 1; i < d; ++i) {
    t = powmod(t, q, f);
    norm = (norm * t) % f;
  }
  return powmod(norm, (q - 1) / 2, f) - Poly::constant(FqElem(F, 1), f.variable());
}

std::vector<Poly> equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng) {
  const long n = f.degree();
  if (n == static_cast<long>(d)) return {f};
  for (;;) {
    const Poly r = random_below(f, rng);
    if (r.degree() < 1) continue;
    const Poly g = gcd(f, splitting_element(r, f, d));
    if (g.degree() > 0 && g.degree() < n) {
      auto left = equal_degree(g, d, rng);
      auto right = equal_degree(f / g, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

}  // namespace

bool is_irreducible(const Poly& f) {
  const long n = f.degree();
  if (n < 1) throw std::domain_error("is_irreducible: constant polynomial");
  if (f.field().is_gf2()) return is_irreducible(f.to_gf2());
  if (n == 1) return true;
  const Poly g = f.monic();
  const Poly x = Poly::x(f.field(), f.variable());
  if (!(frobenius_x(g, static_cast<unsigned>(n)) - x).is_zero()) return false;
  for (const auto& pf : factor_integer(static_cast<std::uint64_t>(n)).factors()) {
    const auto k = static_cast<unsigned>(n / static_cast<long>(pf.prime));
    if (!gcd(g, frobenius_x(g, k) - x).is_one()) return false;
  }
  return true;
}

std::vector<PolyFactor> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
  std::vector<PolyFactor> out;
  if (f.degree() == 0) return out;
  const unsigned p = static_cast<unsigned>(std::min<std::uint64_t>(f.field().characteristic(), UINT32_MAX));
  const Poly fp = f.derivative();
  if (fp.is_zero()) {
    for (auto& [g, m] : squarefree_decomposition(f.pth_root())) out.push_back({g, p * m});
    return out;
  }
  Poly c = gcd(f, fp);
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (!z.is_one()) out.push_back({z.monic(), i});
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (!c.is_one()) {
    for (auto& [g, m] : squarefree_decomposition(c.monic().pth_root())) out.push_back({g, p * m});
  }
  return out;
}

Poly PolyFactorization::expand() const {
  Poly result = Poly::constant(unit, factors.empty() ? "x" : factors.front().poly.variable());
  for (const auto& [g, m] : factors) result = result * g.pow(m);
  return result;
}

PolyFactorization factor_poly(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::domain_error("factor_poly: zero polynomial");
  PolyFactorization result{f.leading(), {}};
  if (f.field().is_gf2()) {
    for (auto& [g, m] : factor(f.to_gf2(), seed)) result.factors.push_back({Poly::from_gf2(g, f.variable()), m});
    return result;
  }
  std::mt19937_64 rng(seed);
  for (const auto& [part, mult] : squarefree_decomposition(f.monic())) {
    for (const auto& [block, d] : distinct_degree(part)) {
      for (auto& g : equal_degree(block, d, rng)) result.factors.push_back({g.monic(), mult});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const PolyFactor& a, const PolyFactor& b) { return a.poly < b.poly; });
  return result;
}

}  // namespace fieldunits
