#include "fieldunits/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "fieldunits/integer.hpp"

namespace fieldunits {

namespace detail {
struct FieldData {
  std::uint64_t p;
  unsigned n;
  std::uint64_t q;
  std::vector<std::uint64_t> modulus;  // length n + 1, monic
  std::uint64_t modulus_bits = 0;      // p == 2: modulus without the leading term
  // Small odd-characteristic extensions: discrete log tables for a primitive
  // element (exp has 2(q-1) entries), and a full addition table when q <= 256.
  std::vector<std::uint32_t> log, exp, sum;
};
}  // namespace detail

namespace {

// Dense polynomials over F_p as residue vectors, constant first. Used only
// to search for the canonical modulus.
using Raw = std::vector<std::uint64_t>;

void trim(Raw& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Raw raw_mod(Raw a, const Raw& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = powmod(m.back(), p - 2, p);
  while (a.size() > dm) {
    const std::uint64_t c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
    trim(a);
  }
  return a;
}

Raw raw_mulmod(const Raw& a, const Raw& b, const Raw& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Raw r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  return raw_mod(std::move(r), m, p);
}

Raw raw_powmod(Raw base, std::uint64_t e, const Raw& m, std::uint64_t p) {
  Raw result{1};
  base = raw_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) result = raw_mulmod(result, base, m, p);
    base = raw_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Raw raw_gcd(Raw a, Raw b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Raw r = raw_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's irreducibility test for monic f of degree n over F_p.
bool raw_irreducible(const Raw& f, std::uint64_t p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  auto frob_power = [&](unsigned k) {
    Raw h{0, 1};
    for (unsigned i = 0; i < k; ++i) h = raw_powmod(h, p, f, p);
    return h;
  };
  auto minus_x = [&](Raw h) {
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    return h;
  };
  if (!minus_x(frob_power(n)).empty()) return false;
  for (const auto& pf : factor_integer(n).factors()) {
    const Raw g = raw_gcd(f, minus_x(frob_power(n / static_cast<unsigned>(pf.prime))), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Raw canonical_modulus(std::uint64_t p, unsigned n) {
  Raw f(n + 1, 0);
  f[n] = 1;
  // Enumerate the lower coefficients as a base-p counter.
  for (;;) {
    if (f[0] != 0 && raw_irreducible(f, p)) return f;
    unsigned i = 0;
    while (i < n && ++f[i] == p) f[i++] = 0;
    if (i == n) throw std::logic_error("canonical_modulus: no irreducible found");
  }
}

std::uint64_t clmul_mod(std::uint64_t a, std::uint64_t b, unsigned n, std::uint64_t low_bits) {
  // Shift-and-add in GF(2)[x] / (x^n + low_bits).
  std::uint64_t result = 0;
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  while (b) {
    if (b & 1) result ^= a;
    b >>= 1;
    const bool carry = (a & top) != 0;
    a = (a << 1) & mask;
    if (carry) a ^= low_bits;
  }
  return result;
}

}  // namespace

namespace {
constexpr std::uint64_t kTableLimit = 1 << 16;
}  // namespace

void Field::build_tables(detail::FieldData& d) {
  const Field f(&d);
  const std::uint64_t q = d.q;
  std::vector<std::uint64_t> primes;
  for (const auto& pf : factor_integer(q - 1).factors()) primes.push_back(pf.prime);
  Field::Code g = 2;
  for (;; ++g) {
    bool primitive = true;
    for (std::uint64_t r : primes)
      if (f.pow(g, (q - 1) / r) == 1) primitive = false;
    if (primitive) break;
  }
  std::vector<std::uint32_t> log(q), exp(2 * (q - 1));
  Field::Code x = 1;
  for (std::uint64_t i = 0; i < q - 1; ++i) {
    exp[i] = exp[i + q - 1] = static_cast<std::uint32_t>(x);
    log[x] = static_cast<std::uint32_t>(i);
    x = f.mul(x, g);
  }
  std::vector<std::uint32_t> sum;
  if (q <= 256) {
    sum.resize(q * q);
    for (std::uint64_t a = 0; a < q; ++a)
      for (std::uint64_t b = 0; b < q; ++b) sum[a * q + b] = static_cast<std::uint32_t>(f.add(a, b));
  }
  d.log = std::move(log);
  d.exp = std::move(exp);
  d.sum = std::move(sum);
}

Field Field::make(std::uint64_t p, unsigned n) {
  if (!is_prime(p)) throw std::invalid_argument("field_make: characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw std::invalid_argument("field_make: degree must be positive");
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxInteger) throw std::overflow_error("field_make: p^n exceeds 2^63");
  }

  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<detail::FieldData>> registry;
  {
    std::lock_guard lock(mutex);
    if (auto it = registry.find({p, n}); it != registry.end()) return Field(it->second.get());
  }
  auto data = std::make_unique<detail::FieldData>();
  data->p = p;
  data->n = n;
  data->q = static_cast<std::uint64_t>(q);
  if (n > 1) {
    data->modulus = canonical_modulus(p, n);
    if (p == 2)
      for (unsigned i = 0; i < n; ++i) data->modulus_bits |= data->modulus[i] << i;
    else if (data->q <= kTableLimit)
      build_tables(*data);
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = registry.try_emplace({p, n}, std::move(data));
  return Field(it->second.get());
}

std::uint64_t Field::characteristic() const { return data_->p; }
unsigned Field::degree() const { return data_->n; }
std::uint64_t Field::order() const { return data_->q; }
const std::vector<std::uint64_t>& Field::modulus() const { return data_->modulus; }

std::string Field::name() const {
  if (data_->n == 1) return "GF(" + std::to_string(data_->p) + ")";
  return "GF(" + std::to_string(data_->p) + "^" + std::to_string(data_->n) + ")";
}

Field::Code Field::generator() const {
  if (data_->n == 1) throw std::domain_error("Field::generator: prime field has no generator `a`");
  return data_->p;
}

Field::Code Field::from_int(std::int64_t value) const {
  // p < 2^63, so it is representable as int64.
  const auto p = static_cast<std::int64_t>(data_->p);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return static_cast<Code>(r);
}

std::vector<std::uint64_t> Field::digits(Code c) const {
  std::vector<std::uint64_t> d(data_->n, 0);
  if (data_->n == 1) {
    d[0] = c;
    return d;
  }
  for (unsigned i = 0; i < data_->n; ++i) {
    d[i] = c % data_->p;
    c /= data_->p;
  }
  return d;
}

Field::Code Field::from_digits(std::span<const std::uint64_t> digits) const {
  if (digits.size() > data_->n) throw std::invalid_argument("Field::from_digits: too many digits");
  Code c = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= data_->p) throw std::invalid_argument("Field::from_digits: digit out of range");
    c = c * data_->p + digits[i];
  }
  return c;
}

Field::Code Field::add(Code a, Code b) const {
  const std::uint64_t p = data_->p;
  if (data_->n == 1) return a >= p - b ? a - (p - b) : a + b;
  if (p == 2) return a ^ b;
  if (!data_->sum.empty()) return data_->sum[a * data_->q + b];
  Code result = 0, scale = 1;
  for (unsigned i = 0; i < data_->n; ++i) {
    const std::uint64_t s = (a % p + b % p) % p;
    result += s * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return result;
}

Field::Code Field::neg(Code a) const {
  const std::uint64_t p = data_->p;
  if (data_->n == 1) return a == 0 ? 0 : p - a;
  if (p == 2) return a;
  Code result = 0, scale = 1;
  for (unsigned i = 0; i < data_->n; ++i) {
    const std::uint64_t d = a % p;
    result += (d == 0 ? 0 : p - d) * scale;
    a /= p;
    scale *= p;
  }
  return result;
}

Field::Code Field::sub(Code a, Code b) const { return add(a, neg(b)); }

Field::Code Field::mul(Code a, Code b) const {
  const std::uint64_t p = data_->p;
  const unsigned n = data_->n;
  if (n == 1) return mulmod(a, b, p);
  if (p == 2) return clmul_mod(a, b, n, data_->modulus_bits);
  if (!data_->exp.empty()) return a == 0 || b == 0 ? 0 : data_->exp[data_->log[a] + data_->log[b]];
  const auto da = digits(a), db = digits(b);
  std::vector<std::uint64_t> r(2 * n - 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) r[i + j] = (r[i + j] + mulmod(da[i], db[j], p)) % p;
  }
  const auto& m = data_->modulus;
  for (unsigned k = 2 * n - 1; k-- > n;) {
    const std::uint64_t c = r[k];
    if (c == 0) continue;
    r[k] = 0;
    for (unsigned i = 0; i < n; ++i) r[k - n + i] = (r[k - n + i] + p - mulmod(c, m[i], p)) % p;
  }
  r.resize(n);
  return from_digits(r);
}

Field::Code Field::pow(Code a, std::uint64_t e) const {
  Code result = one();
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Field::Code Field::inv(Code a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  if (data_->n == 1) return powmod(a, data_->p - 2, data_->p);
  if (!data_->exp.empty()) return data_->exp[(data_->q - 1 - data_->log[a]) % (data_->q - 1)];
  return pow(a, data_->q - 2);
}

Field::Code Field::pth_root(Code a) const {
  if (data_->n == 1) return a;
  return pow(a, data_->q / data_->p);
}

FqElem::FqElem(Field field, Field::Code code) : field_(field), code_(code) {
  if (!field.contains(code)) throw std::invalid_argument("FqElem: code out of range for " + field.name());
}

void FqElem::check_same(const FqElem& o) const {
  if (!(field_ == o.field_))
    throw std::invalid_argument("mixed fields: " + field_.name() + " and " + o.field_.name());
}

FqElem FqElem::operator+(const FqElem& o) const {
  check_same(o);
  return FqElem(field_, field_.add(code_, o.code_));
}
FqElem FqElem::operator-(const FqElem& o) const {
  check_same(o);
  return FqElem(field_, field_.sub(code_, o.code_));
}
FqElem FqElem::operator-() const { return FqElem(field_, field_.neg(code_)); }
FqElem FqElem::operator*(const FqElem& o) const {
  check_same(o);
  return FqElem(field_, field_.mul(code_, o.code_));
}
FqElem FqElem::operator/(const FqElem& o) const {
  check_same(o);
  return FqElem(field_, field_.div(code_, o.code_));
}
FqElem FqElem::inv() const { return FqElem(field_, field_.inv(code_)); }
FqElem FqElem::pow(std::uint64_t e) const { return FqElem(field_, field_.pow(code_, e)); }

}  // namespace fieldunits
