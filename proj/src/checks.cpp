#include "fieldunits/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "fieldunits/extension.hpp"
#include "fieldunits/gf2poly.hpp"
#include "fieldunits/hahn.hpp"
#include "fieldunits/oracles.hpp"
#include "fieldunits/perfect_closure.hpp"
#include "fieldunits/ratfunc.hpp"
#include "fieldunits/scan.hpp"
#include "fieldunits/text.hpp"
#include "fieldunits/valuation.hpp"

namespace fieldunits {

bool SuiteReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

std::size_t SuiteReport::cases() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.cases;
  return n;
}

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.failures;
  return n;
}

namespace {

// Runs one case; a returned message or an escaping exception counts as a failure.
void run_case(CheckResult& r, const std::function<std::optional<std::string>()>& body) {
  ++r.cases;
  std::optional<std::string> failure;
  try {
    failure = body();
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  if (!failure) return;
  if (r.failures++ == 0) r.first_failure = *failure;
}

std::string show(const UnitDecomposition& d) {
  std::string s = d.constant().to_string();
  for (const auto& f : d.factors()) s += " * (" + f.poly.to_string() + ")^" + std::to_string(f.exponent);
  return s;
}

std::string show(const PCDecomposition& d) {
  std::string s = "{";
  for (const auto& f : d.factors()) s += " " + f.poly.to_string() + ": " + f.exponent.to_string();
  return s + " }";
}

std::uint64_t mask(const Gf2Poly& p) { return p.is_zero() ? 0 : p.words()[0]; }

Gf2Poly random_gf2(std::mt19937_64& rng, std::size_t degree) {
  std::vector<std::uint64_t> words(degree / 64 + 1);
  for (auto& w : words) w = rng();
  const std::size_t top = degree % 64;
  words.back() &= top == 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (top + 1)) - 1;
  words.back() |= std::uint64_t{1} << top;
  return Gf2Poly(std::move(words));
}

}  // namespace

SuiteReport check_classification(std::uint64_t bound, unsigned workers) {
  SuiteReport suite{"classification", {}};
  const ScanReport scan = classify_scan(bound, workers);

  CheckResult per_entry{"classifier agrees with the q-1 prime-power oracle on every prime power", {}, {}, {}, {}};
  per_entry.cases = scan.prime_powers_checked;
  per_entry.failures = scan.disagreements.size();
  if (!scan.disagreements.empty()) per_entry.first_failure = "q = " + std::to_string(scan.disagreements.front());
  per_entry.note = to_string(scan.mode) + " scan";
  suite.checks.push_back(per_entry);

  if (scan.mode == ScanMode::Exhaustive && bound <= 10'000'000) {
    CheckResult listing{"listing equals the oracle's set of q <= " + std::to_string(bound), {}, {}, {}, {}};
    std::vector<std::uint64_t> expected;
    for (std::uint64_t q = 2; q <= bound; ++q)
      if (oracle::is_prime_power(q) && oracle::unit_group_indecomposable(q)) expected.push_back(q);
    std::vector<std::uint64_t> got;
    for (const auto& e : scan.entries) got.push_back(e.q);
    run_case(listing, [&]() -> std::optional<std::string> {
      if (got == expected) return std::nullopt;
      return "scan listed " + std::to_string(got.size()) + " fields, oracle " + std::to_string(expected.size());
    });
    suite.checks.push_back(listing);
  }
  return suite;
}

SuiteReport check_unit_decomposition(std::uint64_t seed, std::size_t round_trips, std::size_t pairs, unsigned max_degree) {
  SuiteReport suite{"unit decomposition of F_q(x)", {}};
  std::mt19937_64 rng(seed);
  for (const Field field : {Field::make(2, 1), Field::make(3, 1), Field::make(3, 2)}) {
    CheckResult trip{"recompose(decompose(Q)) = Q over " + field.name(), {}, {}, {}, {}};
    for (std::size_t i = 0; i < round_trips; ++i) {
      const RatFunc q = random_ratfunc(field, max_degree, rng);
      run_case(trip, [&]() -> std::optional<std::string> {
        const UnitDecomposition d = decompose(q, seed);
        if (field.is_gf2()) {
          for (const auto& f : d.factors())
            if (f.poly.degree() < 64 && !oracle::gf2_irreducible(mask(f.poly.to_gf2())))
              return "reducible factor " + f.poly.to_string() + " of " + q.to_string();
        }
        const RatFunc back = recompose(d);
        if (back == q) return std::nullopt;
        return q.to_string() + " -> " + show(d) + " -> " + back.to_string();
      });
    }
    suite.checks.push_back(trip);

    CheckResult hom{"decompose(QR) = decompose(Q) + decompose(R) over " + field.name(), {}, {}, {}, {}};
    for (std::size_t i = 0; i < pairs; ++i) {
      const RatFunc q = random_ratfunc(field, max_degree / 2, rng);
      const RatFunc r = random_ratfunc(field, max_degree / 2, rng);
      run_case(hom, [&]() -> std::optional<std::string> {
        const UnitDecomposition lhs = decompose(q * r, seed);
        const UnitDecomposition rhs = decompose(q, seed).combine(decompose(r, seed));
        if (lhs == rhs) return std::nullopt;
        return "Q = " + q.to_string() + ", R = " + r.to_string() + ": " + show(lhs) + " vs " + show(rhs);
      });
    }
    suite.checks.push_back(hom);
  }
  return suite;
}

SuiteReport check_factorization(unsigned max_degree) {
  SuiteReport suite{"factorization over GF(2)", {}};
  CheckResult agree{"factor agrees with trial division for every monic f of degree 1.." + std::to_string(max_degree), {}, {}, {}, {}};
  CheckResult irreducible{"every emitted factor is irreducible", {}, {}, {}, {}};
  for (std::uint64_t f = 2; f < (std::uint64_t{2} << max_degree); ++f) {
    const Gf2Poly poly(std::vector<std::uint64_t>{f});
    const auto factors = factor(poly);
    run_case(agree, [&]() -> std::optional<std::string> {
      std::vector<std::pair<std::uint64_t, unsigned>> got;
      for (const auto& g : factors) got.push_back({mask(g.poly), g.multiplicity});
      std::sort(got.begin(), got.end());
      if (got == oracle::gf2_factor(f)) return std::nullopt;
      return "mismatch on " + Poly::from_gf2(poly).to_string();
    });
    for (const auto& g : factors) {
      run_case(irreducible, [&]() -> std::optional<std::string> {
        if (is_irreducible(g.poly) && oracle::gf2_irreducible(mask(g.poly))) return std::nullopt;
        return Poly::from_gf2(g.poly).to_string() + " from " + Poly::from_gf2(poly).to_string();
      });
    }
  }
  suite.checks.push_back(agree);
  suite.checks.push_back(irreducible);
  return suite;
}

namespace {

template <class T>
CheckResult axiom_check(const ValuationProbe<T>& probe, std::size_t samples, std::uint64_t seed) {
  CheckResult r{"valuation axioms for " + probe.valuation.name, {}, {}, {}, {}};
  const AxiomReport<T> report = check_valuation_axioms(probe, samples, seed);
  r.cases = report.pairs_checked;
  if (!report.passed()) {
    const auto& c = *report.counterexample;
    r.failures = 1;
    r.first_failure = to_string(c.axiom) + " fails at x = " + probe.show(c.x) + ", y = " + probe.show(c.y);
  }
  return r;
}

}  // namespace

SuiteReport check_valuations(std::uint64_t seed, std::size_t samples) {
  SuiteReport suite{"valuation axioms", {}};
  std::uint64_t salt = 0;
  for (std::uint64_t p : {2, 3, 5}) suite.checks.push_back(axiom_check(padic_probe(p), samples, seed + salt++));
  const Field f2 = Field::gf2();
  for (const char* f : {"x", "x+1", "x^2+x+1"})
    suite.checks.push_back(axiom_check(polynomial_valuation_probe(parse_poly(f2, f)), samples, seed + salt++));
  for (const auto& g : {GroupDescriptor::integers(), GroupDescriptor::lex(2), GroupDescriptor::dyadic()})
    suite.checks.push_back(axiom_check(hahn_probe(f2, g), samples, seed + salt++));
  return suite;
}

namespace {

template <class T>
CheckResult split_check(const std::string& name, const Section<T>& s, const std::function<T(std::mt19937_64&)>& sample,
                        const std::function<std::string(const T&)>& show_elem, std::size_t samples, std::mt19937_64& rng) {
  CheckResult r{"split/recombine for " + name, {}, {}, {}, {}};
  for (std::size_t i = 0; i < samples; ++i) {
    const T u = sample(rng), v = sample(rng);
    run_case(r, [&]() -> std::optional<std::string> {
      const auto [gu, wu] = split_unit(u, s);
      const auto [gv, wv] = split_unit(v, s);
      if (!(recombine(gu, wu, s) == u)) return "recombine(split(u)) != u for u = " + show_elem(u);
      const auto [guv, wuv] = split_unit(u * v, s);
      if (!(guv == gu + gv) || !(wuv == wu * wv))
        return "split(uv) != split(u) + split(v) for u = " + show_elem(u) + ", v = " + show_elem(v);
      return std::nullopt;
    });
  }
  return r;
}

CheckResult hahn_split_check(Field field, const GroupDescriptor& group, std::size_t samples, std::mt19937_64& rng) {
  CheckResult r{"split/recombine for min Supp over " + group.to_string(), {}, {}, {}, {}};
  for (std::size_t i = 0; i < samples; ++i) {
    const HahnSeries a = random_hahn(field, group, rng), b = random_hahn(field, group, rng);
    run_case(r, [&]() -> std::optional<std::string> {
      const auto [ga, ua] = hs_unit_split(a);
      const auto [gb, ub] = hs_unit_split(b);
      if (!(hs_section(field, ga) * ua == a)) return "x^g * U != A for A = " + a.to_string();
      if (!hs_valuation(ua).is_zero() || ua.terms().front().coeff == 0) return "unit part of " + a.to_string() + " has v != 0";
      const auto [g2, u2] = hs_unit_split(hs_section(field, ga) * ua);
      if (!(g2 == ga) || !(u2 == ua)) return "re-splitting is not a fixed point for " + a.to_string();
      const auto [gab, uab] = hs_unit_split(a * b);
      if (!(gab == ga + gb) || !(uab == ua * ub))
        return "split(AB) != split(A) + split(B) for A = " + a.to_string() + ", B = " + b.to_string();
      return std::nullopt;
    });
  }
  return r;
}

}  // namespace

SuiteReport check_splitting(std::uint64_t seed, std::size_t samples, std::size_t section_pairs) {
  SuiteReport suite{"splitting K^x = s(G) x ker v", {}};
  std::mt19937_64 rng(seed);
  const GroupElem one_step(std::int64_t{1});
  for (std::uint64_t p : {2, 3, 5}) {
    const auto probe = padic_probe(p);
    const Section<Rational> s = section_free(padic(p), {one_step}, {Rational(p)}, Rational(1));
    suite.checks.push_back(split_check<Rational>(
        probe.valuation.name, s, probe.sample, [](const Rational& r) { return r.str(); }, samples, rng));
  }
  const Field f2 = Field::gf2();
  for (const char* f : {"x", "x+1", "x^2+x+1"}) {
    const Poly pf = parse_poly(f2, f);
    const auto probe = polynomial_valuation_probe(pf);
    const Section<RatFunc> s = section_free(polynomial_valuation(pf), {one_step}, {RatFunc(pf)}, RatFunc::one(f2));
    suite.checks.push_back(split_check<RatFunc>(
        probe.valuation.name, s, probe.sample, [](const RatFunc& q) { return q.to_string(); }, samples, rng));
  }
  for (const auto& g : {GroupDescriptor::integers(), GroupDescriptor::lex(2), GroupDescriptor::dyadic()})
    suite.checks.push_back(hahn_split_check(f2, g, samples, rng));

  for (const auto& g : {GroupDescriptor::integers(), GroupDescriptor::lex(2), GroupDescriptor::dyadic()}) {
    CheckResult hom{"x^(g+h) = x^g x^h and v(x^g) = g over " + g.to_string(), {}, {}, {}, {}};
    for (std::size_t i = 0; i < section_pairs; ++i) {
      const GroupElem a = random_group_elem(g, rng), b = random_group_elem(g, rng);
      run_case(hom, [&]() -> std::optional<std::string> {
        if (!(hs_section(f2, a + b) == hs_section(f2, a) * hs_section(f2, b)))
          return "s(g+h) != s(g)s(h) at g = " + a.to_string() + ", h = " + b.to_string();
        if (!(hs_valuation(hs_section(f2, a)) == a)) return "v(s(g)) != g at g = " + a.to_string();
        return std::nullopt;
      });
    }
    suite.checks.push_back(hom);
  }
  return suite;
}

SuiteReport check_perfect_closure(std::uint64_t seed, std::size_t round_trips, std::size_t frobenius_samples) {
  SuiteReport suite{"perfect closure of F_2(t)", {}};
  std::mt19937_64 rng(seed);

  CheckResult trip{"pc_recompose(pc_decompose(Q)) = Q, factors irreducible", {}, {}, {}, {}};
  CheckResult hom{"pc_decompose(QR) = pc_decompose(Q) + pc_decompose(R)", {}, {}, {}, {}};
  for (std::size_t i = 0; i < round_trips; ++i) {
    const DyadicRatFunc q = random_dyadic_ratfunc(rng), r = random_dyadic_ratfunc(rng);
    run_case(trip, [&]() -> std::optional<std::string> {
      const PCDecomposition d = pc_decompose(q, seed);
      for (const auto& f : d.factors())
        if (!oracle::gf2_irreducible(mask(f.poly.to_gf2()))) return "reducible factor " + f.poly.to_string();
      const DyadicRatFunc back = pc_recompose(d);
      if (!(back == q)) return q.to_string() + " -> " + show(d) + " -> " + back.to_string();
      if (!(pc_decompose(back, seed) == d)) return "decompose(recompose(D)) != D for D = " + show(d);
      return std::nullopt;
    });
    run_case(hom, [&]() -> std::optional<std::string> {
      const PCDecomposition lhs = pc_decompose(q * r, seed);
      const PCDecomposition rhs = pc_decompose(q, seed).combine(pc_decompose(r, seed));
      if (lhs == rhs) return std::nullopt;
      return "Q = " + q.to_string() + ", R = " + r.to_string() + ": " + show(lhs) + " vs " + show(rhs);
    });
  }
  suite.checks.push_back(trip);
  suite.checks.push_back(hom);

  CheckResult inverse{"frobenius and frobenius_inv are inverse field homomorphisms", {}, {}, {}, {}};
  CheckResult levels{"pc_level moves by one under frobenius and frobenius_inv", {}, {}, {}, {}};
  for (std::size_t i = 0; i < frobenius_samples; ++i) {
    const DyadicRatFunc q = random_dyadic_ratfunc(rng), r = random_dyadic_ratfunc(rng);
    run_case(inverse, [&]() -> std::optional<std::string> {
      if (!(frobenius(frobenius_inv(q)) == q) || !(frobenius_inv(frobenius(q)) == q))
        return "not mutually inverse at " + q.to_string();
      if (!(frobenius(q) == q * q)) return "frobenius(Q) != Q*Q at " + q.to_string();
      if (!(frobenius_inv(q * r) == frobenius_inv(q) * frobenius_inv(r)))
        return "(QR)^(1/2) != Q^(1/2) R^(1/2) at " + q.to_string() + ", " + r.to_string();
      if (!(frobenius_inv(q + r) == frobenius_inv(q) + frobenius_inv(r)))
        return "(Q+R)^(1/2) != Q^(1/2) + R^(1/2) at " + q.to_string() + ", " + r.to_string();
      return std::nullopt;
    });
    run_case(levels, [&]() -> std::optional<std::string> {
      const unsigned k = pc_level(q);
      if (pc_level(frobenius(q)) != (k == 0 ? 0 : k - 1)) return "level of frobenius(" + q.to_string() + ")";
      const unsigned up = pc_level(frobenius_inv(q));
      // At level k >= 1 some exponent has an odd numerator; at level 0 this
      // holds unless Q is a square in F_2(t).
      const bool odd_exponent = k > 0 || !(q.num().is_square() && q.den().is_square());
      if (up > k + 1 || (odd_exponent && up != k + 1)) return "level of frobenius_inv(" + q.to_string() + ")";
      return std::nullopt;
    });
  }
  suite.checks.push_back(inverse);
  suite.checks.push_back(levels);

  CheckResult embed{"embedding into F_2((Z[1/2])) respects products", {}, {}, {}, {}};
  for (std::size_t i = 0; i < 100; ++i) {
    const DyadicPoly a = random_dyadic_poly(rng), b = random_dyadic_poly(rng);
    run_case(embed, [&]() -> std::optional<std::string> {
      if (to_hahn(a * b) == to_hahn(a) * to_hahn(b)) return std::nullopt;
      return "at " + a.to_string() + ", " + b.to_string();
    });
  }
  suite.checks.push_back(embed);
  return suite;
}

SuiteReport check_norms(std::uint64_t seed, std::size_t pairs, std::size_t base_elements) {
  SuiteReport suite{"field norm", {}};
  std::mt19937_64 rng(seed);
  for (const char* text : {"GF(2)(t)[y]/(y^2+y+t)", "GF(2)(t)[y]/(y^3+y+t)"}) {
    const SimpleExtension ext = parse_extension(text);
    const std::string name = ext.to_string();
    const auto d = static_cast<std::int64_t>(ext.degree());

    CheckResult verified{"irreducibility of " + name + " is certified by specialization", {}, {}, {}, {}};
    run_case(verified, [&]() -> std::optional<std::string> {
      if (ext.status() == IrreducibilityStatus::Verified) return std::nullopt;
      return "status " + to_string(ext.status());
    });
    suite.checks.push_back(verified);

    CheckResult mult{"N(uv) = N(u)N(v) in " + name, {}, {}, {}, {}};
    CheckResult oracle_agree{"resultant norm equals det of multiplication in " + name, {}, {}, {}, {}};
    for (std::size_t i = 0; i < pairs; ++i) {
      const ExtElem u = random_ext_elem(ext, 3, rng), v = random_ext_elem(ext, 3, rng);
      run_case(mult, [&]() -> std::optional<std::string> {
        const RatFunc lhs = norm(u * v), rhs = norm(u) * norm(v);
        if (lhs == rhs) return std::nullopt;
        return "u = " + u.to_string() + ", v = " + v.to_string() + ": " + lhs.to_string() + " vs " + rhs.to_string();
      });
      if (i % 3 == 0) {
        run_case(oracle_agree, [&]() -> std::optional<std::string> {
          const RatFunc n = norm(u), o = oracle::multiplication_norm(u);
          if (n == o) return std::nullopt;
          return "u = " + u.to_string() + ": " + n.to_string() + " vs " + o.to_string();
        });
      }
    }
    suite.checks.push_back(mult);
    suite.checks.push_back(oracle_agree);

    CheckResult base{"N(c) = c^" + std::to_string(d) + " for c in GF(2)(t), " + name, {}, {}, {}, {}};
    CheckResult free_image{"norms decompose and recompose over GF(2)(t), " + name, {}, {}, {}, {}};
    for (std::size_t i = 0; i < base_elements; ++i) {
      const RatFunc c = random_ratfunc(ext.field(), 4, rng, ext.base_variable());
      run_case(base, [&]() -> std::optional<std::string> {
        const RatFunc n = norm(ExtElem::base(ext, c));
        if (n == c.pow(d)) return std::nullopt;
        return "c = " + c.to_string() + ": " + n.to_string();
      });
      const ExtElem u = random_ext_elem(ext, 3, rng);
      run_case(free_image, [&]() -> std::optional<std::string> {
        const RatFunc n = norm(u);
        if (n.variable() != ext.base_variable()) return "norm left the base field";
        if (recompose(decompose(n, seed), ext.base_variable()) == n) return std::nullopt;
        return "round trip fails for N(" + u.to_string() + ") = " + n.to_string();
      });
    }
    suite.checks.push_back(base);
    suite.checks.push_back(free_image);
  }
  return suite;
}

SuiteReport check_rank(std::uint64_t seed, std::size_t matrices) {
  SuiteReport suite{"multiplicative rank", {}};
  std::mt19937_64 rng(seed);
  // The first 20 irreducibles over GF(2) in canonical order.
  std::vector<Gf2Poly> basis;
  for (std::uint64_t f = 2; basis.size() < 20; ++f)
    if (oracle::gf2_irreducible(f)) basis.push_back(Gf2Poly(std::vector<std::uint64_t>{f}));

  CheckResult agree{"multiplicative_rank equals the rational rank of the exponent matrix", {}, {}, {}, {}};
  std::uniform_int_distribution<int> entry(-5, 5), rows_dist(1, 10), cols_dist(1, 20), coin(0, 1);
  for (std::size_t m = 0; m < matrices; ++m) {
    const int rows = rows_dist(rng), cols = cols_dist(rng);
    IntMatrix e(rows, std::vector<std::int64_t>(cols));
    for (auto& row : e)
      for (auto& x : row) x = entry(rng);
    // Half of the matrices get a row that is a combination of two others.
    if (rows >= 3 && coin(rng)) {
      std::uniform_int_distribution<int> pick(0, rows - 1);
      const int target = pick(rng), a = pick(rng), b = pick(rng);
      for (int j = 0; j < cols; ++j) e[target][j] = e[a][j] - e[b][j];
    }
    run_case(agree, [&]() -> std::optional<std::string> {
      std::vector<RatFunc> elems;
      for (const auto& row : e) {
        Gf2Poly num = Gf2Poly::one(), den = Gf2Poly::one();
        for (int j = 0; j < cols; ++j) {
          const Gf2Poly p = basis[j].pow(static_cast<std::uint64_t>(row[j] < 0 ? -row[j] : row[j]));
          (row[j] < 0 ? den : num) *= p;
        }
        elems.emplace_back(Poly::from_gf2(num), Poly::from_gf2(den));
      }
      const std::size_t got = multiplicative_rank(elems, seed), want = oracle::rational_rank(e);
      if (got == want && integer_rank(e) == want) return std::nullopt;
      return std::to_string(rows) + "x" + std::to_string(cols) + " matrix: rank " + std::to_string(got) + ", oracle " +
             std::to_string(want);
    });
  }
  suite.checks.push_back(agree);
  return suite;
}

SuiteReport check_performance(std::uint64_t seed) {
  using Clock = std::chrono::steady_clock;
  SuiteReport suite{"performance", {}};
  std::mt19937_64 rng(seed);
  auto format_ms = [](double s) {
    std::ostringstream out;
    out.precision(3);
    out << std::fixed << s * 1000 << " ms";
    return out.str();
  };

  CheckResult fac{"factor a degree-512 polynomial over GF(2) in < 1 s", {}, {}, {}, {}};
  const Gf2Poly f = random_gf2(rng, 512);
  run_case(fac, [&]() -> std::optional<std::string> {
    const auto start = Clock::now();
    const auto factors = factor(f, seed);
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    fac.note = format_ms(s);
    Gf2Poly product = Gf2Poly::one();
    for (const auto& g : factors) product *= g.poly.pow(g.multiplicity);
    if (!(product == f)) return std::string("factors do not multiply back");
    if (s >= 1.0) return "took " + format_ms(s);
    return std::nullopt;
  });
  suite.checks.push_back(fac);

  CheckResult mul{"multiply two degree-10^4 polynomials over GF(2) in < 0.5 s", {}, {}, {}, {}};
  const Gf2Poly a = random_gf2(rng, 10'000), b = random_gf2(rng, 10'000);
  run_case(mul, [&]() -> std::optional<std::string> {
    const auto start = Clock::now();
    const Gf2Poly c = a * b;
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    mul.note = format_ms(s);
    const auto [quotient, remainder] = c.divmod(a);
    if (!(quotient == b) || !remainder.is_zero() || c.degree() != 20'000) return std::string("product is wrong");
    if (s >= 0.5) return "took " + format_ms(s);
    return std::nullopt;
  });
  suite.checks.push_back(mul);
  return suite;
}

std::vector<SuiteReport> run_selftest(std::uint64_t seed, std::uint64_t scan_bound) {
  return {check_classification(scan_bound),   check_unit_decomposition(seed), check_factorization(),
          check_valuations(seed),             check_splitting(seed),          check_perfect_closure(seed),
          check_norms(seed),                  check_rank(seed)};
}

}  // namespace fieldunits
