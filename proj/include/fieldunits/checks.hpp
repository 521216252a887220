// Seeded cross-check suites: library results against the oracles and the
// algebraic identities they must satisfy. Shared by `fieldunits selftest`
// and the acceptance tests.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fieldunits {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  /// Extra information such as timings; never part of the verdict.
  std::string note;

  bool passed() const { return failures == 0 && cases > 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t cases() const;
  std::size_t failures() const;
};

SuiteReport check_classification(std::uint64_t bound = 1'000'000, unsigned workers = 0);
SuiteReport check_unit_decomposition(std::uint64_t seed, std::size_t round_trips = 1000, std::size_t pairs = 500,
                                     unsigned max_degree = 30);
SuiteReport check_factorization(unsigned max_degree = 12);
SuiteReport check_valuations(std::uint64_t seed, std::size_t samples = 1000);
SuiteReport check_splitting(std::uint64_t seed, std::size_t samples = 500, std::size_t section_pairs = 200);
SuiteReport check_perfect_closure(std::uint64_t seed, std::size_t round_trips = 200, std::size_t frobenius_samples = 300);
SuiteReport check_norms(std::uint64_t seed, std::size_t pairs = 300, std::size_t base_elements = 100);
SuiteReport check_rank(std::uint64_t seed, std::size_t matrices = 100);
/// Wall-clock limits: factoring a degree-512 polynomial over GF(2) in under
/// 1 s, multiplying two of degree 10^4 in under 0.5 s.
SuiteReport check_performance(std::uint64_t seed);

/// Every suite except the timing one; deterministic for a given seed.
std::vector<SuiteReport> run_selftest(std::uint64_t seed, std::uint64_t scan_bound = 1'000'000);

}  // namespace fieldunits
