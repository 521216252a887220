#include <gtest/gtest.h>

#include <vector>

#include "fieldunits/scan.hpp"

using namespace fieldunits;

namespace {

// Trial division; n is a prime power iff it has exactly one prime factor.
bool naive_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    return n == 1;
  }
  return true;
}

std::vector<std::uint64_t> qs(const ScanReport& r) {
  std::vector<std::uint64_t> out;
  for (const auto& e : r.entries) out.push_back(e.q);
  return out;
}

}  // namespace

TEST(Scan, KnownSmallBounds) {
  const ScanReport r = classify_scan(10);
  EXPECT_EQ(qs(r), (std::vector<std::uint64_t>{2, 3, 4, 5, 8, 9}));
  EXPECT_EQ(r.entries[0].family, FieldFamily::F2);
  EXPECT_EQ(r.entries[1].family, FieldFamily::FermatPrime);
  EXPECT_EQ(r.entries[2].family, FieldFamily::MersennePlusOne);
  EXPECT_EQ(r.entries[5].family, FieldFamily::F9);
  EXPECT_EQ(r.prime_powers_checked, 7u);  // 2 3 4 5 7 8 9
  EXPECT_TRUE(r.disagreements.empty());
  EXPECT_EQ(r.mode, ScanMode::Exhaustive);
  EXPECT_EQ(qs(classify_scan(2)), (std::vector<std::uint64_t>{2}));
}

TEST(Scan, BoundsAreChecked) {
  EXPECT_THROW(classify_scan(1), std::out_of_range);
  EXPECT_THROW(classify_scan(0), std::out_of_range);
  EXPECT_THROW(classify_scan(kScanMaxBound + 1), std::out_of_range);
}

TEST(Scan, MatchesTrialDivisionUpToAMillion) {
  const std::uint64_t bound = 1'000'000;
  std::vector<std::uint64_t> expected;
  std::uint64_t prime_powers = 0;
  for (std::uint64_t q = 2; q <= bound; ++q) {
    if (!naive_prime_power(q)) continue;
    ++prime_powers;
    if (q == 2 || naive_prime_power(q - 1)) expected.push_back(q);
  }
  const ScanReport r = classify_scan(bound);
  EXPECT_EQ(qs(r), expected);
  EXPECT_EQ(r.prime_powers_checked, prime_powers);
  EXPECT_TRUE(r.disagreements.empty());
  for (const auto& e : r.entries) EXPECT_TRUE(e.oracle_indecomposable) << e.q;
  EXPECT_EQ(expected, (std::vector<std::uint64_t>{2, 3, 4, 5, 8, 9, 17, 32, 128, 257, 8192, 65537, 131072, 524288}));
}

TEST(Scan, IndependentOfWorkerCount) {
  const ScanReport one = classify_scan(200'000, 1);
  for (unsigned w : {2u, 3u, 7u, 16u}) {
    const ScanReport r = classify_scan(200'000, w);
    EXPECT_EQ(qs(r), qs(one)) << w;
    EXPECT_EQ(r.prime_powers_checked, one.prime_powers_checked) << w;
  }
}

TEST(Scan, CandidateModeUpToMaxBound) {
  // Every q <= 2^40 with q - 1 = 1 or a prime power, by trial division over
  // q = 2^m and q = 2^k + 1 (the only shapes q - 1 = p^j allows, since one of
  // q, q - 1 is even).
  std::vector<std::uint64_t> expected;
  for (unsigned m = 1; m <= 40; ++m) {
    const std::uint64_t a = std::uint64_t{1} << m;
    if (m == 1 || naive_prime_power(a - 1)) expected.push_back(a);
    if (a + 1 <= kScanMaxBound && naive_prime_power(a + 1)) expected.push_back(a + 1);
  }
  const ScanReport r = classify_scan(kScanMaxBound);
  EXPECT_EQ(r.mode, ScanMode::Candidates);
  EXPECT_EQ(qs(r), expected);
  EXPECT_TRUE(r.disagreements.empty());
  EXPECT_EQ(r.entries.size(), 15u);
  EXPECT_EQ(r.entries.back().q, std::uint64_t{1} << 31);
  EXPECT_EQ(to_string(ScanMode::Candidates), "candidates");
}
