#include "fieldunits/scan.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "fieldunits/integer.hpp"
#include "fieldunits/oracles.hpp"

namespace fieldunits {

std::string to_string(ScanMode mode) { return mode == ScanMode::Exhaustive ? "exhaustive" : "candidates"; }

namespace {

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m <= bound; m += p) composite[m] = true;
    for (std::uint64_t q = p;; q *= p) {
      out.push_back(q);
      if (q > bound / p) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> parity_candidates(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (unsigned k = 1; k < 63 && (std::uint64_t{1} << k) <= bound; ++k) {
    out.push_back(std::uint64_t{1} << k);
    if ((std::uint64_t{1} << k) + 1 <= bound) out.push_back((std::uint64_t{1} << k) + 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::remove_if(out.begin(), out.end(), [](std::uint64_t q) { return !is_prime_power(q); }), out.end());
  return out;
}

struct ChunkResult {
  std::vector<ScanEntry> entries;
  std::vector<std::uint64_t> disagreements;
};

ChunkResult scan_chunk(const std::vector<std::uint64_t>& qs, std::size_t begin, std::size_t end) {
  ChunkResult r;
  for (std::size_t i = begin; i < end; ++i) {
    const std::uint64_t q = qs[i];
    const bool oracle = oracle::unit_group_indecomposable(q);
    try {
      const Classification c = classify_finite_field(q);
      if (c.indecomposable() != oracle) r.disagreements.push_back(q);
      if (c.indecomposable()) r.entries.push_back({q, std::get<Indecomposable>(c.verdict).family, oracle});
    } catch (const std::logic_error&) {
      // q - 1 a prime power outside every family.
      r.disagreements.push_back(q);
    }
  }
  return r;
}

}  // namespace

ScanReport classify_scan(std::uint64_t bound, unsigned workers) {
  if (bound < 2 || bound > kScanMaxBound)
    throw std::out_of_range("classify-scan bound must lie in [2, 2^40], got " + std::to_string(bound));
  ScanReport report;
  report.bound = bound;
  report.mode = bound <= kExhaustiveScanLimit ? ScanMode::Exhaustive : ScanMode::Candidates;
  const std::vector<std::uint64_t> qs =
      report.mode == ScanMode::Exhaustive ? prime_powers_up_to(bound) : parity_candidates(bound);
  report.prime_powers_checked = qs.size();

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, qs.size() / 1024)));
  std::vector<ChunkResult> results(workers);
  std::vector<std::thread> threads;
  const std::size_t step = (qs.size() + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(qs.size(), w * step), end = std::min(qs.size(), begin + step);
    threads.emplace_back([&, w, begin, end] { results[w] = scan_chunk(qs, begin, end); });
  }
  for (auto& t : threads) t.join();
  // Chunks are contiguous and ascending, so concatenation keeps q ascending.
  for (auto& r : results) {
    report.entries.insert(report.entries.end(), r.entries.begin(), r.entries.end());
    report.disagreements.insert(report.disagreements.end(), r.disagreements.begin(), r.disagreements.end());
  }
  return report;
}

}  // namespace fieldunits
