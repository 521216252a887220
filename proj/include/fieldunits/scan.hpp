// Listing every q <= bound with indecomposable F_q^x, cross-checked per
// entry against the q - 1 prime-power oracle.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fieldunits/abelian.hpp"

namespace fieldunits {

inline constexpr std::uint64_t kScanMaxBound = std::uint64_t{1} << 40;
/// Above this bound only q = 2^m and q = 2^k + 1 are examined: if q - 1 = p^k
/// with p odd then q is even, and if p = 2 then q = 2^k + 1.
inline constexpr std::uint64_t kExhaustiveScanLimit = 100'000'000;

enum class ScanMode { Exhaustive, Candidates };
std::string to_string(ScanMode mode);

struct ScanEntry {
  std::uint64_t q;
  FieldFamily family;
  bool oracle_indecomposable;
};

struct ScanReport {
  std::uint64_t bound = 0;
  ScanMode mode = ScanMode::Exhaustive;
  /// Prime powers classified (and checked against the oracle).
  std::uint64_t prime_powers_checked = 0;
  /// Indecomposable fields in ascending q.
  std::vector<ScanEntry> entries;
  /// Prime powers on which the classifier and the oracle disagree.
  std::vector<std::uint64_t> disagreements;
};

/// workers = 0 picks the hardware concurrency. The report does not depend on
/// the number of workers. Throws std::out_of_range unless 2 <= bound <= 2^40.
ScanReport classify_scan(std::uint64_t bound, unsigned workers = 0);

}  // namespace fieldunits
