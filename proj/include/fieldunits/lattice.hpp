// Exact rank of integer matrices.
#pragma once

#include <cstdint>
#include <vector>

namespace fieldunits {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Rank over Q (equivalently over Z) by fraction-free Bareiss elimination
/// with arbitrary-precision intermediates. Rows must have equal length.
std::size_t integer_rank(const IntMatrix& rows);

}  // namespace fieldunits
