#include "fieldunits/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace fieldunits {

std::size_t integer_rank(const IntMatrix& rows) {
  using boost::multiprecision::cpp_int;
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::vector<std::vector<cpp_int>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != ncols) throw std::invalid_argument("integer_rank: ragged matrix");
    m.emplace_back(r.begin(), r.end());
  }
  const std::size_t nrows = m.size();
  std::size_t rank = 0;
  cpp_int prev_pivot = 1;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t pivot = rank;
    while (pivot < nrows && m[pivot][col] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(m[pivot], m[rank]);
    // Bareiss step: every division below is exact.
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j)
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev_pivot;
      m[i][col] = 0;
    }
    prev_pivot = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace fieldunits
