#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace scarf {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rank over Q by fraction-free (Bareiss) elimination; all interior
/// divisions are exact, so no rationals are ever formed.
inline int exact_rank(std::vector<std::vector<BigInt>> a) {
  if (a.empty() || a[0].empty()) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int rank = 0;
  BigInt prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int j = c + 1; j < cols; ++j)
        a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace scarf
