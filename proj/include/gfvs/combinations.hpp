#pragma once

#include <numeric>
#include <vector>

namespace gfvs {

/// Calls visit(indices) for every r-subset of {0..n-1} in lexicographic
/// order. Stops early and returns true as soon as visit returns true.
template <typename Visit>
bool for_each_combination(int n, int r, Visit&& visit) {
  if (r < 0 || r > n) return false;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (visit(static_cast<const std::vector<int>&>(idx))) return true;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace gfvs
