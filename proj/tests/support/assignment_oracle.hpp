#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace mage::webui::oracle {

// Best total over every injective row->column (or column->row) map.
inline double brute_force_assignment(const std::vector<std::vector<double>>& w) {
  const int rows = static_cast<int>(w.size()), cols = static_cast<int>(w[0].size());
  double best = -1e300;
  if (rows <= cols) {
    std::vector<int> perm(cols);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      double v = 0;
      for (int i = 0; i < rows; ++i) v += w[i][perm[i]];
      best = std::max(best, v);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    std::vector<int> perm(rows);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      double v = 0;
      for (int j = 0; j < cols; ++j) v += w[perm[j]][j];
      best = std::max(best, v);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return best;
}

}  // namespace mage::webui::oracle
