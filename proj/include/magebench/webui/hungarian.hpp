#pragma once

#include <vector>

namespace mage::webui {

struct Assignment {
  std::vector<int> row_to_col;  // -1 when the row is left unassigned
  double value = 0.0;
};

// Maximum-weight assignment on a rectangular matrix: min(rows, cols) pairs,
// each row and column used at most once. O(n^2 m).
Assignment maximize_assignment(const std::vector<std::vector<double>>& weights);

}  // namespace mage::webui
