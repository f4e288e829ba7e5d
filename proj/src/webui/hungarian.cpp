#include "magebench/webui/hungarian.hpp"

#include <limits>
#include <stdexcept>

namespace mage::webui {

namespace {

// Shortest augmenting path with potentials; requires n <= m, minimizes cost.
std::vector<int> solve_min(const std::vector<std::vector<double>>& cost, int n, int m) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<int> p(m + 1, 0), way(m + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(m + 1, inf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row(n, -1);
  for (int j = 1; j <= m; ++j)
    if (p[j]) row[p[j] - 1] = j - 1;
  return row;
}

}  // namespace

Assignment maximize_assignment(const std::vector<std::vector<double>>& w) {
  Assignment out;
  const int rows = static_cast<int>(w.size());
  if (rows == 0) return out;
  const int cols = static_cast<int>(w[0].size());
  for (const auto& r : w)
    if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("assignment matrix must be rectangular");
  out.row_to_col.assign(rows, -1);
  if (cols == 0) return out;

  if (rows <= cols) {
    std::vector<std::vector<double>> cost(rows, std::vector<double>(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) cost[i][j] = -w[i][j];
    out.row_to_col = solve_min(cost, rows, cols);
  } else {
    std::vector<std::vector<double>> cost(cols, std::vector<double>(rows));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) cost[j][i] = -w[i][j];
    const auto col_to_row = solve_min(cost, cols, rows);
    for (int j = 0; j < cols; ++j) out.row_to_col[col_to_row[j]] = j;
  }
  for (int i = 0; i < rows; ++i)
    if (out.row_to_col[i] >= 0) out.value += w[i][out.row_to_col[i]];
  return out;
}

}  // namespace mage::webui
