#include "linear_feasibility.hpp"

#include <boost/rational.hpp>

namespace schubert::detail {

using Q = boost::rational<long long>;
// Mixed rational/int comparisons recurse forever under C++20 operator rewriting.
const Q kZero(0);

// Phase one of the simplex method with Bland's rule. Rows are coordinates,
// columns the generators followed by one artificial variable per row.
bool in_cone(const std::vector<std::vector<int>>& gens, const std::vector<int>& target) {
  const int rows = static_cast<int>(target.size());
  const int g = static_cast<int>(gens.size());
  const int cols = g + rows;
  bool zero = true;
  for (int v : target) zero &= v == 0;
  if (zero) return true;
  if (g == 0) return false;

  std::vector<std::vector<Q>> t(rows, std::vector<Q>(cols + 1));
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) {
    int sign = target[i] < 0 ? -1 : 1;
    for (int j = 0; j < g; ++j) t[i][j] = Q(sign * gens[j][i]);
    t[i][g + i] = Q(1);
    t[i][cols] = Q(sign * target[i]);
    basis[i] = g + i;
  }
  // reduced costs of the objective "sum of artificials"
  std::vector<Q> cost(cols + 1);
  for (int j = 0; j <= cols; ++j) {
    if (j >= g && j < cols) continue;
    for (int i = 0; i < rows; ++i) cost[j] -= t[i][j];
  }

  while (true) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (cost[j] < kZero) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Q best;
    for (int i = 0; i < rows; ++i) {
      if (t[i][enter] <= kZero) continue;
      Q ratio = t[i][cols] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded cannot happen in phase one
    Q piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == kZero) continue;
      Q f = t[i][enter];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    Q f = cost[enter];
    for (int j = 0; j <= cols; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  return cost[cols] == kZero;
}

}  // namespace schubert::detail
