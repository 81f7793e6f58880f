#include "memp/costs.hpp"

#include <algorithm>
#include <string>

#include "memp/error.hpp"

namespace memp {

DeliverySet::DeliverySet(const EMGrid& grid, std::vector<GridPoint> points)
    : points_(std::move(points)) {
  for (const GridPoint& p : points_) grid.check(p);
  std::sort(points_.begin(), points_.end());
  const auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end()) {
    throw PreconditionError("duplicate delivery point (" +
                            std::to_string(dup->row) + ", " +
                            std::to_string(dup->col) + ")");
  }
  for (const GridPoint& p : points_) {
    (grid.on_euclidean_side(p) ? euclidean_ : manhattan_).push_back(p);
  }
}

double delivery_cost(const EMGrid& grid, const DeliverySet& h, GridPoint u) {
  grid.check(u);
  double sum = 0.0;
  for (const GridPoint& v : h.points()) sum += distance(grid, v, u);
  return 2.0 * sum;
}

double full_grid_cost(const EMGrid& grid, GridPoint u) {
  grid.check(u);
  double sum = 0.0;
  for (int r = 1; r <= grid.rows(); ++r) {
    for (int c = 1; c <= grid.cols(); ++c) sum += distance(grid, {r, c}, u);
  }
  return 2.0 * sum;
}

double midrow_cost(const ColumnCostTable& table, int col) {
  const EMGrid& g = table.grid();
  if (col < 1 || col > g.cols()) {
    throw PreconditionError("column " + std::to_string(col) + " outside [1, " +
                            std::to_string(g.cols()) + "]");
  }
  const int k = g.border();
  const double rows = g.rows();
  const double manhattan_width = g.cols() - k;

  if (col <= k) {
    const double cost_e = table.sum_e(0, col - 1) + table.sum_e(1, k - col);
    const double cost_m = manhattan_width * table.d_e()[k - col] +
                          rows * manhattan_width * (manhattan_width + 1) / 2.0;
    return cost_e + cost_m;
  }
  const double cost_e = table.sum_e(1, k - 1) + rows * (k - 1) * double(col - k);
  const double cost_m =
      table.sum_m(0, col - k) + table.sum_m(1, g.cols() - col);
  return cost_e + cost_m;
}

}  // namespace memp
