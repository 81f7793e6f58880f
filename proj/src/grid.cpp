#include "memp/grid.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <string>

#include "memp/error.hpp"

namespace memp {

const char* region_name(Region region) {
  switch (region) {
    case Region::kEuclidean:
      return "euclidean";
    case Region::kBorder:
      return "border";
    case Region::kManhattan:
      return "manhattan";
  }
  return "unknown";
}

EMGrid::EMGrid(int rows, int cols, int border)
    : rows_(rows), cols_(cols), border_(border) {
  if (rows < 1) throw PreconditionError("grid needs at least one row");
  if (cols < 1) throw PreconditionError("grid needs at least one column");
  if (border < 1 || border > cols) {
    throw PreconditionError("border column " + std::to_string(border) +
                            " outside [1, " + std::to_string(cols) + "]");
  }
}

void EMGrid::check(GridPoint p) const {
  if (!contains(p)) {
    throw PreconditionError("point (" + std::to_string(p.row) + ", " +
                            std::to_string(p.col) + ") outside " +
                            std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " grid");
  }
}

Region region_of(const EMGrid& grid, GridPoint p) {
  grid.check(p);
  if (p.col < grid.border()) return Region::kEuclidean;
  if (p.col == grid.border()) return Region::kBorder;
  return Region::kManhattan;
}

double euclidean_length(GridPoint u, GridPoint v) {
  return std::hypot(static_cast<double>(u.row - v.row),
                    static_cast<double>(u.col - v.col));
}

int manhattan_length(GridPoint u, GridPoint v) {
  return std::abs(u.row - v.row) + std::abs(u.col - v.col);
}

double distance(const EMGrid& grid, GridPoint u, GridPoint v) {
  grid.check(u);
  grid.check(v);
  if (grid.on_euclidean_side(u) && grid.on_euclidean_side(v)) {
    return euclidean_length(u, v);
  }
  if (grid.on_manhattan_side(u) && grid.on_manhattan_side(v)) {
    return manhattan_length(u, v);
  }
  // Exactly one endpoint is strictly right of the border.
  const GridPoint& e = u.col < grid.border() ? u : v;
  const GridPoint& m = u.col < grid.border() ? v : u;
  const GridPoint crossing{m.row, grid.border()};
  return euclidean_length(e, crossing) + (m.col - grid.border());
}

double column_cost_e(const EMGrid& grid, int offset) {
  if (offset < 0) throw PreconditionError("negative column offset");
  const double j = offset;
  const int mid = grid.mid_row();
  double sum = 0.0;
  for (int i = 1; i <= mid - 1; ++i) sum += std::sqrt(double(i) * i + j * j);
  double cost = j + 2.0 * sum;
  if ((grid.rows() - 1) % 2 == 1) cost += std::sqrt(double(mid) * mid + j * j);
  return cost;
}

double column_cost_m(const EMGrid& grid, int offset) {
  if (offset < 0) throw PreconditionError("negative column offset");
  const long long j = offset;
  const long long mid = grid.mid_row();
  long long cost = j;
  for (long long i = 1; i <= mid - 1; ++i) cost += 2 * (i + j);
  if ((grid.rows() - 1) % 2 == 1) cost += mid + j;
  return static_cast<double>(cost);
}

ColumnCostTable::ColumnCostTable(const EMGrid& grid) : grid_(grid) {
  const int k = grid.border();
  d_e_.reserve(k);
  prefix_e_.reserve(k);
  double running = 0.0;
  for (int j = 0; j < k; ++j) {
    d_e_.push_back(column_cost_e(grid, j));
    running += d_e_.back();
    prefix_e_.push_back(running);
  }

  // D_M(j) = D_M(0) + j*R, so only the first entry needs the full sum.
  const int width = grid.cols() - k;
  const double base = column_cost_m(grid, 0);
  d_m_.reserve(width + 1);
  prefix_m_.reserve(width + 1);
  running = 0.0;
  for (int j = 0; j <= width; ++j) {
    d_m_.push_back(base + static_cast<double>(j) * grid.rows());
    running += d_m_.back();
    prefix_m_.push_back(running);
  }
}

double ColumnCostTable::sum_e(int first, int last) const {
  if (last < first) return 0.0;
  assert(first >= 0 && last < static_cast<int>(prefix_e_.size()));
  return prefix_e_[last] - (first > 0 ? prefix_e_[first - 1] : 0.0);
}

double ColumnCostTable::sum_m(int first, int last) const {
  if (last < first) return 0.0;
  assert(first >= 0 && last < static_cast<int>(prefix_m_.size()));
  return prefix_m_[last] - (first > 0 ? prefix_m_[first - 1] : 0.0);
}

}  // namespace memp
