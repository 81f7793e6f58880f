#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "memp/grid.hpp"

namespace memp {

// Customer set H. Points are distinct, sorted row-major and split into the
// Euclidean side H_E (col <= K) and the Manhattan side H_M (col > K).
class DeliverySet {
 public:
  DeliverySet() = default;
  // Throws PreconditionError on duplicates or points outside the grid.
  DeliverySet(const EMGrid& grid, std::vector<GridPoint> points);

  std::span<const GridPoint> points() const { return points_; }
  std::span<const GridPoint> euclidean() const { return euclidean_; }
  std::span<const GridPoint> manhattan() const { return manhattan_; }

  std::size_t size() const { return points_.size(); }
  std::size_t n_e() const { return euclidean_.size(); }
  std::size_t n_m() const { return manhattan_.size(); }
  bool empty() const { return points_.empty(); }

 private:
  std::vector<GridPoint> points_;
  std::vector<GridPoint> euclidean_;
  std::vector<GridPoint> manhattan_;
};

// A projected customer carrying how many original customers it stands for.
struct WeightedColumnPoint {
  GridPoint point;
  int multiplicity = 1;
};

// Round-trip cost 2 * sum_{v in H} d(v, u).
double delivery_cost(const EMGrid& grid, const DeliverySet& h, GridPoint u);

// delivery_cost with H = every vertex of the grid.
double full_grid_cost(const EMGrid& grid, GridPoint u);

// One-way full-grid cost from (mid_row, c), O(1) from the column-cost
// prefix sums. For c <= K the candidate is on the Euclidean side:
//   sum_{j=0}^{c-1} D_E(j) + sum_{j=1}^{K-c} D_E(j)
//   + (C-K) D_E(K-c) + R (C-K)(C-K+1)/2
// and for c >= K:
//   sum_{j=1}^{K-1} D_E(j) + R (K-1)(c-K)
//   + sum_{j=0}^{c-K} D_M(j) + sum_{j=1}^{C-c} D_M(j)
// Both branches agree at c = K.
double midrow_cost(const ColumnCostTable& table, int col);

}  // namespace memp
