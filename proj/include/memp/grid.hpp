#pragma once

#include <compare>
#include <span>
#include <vector>

namespace memp {

// A vertex of the grid, 1-indexed.
struct GridPoint {
  int row = 1;
  int col = 1;

  auto operator<=>(const GridPoint&) const = default;
};

enum class Region { kEuclidean, kBorder, kManhattan };

const char* region_name(Region region);

// Euclidean-Manhattan grid (R, C, K). Columns 1..K use the Euclidean metric,
// columns K+1..C the Manhattan metric; column K is the border and belongs to
// the Euclidean side.
class EMGrid {
 public:
  // Throws PreconditionError unless rows >= 1, cols >= 1, 1 <= border <= cols.
  EMGrid(int rows, int cols, int border);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int border() const { return border_; }

  int mid_row() const { return (rows_ + 1) / 2; }
  int mid_col() const { return (cols_ + 1) / 2; }
  int half_border() const { return (border_ + 1) / 2; }

  long long vertex_count() const {
    return static_cast<long long>(rows_) * cols_;
  }
  long long euclidean_vertex_count() const {
    return static_cast<long long>(rows_) * border_;
  }
  long long manhattan_vertex_count() const {
    return static_cast<long long>(rows_) * (cols_ - border_);
  }

  bool contains(GridPoint p) const {
    return p.row >= 1 && p.row <= rows_ && p.col >= 1 && p.col <= cols_;
  }
  // Throws PreconditionError if p lies outside the grid.
  void check(GridPoint p) const;

  // col <= K (border included).
  bool on_euclidean_side(GridPoint p) const { return p.col <= border_; }
  // col >= K (border included).
  bool on_manhattan_side(GridPoint p) const { return p.col >= border_; }

  bool operator==(const EMGrid&) const = default;

 private:
  int rows_;
  int cols_;
  int border_;
};

Region region_of(const EMGrid& grid, GridPoint p);

double euclidean_length(GridPoint u, GridPoint v);
int manhattan_length(GridPoint u, GridPoint v);

// Shortest drone path length between two vertices. A path between the two
// sides crosses the border on the row of its Manhattan-side endpoint.
double distance(const EMGrid& grid, GridPoint u, GridPoint v);

// One-way sum of Euclidean distances from (mid_row, c) to every vertex of a
// column at horizontal offset j.
double column_cost_e(const EMGrid& grid, int offset);

// Same as column_cost_e under the Manhattan metric. Evaluated as the term
// sum, which is what direct enumeration gives.
double column_cost_m(const EMGrid& grid, int offset);

// Column costs D_E(j) for j in [0, K-1] and D_M(j) for j in [0, C-K], with
// inclusive running sums. Immutable once built.
class ColumnCostTable {
 public:
  explicit ColumnCostTable(const EMGrid& grid);

  const EMGrid& grid() const { return grid_; }

  std::span<const double> d_e() const { return d_e_; }
  std::span<const double> d_m() const { return d_m_; }
  std::span<const double> prefix_e() const { return prefix_e_; }
  std::span<const double> prefix_m() const { return prefix_m_; }

  // Sum of d_e[j] for j in [first, last]; zero when last < first.
  double sum_e(int first, int last) const;
  double sum_m(int first, int last) const;

 private:
  EMGrid grid_;
  std::vector<double> d_e_;
  std::vector<double> d_m_;
  std::vector<double> prefix_e_;
  std::vector<double> prefix_m_;
};

inline ColumnCostTable build_table(const EMGrid& grid) {
  return ColumnCostTable(grid);
}

}  // namespace memp
