#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "memp/grid.hpp"
#include "memp/solution.hpp"

namespace memp {

// Counts midrow_cost queries and caches them per column.
class MidrowEvaluator {
 public:
  explicit MidrowEvaluator(const ColumnCostTable& table);

  double operator()(int col);
  std::int64_t evaluations() const { return evaluations_; }
  const ColumnCostTable& table() const { return table_; }

 private:
  const ColumnCostTable& table_;
  std::vector<std::optional<double>> cache_;
  std::int64_t evaluations_ = 0;
};

// Binary search for the column in [lo, hi] with the least mid-row cost.
// The interval must lie inside [half_border, border], where the cost is
// unimodal; the lowest column wins on plateaus.
int find_minimum(MidrowEvaluator& eval, int lo, int hi);
int find_minimum(const ColumnCostTable& table, int lo, int hi);

// Exact full-grid median in O(log K) queries once the table is built.
Solution opt_f(const ColumnCostTable& table);
Solution opt_f(const EMGrid& grid);

// Manhattan median (mid_row, mid_col); within sqrt(2) of the optimum.
Solution cmall_f(const ColumnCostTable& table);
Solution cmall_f(const EMGrid& grid);

// Moves the Manhattan side onto the border and takes the column centroid
// mu = K(2C-K+1)/(2C), rounded half-up and clamped to [1, K].
Solution cemb_f(const ColumnCostTable& table);
Solution cemb_f(const EMGrid& grid);

// Moves the Euclidean side onto the border: column K if K >= mid_col,
// otherwise mid_col.
Solution cmeb_f(const ColumnCostTable& table);
Solution cmeb_f(const EMGrid& grid);

// Cheaper of cemb_f and cmeb_f; ties go to cemb_f.
Solution best_f(const ColumnCostTable& table);
Solution best_f(const EMGrid& grid);

enum class FullAlgorithm { kOptF, kCmallF, kCembF, kCmebF, kBestF };

std::string_view algorithm_tag(FullAlgorithm algorithm);
std::optional<FullAlgorithm> parse_full_algorithm(std::string_view name);
Solution solve_full(FullAlgorithm algorithm, const ColumnCostTable& table);

}  // namespace memp
