#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "memp/costs.hpp"
#include "memp/grid.hpp"
#include "memp/solution.hpp"

namespace memp {

struct RowMinimum {
  GridPoint point;
  // Weighted one-way Euclidean distance sum at `point`.
  double cost = 0.0;
  std::int64_t evaluations = 0;
};

// Minimizes the weighted Euclidean distance sum over (row, c), c in [lo, hi],
// by binary search; the sum is convex in c. Every weighted point and the
// interval must lie on the Euclidean side. Lowest column wins on plateaus.
RowMinimum minimize_on_row(const EMGrid& grid,
                           std::span<const WeightedColumnPoint> weighted,
                           int row, int lo, int hi);

GridPoint find_minimum_on_row(const EMGrid& grid,
                              std::span<const WeightedColumnPoint> weighted,
                              int row, int lo, int hi);

// Lower weighted median of the column coordinates: the smallest column whose
// cumulative multiplicity reaches half the total.
int column_median(std::span<const WeightedColumnPoint> weighted);

// H_E together with H_M projected onto the border (r_v, K), duplicates merged.
std::vector<WeightedColumnPoint> project_to_border(const EMGrid& grid,
                                                   const DeliverySet& h);

// Best dispatching point on the Euclidean side (col <= K).
Solution cemb_p(const EMGrid& grid, const DeliverySet& h);

// Best dispatching point on the Manhattan side including the border.
Solution cmeb_p(const EMGrid& grid, const DeliverySet& h);

// Exact median: the cheaper of cemb_p and cmeb_p, ties to cemb_p.
Solution opt_p(const EMGrid& grid, const DeliverySet& h);

// opt_p with both row scans replaced by binary search over rows. Exact on
// the Manhattan side; the Euclidean side may miss the optimum.
Solution s_opt_p(const EMGrid& grid, const DeliverySet& h);

// Coordinate-wise lower medians of H, ignoring the border.
Solution cmall_p(const EMGrid& grid, const DeliverySet& h);

enum class PartialAlgorithm { kOptP, kSOptP, kCmallP, kCembP, kCmebP };

std::string_view algorithm_tag(PartialAlgorithm algorithm);
std::optional<PartialAlgorithm> parse_partial_algorithm(std::string_view name);
Solution solve_partial(PartialAlgorithm algorithm, const EMGrid& grid,
                       const DeliverySet& h);

}  // namespace memp
