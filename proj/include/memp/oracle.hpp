#pragma once

#include <cstdint>

#include "memp/costs.hpp"
#include "memp/grid.hpp"
#include "memp/solution.hpp"

// Exhaustive reference implementations. Nothing here goes through distance(),
// the column-cost tables or any solver, so they can be checked against it.
namespace memp::oracle {

inline constexpr std::int64_t kDefaultBudget = 100'000'000;

// Cross-side pairs minimize d_E(u, w) + d_M(w, v) over every border vertex w.
double brute_force_distance(const EMGrid& grid, GridPoint u, GridPoint v);

enum class Candidates {
  kAll,
  kEuclideanSide,  // col <= K
  kManhattanSide,  // col >= K
};

struct FullGrid {};
inline constexpr FullGrid kFullGrid{};

// Evaluates the round-trip cost at every candidate vertex and keeps the
// first minimum in row-major order. Throws PreconditionError when
// candidates * customers exceeds `budget`.
Solution brute_force_median(const EMGrid& grid, const DeliverySet& h,
                            Candidates candidates = Candidates::kAll,
                            std::int64_t budget = kDefaultBudget);
Solution brute_force_median(const EMGrid& grid, FullGrid,
                            Candidates candidates = Candidates::kAll,
                            std::int64_t budget = kDefaultBudget);

}  // namespace memp::oracle
