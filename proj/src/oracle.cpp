#include "memp/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "memp/error.hpp"

namespace memp::oracle {

namespace {

double raw_euclidean(GridPoint u, GridPoint v) {
  const double dr = u.row - v.row;
  const double dc = u.col - v.col;
  return std::sqrt(dr * dr + dc * dc);
}

double raw_manhattan(GridPoint u, GridPoint v) {
  return std::abs(u.row - v.row) + std::abs(u.col - v.col);
}

bool admissible(const EMGrid& grid, GridPoint u, Candidates candidates) {
  switch (candidates) {
    case Candidates::kAll:
      return true;
    case Candidates::kEuclideanSide:
      return u.col <= grid.border();
    case Candidates::kManhattanSide:
      return u.col >= grid.border();
  }
  return false;
}

Solution scan(const EMGrid& grid, const std::vector<GridPoint>& customers,
              Candidates candidates, std::int64_t budget) {
  std::int64_t admitted = 0;
  for (int r = 1; r <= grid.rows(); ++r) {
    for (int c = 1; c <= grid.cols(); ++c) {
      admitted += admissible(grid, {r, c}, candidates);
    }
  }
  const auto work = admitted * static_cast<std::int64_t>(customers.size());
  if (work > budget) {
    throw PreconditionError("brute force needs " + std::to_string(work) +
                            " evaluations, budget is " +
                            std::to_string(budget));
  }

  Solution best;
  best.algorithm = "BRUTE-FORCE";
  best.cost = std::numeric_limits<double>::infinity();
  for (int r = 1; r <= grid.rows(); ++r) {
    for (int c = 1; c <= grid.cols(); ++c) {
      const GridPoint u{r, c};
      if (!admissible(grid, u, candidates)) continue;
      double sum = 0.0;
      for (const GridPoint& v : customers) {
        sum += brute_force_distance(grid, v, u);
      }
      ++best.evaluations;
      if (2.0 * sum < best.cost) {
        best.cost = 2.0 * sum;
        best.dp = u;
      }
    }
  }
  return best;
}

}  // namespace

double brute_force_distance(const EMGrid& grid, GridPoint u, GridPoint v) {
  grid.check(u);
  grid.check(v);
  const int k = grid.border();
  const bool u_left = u.col <= k;
  const bool v_left = v.col <= k;
  const bool u_right = u.col >= k;
  const bool v_right = v.col >= k;
  if (u_left && v_left) return raw_euclidean(u, v);
  if (u_right && v_right) return raw_manhattan(u, v);

  const GridPoint& e = u_left ? u : v;
  const GridPoint& m = u_left ? v : u;
  double best = std::numeric_limits<double>::infinity();
  for (int row = 1; row <= grid.rows(); ++row) {
    const GridPoint w{row, k};
    const double through = raw_euclidean(e, w) + raw_manhattan(w, m);
    if (through < best) best = through;
  }
  return best;
}

Solution brute_force_median(const EMGrid& grid, const DeliverySet& h,
                            Candidates candidates, std::int64_t budget) {
  const auto points = h.points();
  return scan(grid, std::vector<GridPoint>(points.begin(), points.end()),
              candidates, budget);
}

Solution brute_force_median(const EMGrid& grid, FullGrid, Candidates candidates,
                            std::int64_t budget) {
  std::vector<GridPoint> all;
  all.reserve(grid.vertex_count());
  for (int r = 1; r <= grid.rows(); ++r) {
    for (int c = 1; c <= grid.cols(); ++c) all.push_back({r, c});
  }
  return scan(grid, all, candidates, budget);
}

}  // namespace memp::oracle
