#include <cmath>

#include <doctest.h>

#include "memp/costs.hpp"
#include "memp/error.hpp"
#include "memp/oracle.hpp"

using namespace memp;

namespace {

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Cost of a Manhattan-side candidate using only the c >= K decomposition.
double manhattan_branch(const ColumnCostTable& t, int col) {
  const EMGrid& g = t.grid();
  const int k = g.border();
  return t.sum_e(1, k - 1) + double(g.rows()) * (k - 1) * (col - k) +
         t.sum_m(0, col - k) + t.sum_m(1, g.cols() - col);
}

}  // namespace

TEST_CASE("delivery set partitions and sorts") {
  const EMGrid g(4, 6, 3);
  const DeliverySet h(g, {{2, 5}, {1, 1}, {3, 3}, {1, 4}});
  REQUIRE(h.size() == 4);
  CHECK(h.points()[0] == GridPoint{1, 1});
  CHECK(h.points()[1] == GridPoint{1, 4});
  CHECK(h.n_e() == 2);  // (1,1) and the border point (3,3)
  CHECK(h.n_m() == 2);
  CHECK(h.n_e() + h.n_m() == h.size());

  CHECK_THROWS_AS(DeliverySet(g, {{1, 1}, {1, 1}}), PreconditionError);
  CHECK_THROWS_AS(DeliverySet(g, {{5, 1}}), PreconditionError);
  CHECK(DeliverySet().empty());
}

TEST_CASE("delivery cost examples") {
  const EMGrid g(2, 4, 2);
  CHECK(delivery_cost(g, DeliverySet(), {1, 1}) == 0.0);
  CHECK(delivery_cost(g, DeliverySet(g, {{2, 3}}), {2, 3}) == 0.0);
  const DeliverySet h(g, {{1, 1}, {2, 4}});
  CHECK(delivery_cost(g, h, {2, 2}) ==
        doctest::Approx(2.0 * (std::sqrt(2.0) + 2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(delivery_cost(g, h, {3, 1}), PreconditionError);
}

TEST_CASE("full grid cost examples") {
  CHECK(full_grid_cost(EMGrid(1, 1, 1), {1, 1}) == 0.0);
  CHECK(full_grid_cost(EMGrid(1, 3, 2), {1, 2}) == doctest::Approx(4.0));
  CHECK(full_grid_cost(EMGrid(3, 3, 2), {2, 2}) ==
        doctest::Approx(21.65685424949238).epsilon(1e-12));
  CHECK_THROWS_AS(full_grid_cost(EMGrid(3, 3, 2), {2, 4}), PreconditionError);
}

TEST_CASE("mid-row cost examples") {
  const ColumnCostTable t1(EMGrid(1, 3, 2));
  CHECK(midrow_cost(t1, 2) == doctest::Approx(2.0));
  CHECK(midrow_cost(t1, 3) == doctest::Approx(3.0));
  const ColumnCostTable t3(EMGrid(3, 3, 2));
  CHECK(midrow_cost(t3, 2) == doctest::Approx(8.0 + 2.0 * std::sqrt(2.0)));
  CHECK(midrow_cost(t3, 1) == doctest::Approx(12.65685424949238));
  CHECK_THROWS_AS(midrow_cost(t3, 0), PreconditionError);
  CHECK_THROWS_AS(midrow_cost(t3, 4), PreconditionError);
}

TEST_CASE("mid-row cost agrees with enumeration on every small grid") {
  for (int rows = 1; rows <= 12; ++rows) {
    for (int cols = 1; cols <= 12; ++cols) {
      for (int k = 1; k <= cols; ++k) {
        const EMGrid g(rows, cols, k);
        const ColumnCostTable t(g);
        for (int c = 1; c <= cols; ++c) {
          const GridPoint u{g.mid_row(), c};
          REQUIRE(close_rel(2.0 * midrow_cost(t, c), full_grid_cost(g, u), 1e-9));
        }
        // The two decompositions meet at the border column.
        REQUIRE(close_rel(midrow_cost(t, k), manhattan_branch(t, k), 1e-12));
      }
    }
  }
}

TEST_CASE("mid-row cost shape") {
  for (int rows = 1; rows <= 12; ++rows) {
    for (int cols = 1; cols <= 12; ++cols) {
      for (int k = 1; k <= cols; ++k) {
        const EMGrid g(rows, cols, k);
        const ColumnCostTable t(g);
        // Single minimum on [half_border, border]: no interior strict local
        // minimum apart from the global one.
        double lowest = midrow_cost(t, g.half_border());
        for (int c = g.half_border(); c <= k; ++c) {
          lowest = std::min(lowest, midrow_cost(t, c));
        }
        for (int c = g.half_border() + 1; c < k; ++c) {
          const double here = midrow_cost(t, c);
          const bool local_min = here < midrow_cost(t, c - 1) - 1e-9 &&
                                 here < midrow_cost(t, c + 1) - 1e-9;
          if (local_min) REQUIRE(close_rel(here, lowest, 1e-12));
        }
        if (k <= g.mid_col()) {
          for (int c = k; c < g.mid_col(); ++c) {
            REQUIRE(midrow_cost(t, c + 1) <= midrow_cost(t, c) + 1e-9);
          }
          for (int c = g.mid_col(); c < cols; ++c) {
            REQUIRE(midrow_cost(t, c + 1) >= midrow_cost(t, c) - 1e-9);
          }
        }
      }
    }
  }
}

TEST_CASE("delivery cost agrees with the oracle distance") {
  const EMGrid g(5, 7, 3);
  const DeliverySet h(g, {{1, 1}, {5, 7}, {3, 3}, {2, 6}, {4, 2}});
  for (int r = 1; r <= 5; ++r) {
    for (int c = 1; c <= 7; ++c) {
      double sum = 0.0;
      for (const auto& v : h.points()) sum += oracle::brute_force_distance(g, v, {r, c});
      CHECK(close_rel(delivery_cost(g, h, {r, c}), 2.0 * sum, 1e-12));
    }
  }
}
