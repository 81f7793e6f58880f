#include "memp/solvers_partial.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>

#include "memp/error.hpp"
#include "unimodal.hpp"

namespace memp {

namespace {

void require_customers(const DeliverySet& h) {
  if (h.empty()) throw PreconditionError("delivery set is empty");
}

double weighted_euclidean_sum(std::span<const WeightedColumnPoint> weighted,
                              GridPoint u) {
  double sum = 0.0;
  for (const auto& w : weighted) sum += w.multiplicity * euclidean_length(w.point, u);
  return sum;
}

// Dispatching points (i, c) with c >= K. The cost separates into a row part
// and a column part, so the column is fixed at the weighted median chi.
class ManhattanSide {
 public:
  ManhattanSide(const EMGrid& grid, const DeliverySet& h)
      : grid_(grid), h_(h) {
    std::vector<WeightedColumnPoint> columns;
    columns.reserve(h.n_m() + 1);
    for (const GridPoint& v : h.manhattan()) columns.push_back({v, 1});
    if (h.n_e() > 0) {
      columns.push_back({{1, grid.border()}, static_cast<int>(h.n_e())});
    }
    chi_ = columns.empty() ? grid.border() : column_median(columns);
  }

  int chi() const { return chi_; }

  // One-way cost of serving H from (row, chi).
  double row_cost(int row) {
    ++evaluations_;
    const GridPoint u{row, chi_};
    const GridPoint crossing{row, grid_.border()};
    double sum = 0.0;
    for (const GridPoint& v : h_.manhattan()) sum += manhattan_length(v, u);
    const double to_border = chi_ - grid_.border();
    for (const GridPoint& v : h_.euclidean()) {
      sum += euclidean_length(v, crossing) + to_border;
    }
    return sum;
  }

  std::int64_t evaluations() const { return evaluations_; }

 private:
  const EMGrid& grid_;
  const DeliverySet& h_;
  int chi_ = 1;
  std::int64_t evaluations_ = 0;
};

Solution finish(const EMGrid& grid, const DeliverySet& h, GridPoint dp,
                std::string tag, std::int64_t evaluations) {
  Solution s;
  s.dp = dp;
  s.cost = delivery_cost(grid, h, dp);
  s.algorithm = std::move(tag);
  s.evaluations = evaluations;
  return s;
}

Solution cheaper(Solution euclidean_side, Solution manhattan_side,
                 std::string tag) {
  const std::int64_t evaluations =
      euclidean_side.evaluations + manhattan_side.evaluations;
  Solution best = manhattan_side.cost < euclidean_side.cost
                      ? std::move(manhattan_side)
                      : std::move(euclidean_side);
  best.algorithm = std::move(tag);
  best.evaluations = evaluations;
  return best;
}

int lower_median(std::vector<int> values) {
  const auto mid = values.begin() + (values.size() - 1) / 2;
  std::nth_element(values.begin(), mid, values.end());
  return *mid;
}

// Row-restricted minimum on the Euclidean side of a projected multiset.
class EuclideanSide {
 public:
  EuclideanSide(const EMGrid& grid, const DeliverySet& h)
      : grid_(grid), weighted_(project_to_border(grid, h)),
        rows_(grid.rows() + 1) {}

  const RowMinimum& row(int i) {
    auto& slot = rows_[i];
    if (!slot) {
      slot = minimize_on_row(grid_, weighted_, i, 1, grid_.border());
      evaluations_ += slot->evaluations;
    }
    return *slot;
  }

  std::int64_t evaluations() const { return evaluations_; }

 private:
  const EMGrid& grid_;
  std::vector<WeightedColumnPoint> weighted_;
  std::vector<std::optional<RowMinimum>> rows_;
  std::int64_t evaluations_ = 0;
};

}  // namespace

RowMinimum minimize_on_row(const EMGrid& grid,
                           std::span<const WeightedColumnPoint> weighted,
                           int row, int lo, int hi) {
  if (row < 1 || row > grid.rows()) {
    throw PreconditionError("row " + std::to_string(row) + " outside grid");
  }
  if (lo < 1 || lo > hi || hi > grid.border()) {
    throw PreconditionError("column interval [" + std::to_string(lo) + ", " +
                            std::to_string(hi) +
                            "] not on the Euclidean side");
  }
  for (const auto& w : weighted) {
    grid.check(w.point);
    if (!grid.on_euclidean_side(w.point)) {
      throw PreconditionError("weighted point right of the border");
    }
  }

  std::vector<std::optional<double>> cache(hi - lo + 1);
  RowMinimum result;
  auto cost = [&](int c) {
    auto& slot = cache[c - lo];
    if (!slot) {
      slot = weighted_euclidean_sum(weighted, {row, c});
      ++result.evaluations;
    }
    return *slot;
  };
  const int col = detail::unimodal_argmin(lo, hi, cost);
  result.point = {row, col};
  result.cost = cost(col);
  return result;
}

GridPoint find_minimum_on_row(const EMGrid& grid,
                              std::span<const WeightedColumnPoint> weighted,
                              int row, int lo, int hi) {
  return minimize_on_row(grid, weighted, row, lo, hi).point;
}

int column_median(std::span<const WeightedColumnPoint> weighted) {
  std::map<int, long long> by_column;
  long long total = 0;
  for (const auto& w : weighted) {
    if (w.multiplicity < 1) throw PreconditionError("multiplicity must be >= 1");
    by_column[w.point.col] += w.multiplicity;
    total += w.multiplicity;
  }
  if (total == 0) throw PreconditionError("column median of an empty multiset");
  long long running = 0;
  for (const auto& [col, count] : by_column) {
    running += count;
    if (2 * running >= total) return col;
  }
  return by_column.rbegin()->first;
}

std::vector<WeightedColumnPoint> project_to_border(const EMGrid& grid,
                                                   const DeliverySet& h) {
  std::map<GridPoint, int> merged;
  for (const GridPoint& v : h.euclidean()) ++merged[v];
  for (const GridPoint& v : h.manhattan()) ++merged[{v.row, grid.border()}];
  std::vector<WeightedColumnPoint> out;
  out.reserve(merged.size());
  for (const auto& [p, count] : merged) out.push_back({p, count});
  return out;
}

Solution cemb_p(const EMGrid& grid, const DeliverySet& h) {
  require_customers(h);
  EuclideanSide side(grid, h);
  GridPoint best{};
  double best_cost = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= grid.rows(); ++i) {
    const RowMinimum& m = side.row(i);
    if (m.cost < best_cost) {
      best_cost = m.cost;
      best = m.point;
    }
  }
  return finish(grid, h, best, "CEMB-P", side.evaluations());
}

Solution cmeb_p(const EMGrid& grid, const DeliverySet& h) {
  require_customers(h);
  ManhattanSide side(grid, h);
  int best_row = 1;
  double best_cost = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= grid.rows(); ++i) {
    const double c = side.row_cost(i);
    if (c < best_cost) {
      best_cost = c;
      best_row = i;
    }
  }
  return finish(grid, h, {best_row, side.chi()}, "CMEB-P", side.evaluations());
}

Solution opt_p(const EMGrid& grid, const DeliverySet& h) {
  return cheaper(cemb_p(grid, h), cmeb_p(grid, h), "OPT-P");
}

Solution s_opt_p(const EMGrid& grid, const DeliverySet& h) {
  require_customers(h);

  EuclideanSide e_side(grid, h);
  const int e_row = detail::unimodal_argmin(
      1, grid.rows(), [&](int i) { return e_side.row(i).cost; });
  Solution e = finish(grid, h, e_side.row(e_row).point, "CEMB-P",
                      e_side.evaluations());

  ManhattanSide m_side(grid, h);
  std::vector<std::optional<double>> cache(grid.rows() + 1);
  const int m_row = detail::unimodal_argmin(1, grid.rows(), [&](int i) {
    auto& slot = cache[i];
    if (!slot) slot = m_side.row_cost(i);
    return *slot;
  });
  Solution m = finish(grid, h, {m_row, m_side.chi()}, "CMEB-P",
                      m_side.evaluations());

  return cheaper(std::move(e), std::move(m), "S-OPT-P");
}

Solution cmall_p(const EMGrid& grid, const DeliverySet& h) {
  require_customers(h);
  std::vector<int> rows;
  std::vector<int> cols;
  rows.reserve(h.size());
  cols.reserve(h.size());
  for (const GridPoint& v : h.points()) {
    rows.push_back(v.row);
    cols.push_back(v.col);
  }
  const GridPoint dp{lower_median(std::move(rows)),
                     lower_median(std::move(cols))};
  return finish(grid, h, dp, "CMALL-P", 1);
}

std::string_view algorithm_tag(PartialAlgorithm algorithm) {
  switch (algorithm) {
    case PartialAlgorithm::kOptP:
      return "OPT-P";
    case PartialAlgorithm::kSOptP:
      return "S-OPT-P";
    case PartialAlgorithm::kCmallP:
      return "CMALL-P";
    case PartialAlgorithm::kCembP:
      return "CEMB-P";
    case PartialAlgorithm::kCmebP:
      return "CMEB-P";
  }
  return "";
}

std::optional<PartialAlgorithm> parse_partial_algorithm(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return std::toupper(ch); });
  for (auto a : {PartialAlgorithm::kOptP, PartialAlgorithm::kSOptP,
                 PartialAlgorithm::kCmallP, PartialAlgorithm::kCembP,
                 PartialAlgorithm::kCmebP}) {
    if (algorithm_tag(a) == upper) return a;
  }
  return std::nullopt;
}

Solution solve_partial(PartialAlgorithm algorithm, const EMGrid& grid,
                       const DeliverySet& h) {
  switch (algorithm) {
    case PartialAlgorithm::kOptP:
      return opt_p(grid, h);
    case PartialAlgorithm::kSOptP:
      return s_opt_p(grid, h);
    case PartialAlgorithm::kCmallP:
      return cmall_p(grid, h);
    case PartialAlgorithm::kCembP:
      return cemb_p(grid, h);
    case PartialAlgorithm::kCmebP:
      return cmeb_p(grid, h);
  }
  throw PreconditionError("unknown partial-grid algorithm");
}

}  // namespace memp
