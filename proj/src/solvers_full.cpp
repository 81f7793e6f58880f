#include "memp/solvers_full.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "memp/costs.hpp"
#include "memp/error.hpp"
#include "unimodal.hpp"

namespace memp {

MidrowEvaluator::MidrowEvaluator(const ColumnCostTable& table)
    : table_(table), cache_(table.grid().cols() + 1) {}

double MidrowEvaluator::operator()(int col) {
  auto& slot = cache_.at(col);
  if (!slot) {
    slot = midrow_cost(table_, col);
    ++evaluations_;
  }
  return *slot;
}

int find_minimum(MidrowEvaluator& eval, int lo, int hi) {
  const EMGrid& g = eval.table().grid();
  if (lo > hi || lo < g.half_border() || hi > g.border()) {
    throw PreconditionError("search interval [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "] outside [" +
                            std::to_string(g.half_border()) + ", " +
                            std::to_string(g.border()) + "]");
  }
  return detail::unimodal_argmin(lo, hi, [&](int c) { return eval(c); });
}

int find_minimum(const ColumnCostTable& table, int lo, int hi) {
  MidrowEvaluator eval(table);
  return find_minimum(eval, lo, hi);
}

namespace {

Solution at_column(MidrowEvaluator& eval, int col, std::string tag) {
  const EMGrid& g = eval.table().grid();
  Solution s;
  s.dp = {g.mid_row(), col};
  s.cost = 2.0 * eval(col);
  s.algorithm = std::move(tag);
  s.evaluations = eval.evaluations();
  return s;
}

}  // namespace

Solution opt_f(const ColumnCostTable& table) {
  const EMGrid& g = table.grid();
  MidrowEvaluator eval(table);
  if (g.border() <= g.mid_col()) {
    const int c = find_minimum(eval, g.half_border(), g.border());
    const int best = eval(c) < eval(g.mid_col()) ? c : g.mid_col();
    return at_column(eval, best, "OPT-F");
  }
  const int c = find_minimum(eval, g.half_border(), g.mid_col());
  return at_column(eval, c, "OPT-F");
}

Solution cmall_f(const ColumnCostTable& table) {
  MidrowEvaluator eval(table);
  return at_column(eval, table.grid().mid_col(), "CMALL-F");
}

Solution cemb_f(const ColumnCostTable& table) {
  const EMGrid& g = table.grid();
  const long long k = g.border();
  const long long c = g.cols();
  // round_half_up(num / den) == floor((2 num + den) / (2 den)) for num >= 0.
  const long long num = k * (2 * c - k + 1);
  const long long den = 2 * c;
  const long long mu = (2 * num + den) / (2 * den);
  const int col = static_cast<int>(std::clamp<long long>(mu, 1, k));
  MidrowEvaluator eval(table);
  return at_column(eval, col, "CEMB-F");
}

Solution cmeb_f(const ColumnCostTable& table) {
  const EMGrid& g = table.grid();
  const int col = g.border() >= g.mid_col() ? g.border() : g.mid_col();
  MidrowEvaluator eval(table);
  return at_column(eval, col, "CMEB-F");
}

Solution best_f(const ColumnCostTable& table) {
  Solution e = cemb_f(table);
  Solution m = cmeb_f(table);
  const std::int64_t evaluations = e.evaluations + m.evaluations;
  Solution best = m.cost < e.cost ? std::move(m) : std::move(e);
  best.algorithm = "BEST-F";
  best.evaluations = evaluations;
  return best;
}

Solution opt_f(const EMGrid& grid) { return opt_f(ColumnCostTable(grid)); }
Solution cmall_f(const EMGrid& grid) { return cmall_f(ColumnCostTable(grid)); }
Solution cemb_f(const EMGrid& grid) { return cemb_f(ColumnCostTable(grid)); }
Solution cmeb_f(const EMGrid& grid) { return cmeb_f(ColumnCostTable(grid)); }
Solution best_f(const EMGrid& grid) { return best_f(ColumnCostTable(grid)); }

std::string_view algorithm_tag(FullAlgorithm algorithm) {
  switch (algorithm) {
    case FullAlgorithm::kOptF:
      return "OPT-F";
    case FullAlgorithm::kCmallF:
      return "CMALL-F";
    case FullAlgorithm::kCembF:
      return "CEMB-F";
    case FullAlgorithm::kCmebF:
      return "CMEB-F";
    case FullAlgorithm::kBestF:
      return "BEST-F";
  }
  return "";
}

std::optional<FullAlgorithm> parse_full_algorithm(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return std::toupper(ch); });
  for (auto a : {FullAlgorithm::kOptF, FullAlgorithm::kCmallF,
                 FullAlgorithm::kCembF, FullAlgorithm::kCmebF,
                 FullAlgorithm::kBestF}) {
    if (algorithm_tag(a) == upper) return a;
  }
  return std::nullopt;
}

Solution solve_full(FullAlgorithm algorithm, const ColumnCostTable& table) {
  switch (algorithm) {
    case FullAlgorithm::kOptF:
      return opt_f(table);
    case FullAlgorithm::kCmallF:
      return cmall_f(table);
    case FullAlgorithm::kCembF:
      return cemb_f(table);
    case FullAlgorithm::kCmebF:
      return cmeb_f(table);
    case FullAlgorithm::kBestF:
      return best_f(table);
  }
  throw PreconditionError("unknown full-grid algorithm");
}

}  // namespace memp
