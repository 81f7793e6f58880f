#include "memp/instances.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "memp/error.hpp"

namespace memp {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("empty sampling range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

int Rng::between(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

int euclidean_quota(int n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw PreconditionError("split fraction must lie in [0, 1]");
  }
  // The slack keeps values like (1/3) * 3 from rounding down.
  return static_cast<int>(std::floor(p * n + 0.5 + 1e-9));
}

namespace {

// Floyd's algorithm: `count` distinct indices from [0, population).
std::vector<std::int64_t> sample_indices(Rng& rng, std::int64_t population,
                                         std::int64_t count) {
  std::unordered_set<std::int64_t> chosen;
  std::vector<std::int64_t> out;
  out.reserve(count);
  for (std::int64_t j = population - count; j < population; ++j) {
    const auto t = static_cast<std::int64_t>(rng.below(j + 1));
    const std::int64_t pick = chosen.insert(t).second ? t : j;
    if (pick == j) chosen.insert(j);
    out.push_back(pick);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

DeliverySet gen_uniform(const EMGrid& grid, int n, std::optional<double> p,
                        std::uint64_t seed) {
  if (n < 0) throw PreconditionError("customer count must be non-negative");
  Rng rng(seed);
  std::vector<GridPoint> points;
  points.reserve(n);

  if (!p) {
    if (n > grid.vertex_count()) {
      throw PreconditionError("requested " + std::to_string(n) +
                              " customers but the grid has only " +
                              std::to_string(grid.vertex_count()) + " vertices");
    }
    for (auto idx : sample_indices(rng, grid.vertex_count(), n)) {
      points.push_back({static_cast<int>(idx / grid.cols()) + 1,
                        static_cast<int>(idx % grid.cols()) + 1});
    }
    return DeliverySet(grid, std::move(points));
  }

  const int n_e = euclidean_quota(n, *p);
  const int n_m = n - n_e;
  if (n_e > grid.euclidean_vertex_count()) {
    throw PreconditionError("requested " + std::to_string(n_e) +
                            " Euclidean-side customers but only " +
                            std::to_string(grid.euclidean_vertex_count()) +
                            " vertices have col <= " +
                            std::to_string(grid.border()));
  }
  if (n_m > grid.manhattan_vertex_count()) {
    throw PreconditionError("requested " + std::to_string(n_m) +
                            " Manhattan-side customers but only " +
                            std::to_string(grid.manhattan_vertex_count()) +
                            " vertices have col > " +
                            std::to_string(grid.border()));
  }
  const int k = grid.border();
  for (auto idx : sample_indices(rng, grid.euclidean_vertex_count(), n_e)) {
    points.push_back({static_cast<int>(idx / k) + 1,
                      static_cast<int>(idx % k) + 1});
  }
  const int width = grid.cols() - k;
  for (auto idx : sample_indices(rng, grid.manhattan_vertex_count(), n_m)) {
    points.push_back({static_cast<int>(idx / width) + 1,
                      k + 1 + static_cast<int>(idx % width)});
  }
  return DeliverySet(grid, std::move(points));
}

std::span<const Preset> presets() {
  static const std::array<Preset, 3> kPresets{{
      {"chicago", EMGrid(8, 14, 6), 120.0},
      {"newyork", EMGrid(7, 24, 1), 110.0},
      {"miami", EMGrid(9, 20, 20), 25.0},
  }};
  return kPresets;
}

const Preset& preset(std::string_view name) {
  for (const Preset& p : presets()) {
    if (p.name == name) return p;
  }
  throw PreconditionError("unknown preset '" + std::string(name) +
                          "' (expected chicago, newyork or miami)");
}

void DroneProfile::validate() const {
  if (payload_kg <= 0 || range_m <= 0 || speed_mps <= 0 || endurance_min <= 0) {
    throw PreconditionError("drone profile fields must be positive");
  }
  const double flight_m = speed_mps * endurance_min * 60.0;
  if (std::abs(range_m - flight_m) > 0.1 * flight_m) {
    throw PreconditionError("drone range is not within 10% of speed x endurance");
  }
}

FeasibilityReport feasibility(const Solution& solution, const DeliverySet& h,
                              const EMGrid& grid, double cell_length_m,
                              const DroneProfile& drone) {
  if (!(cell_length_m > 0)) throw PreconditionError("cell length must be positive");
  grid.check(solution.dp);
  drone.validate();

  double longest = 0.0;
  for (const GridPoint& v : h.points()) {
    longest = std::max(longest, distance(grid, solution.dp, v));
  }
  FeasibilityReport report;
  report.total_m = solution.cost * cell_length_m;
  report.max_round_trip_m = 2.0 * longest * cell_length_m;
  report.range_m = drone.range_m;
  report.mission_feasible = report.total_m <= report.range_m;
  report.every_trip_feasible = report.max_round_trip_m <= report.range_m;
  return report;
}

Preset load_grid_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open grid file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError("malformed grid file " + path.string() + ": " +
                            e.what());
  }
  try {
    EMGrid grid(doc.at("rows").get<int>(), doc.at("cols").get<int>(),
                doc.at("border").get<int>());
    Preset p{doc.value("name", std::string("custom")), grid,
             doc.value("cell_length_m", 1.0)};
    if (!(p.cell_length_m > 0)) {
      throw PreconditionError("cell_length_m must be positive");
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError("malformed grid file " + path.string() + ": " +
                            e.what());
  }
}

void save_grid_file(const std::filesystem::path& path, const Preset& preset) {
  nlohmann::json doc{{"name", preset.name},
                     {"rows", preset.grid.rows()},
                     {"cols", preset.grid.cols()},
                     {"border", preset.grid.border()},
                     {"cell_length_m", preset.cell_length_m}};
  std::ofstream out(path);
  if (!out) throw IoError("cannot write grid file " + path.string());
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("failed writing grid file " + path.string());
}

DeliverySet load_deliveries(const std::filesystem::path& path,
                            const EMGrid& grid) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open delivery file " + path.string());
  std::vector<GridPoint> points;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    GridPoint p;
    std::string extra;
    if (!(fields >> p.row >> p.col) || (fields >> extra)) {
      throw PreconditionError(path.string() + ":" + std::to_string(line_no) +
                              ": expected \"row col\"");
    }
    points.push_back(p);
  }
  if (in.bad()) throw IoError("failed reading delivery file " + path.string());
  return DeliverySet(grid, std::move(points));
}

void save_deliveries(const std::filesystem::path& path, const DeliverySet& h) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write delivery file " + path.string());
  out << "# row col\n";
  for (const GridPoint& p : h.points()) out << p.row << ' ' << p.col << '\n';
  if (!out) throw IoError("failed writing delivery file " + path.string());
}

}  // namespace memp
