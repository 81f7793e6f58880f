#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>

#include "memp/costs.hpp"
#include "memp/grid.hpp"
#include "memp/solution.hpp"

namespace memp {

// Deterministic 64-bit generator (std::mt19937_64) with a portable bounded
// draw, so a seed yields the same instance with any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  // Uniform integer in [lo, hi].
  int between(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

// Number of Euclidean-side customers for a split fraction p: round_half_up(p*n).
int euclidean_quota(int n, double p);

// Draws n distinct customers. With a fraction p, round_half_up(p*n) come
// from the Euclidean side (col <= K) and the rest from the Manhattan side.
// Without one, all n are drawn uniformly from the whole grid.
DeliverySet gen_uniform(const EMGrid& grid, int n, std::optional<double> p,
                        std::uint64_t seed);

struct Preset {
  std::string name;
  EMGrid grid;
  double cell_length_m;
};

std::span<const Preset> presets();
// chicago, newyork or miami. Throws PreconditionError otherwise.
const Preset& preset(std::string_view name);

struct DroneProfile {
  double payload_kg = 2.7;
  double range_m = 30'000.0;
  double speed_mps = 17.0;
  double endurance_min = 30.0;

  // Positive fields and range within 10% of speed * endurance.
  void validate() const;
};

struct FeasibilityReport {
  double total_m = 0.0;
  double max_round_trip_m = 0.0;
  double range_m = 0.0;
  bool mission_feasible = false;
  bool every_trip_feasible = false;
};

FeasibilityReport feasibility(const Solution& solution, const DeliverySet& h,
                              const EMGrid& grid, double cell_length_m,
                              const DroneProfile& drone = {});

// Grid file: one JSON document with name, rows, cols, border, cell_length_m.
Preset load_grid_file(const std::filesystem::path& path);
void save_grid_file(const std::filesystem::path& path, const Preset& preset);

// Delivery file: one "row col" pair per line, '#' starts a comment line.
DeliverySet load_deliveries(const std::filesystem::path& path,
                            const EMGrid& grid);
void save_deliveries(const std::filesystem::path& path, const DeliverySet& h);

}  // namespace memp
