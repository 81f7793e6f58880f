#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace memp {

enum class Scenario { kFull, kPartial };

// One sweep. Borders are given as fractions of the column count and resolve
// to K = clamp(round_half_up(f * C), 1, C). A missing split fraction means
// customers are drawn uniformly over the whole grid ("area" in files).
struct ExperimentConfig {
  Scenario scenario = Scenario::kPartial;
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<double> border_fractions;
  std::vector<int> n;
  std::vector<std::optional<double>> p;
  int trials = 33;
  std::uint64_t seed = 1;
  // Algorithm tags, e.g. "CMALL-F" or "s-opt-p". Empty selects all of the
  // scenario's algorithms.
  std::vector<std::string> algorithms;
  std::string output;
  // Timing repeats per call; the median is reported.
  int repeats = 5;

  // Throws PreconditionError on an unusable configuration.
  void validate() const;
};

// JSON document with the same field names; "scenario" is "full" or
// "partial", "p" entries are numbers or the string "area".
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig parse_config(const std::string& json_text);

int border_for_fraction(int cols, double fraction);

struct RatioRecord {
  int rows = 0;
  int cols = 0;
  int border = 0;
  int n = 0;
  // Split fraction; nullopt for whole-grid sampling.
  std::optional<double> p;
  std::uint64_t seed = 0;
  std::string algorithm;
  int dp_row = 0;
  int dp_col = 0;
  double cost = 0.0;
  double ratio = 1.0;
  double runtime_us = 0.0;
  // Column-cost table construction time; only set for OPT-F timings.
  std::optional<double> preprocess_us;
};

// Runs every selected algorithm on every grid/n/p/trial combination and
// reports its cost relative to the exact reference (OPT-F or OPT-P).
// Full-grid instances are deterministic and run once per grid.
std::vector<RatioRecord> ratio_experiment(const ExperimentConfig& config);

// ratio_experiment plus the median wall-clock time of each solver call,
// excluding instance generation.
std::vector<RatioRecord> timing_experiment(const ExperimentConfig& config);

inline constexpr const char* kCsvHeader =
    "rows,cols,border,n,p,seed,algorithm,dp_row,dp_col,cost,ratio,runtime_us";

// Header plus one line per record, reals with 9 significant digits. With
// `with_preprocess`, a trailing preprocess_us column is appended.
void write_csv(std::ostream& out, std::span<const RatioRecord> records,
               bool with_preprocess = false);
void emit_csv(std::span<const RatioRecord> records,
              const std::filesystem::path& path, bool with_preprocess = false);

}  // namespace memp
