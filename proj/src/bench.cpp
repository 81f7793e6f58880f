#include "memp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "memp/costs.hpp"
#include "memp/error.hpp"
#include "memp/instances.hpp"
#include "memp/solvers_full.hpp"
#include "memp/solvers_partial.hpp"

namespace memp {

namespace {

using Clock = std::chrono::steady_clock;

template <typename Enum, typename Parse>
std::vector<Enum> resolve_algorithms(const std::vector<std::string>& names,
                                     std::initializer_list<Enum> all,
                                     Parse parse, const char* scenario) {
  if (names.empty()) return all;
  std::vector<Enum> out;
  for (const auto& name : names) {
    auto a = parse(name);
    if (!a) {
      throw PreconditionError("algorithm '" + name + "' is not a " + scenario +
                              "-grid algorithm");
    }
    out.push_back(*a);
  }
  return out;
}

std::vector<FullAlgorithm> full_algorithms(const ExperimentConfig& config) {
  return resolve_algorithms<FullAlgorithm>(
      config.algorithms,
      {FullAlgorithm::kOptF, FullAlgorithm::kCmallF, FullAlgorithm::kCembF,
       FullAlgorithm::kCmebF, FullAlgorithm::kBestF},
      parse_full_algorithm, "full");
}

std::vector<PartialAlgorithm> partial_algorithms(const ExperimentConfig& config) {
  return resolve_algorithms<PartialAlgorithm>(
      config.algorithms,
      {PartialAlgorithm::kOptP, PartialAlgorithm::kSOptP,
       PartialAlgorithm::kCmallP, PartialAlgorithm::kCembP,
       PartialAlgorithm::kCmebP},
      parse_partial_algorithm, "partial");
}

double ratio_of(double cost, double optimum) {
  if (optimum == 0.0) {
    return cost == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  return cost / optimum;
}

// Median over `repeats` of the per-call time. Calls shorter than the clock
// can resolve are batched until a repeat spans at least one microsecond.
double median_call_us(int repeats, const std::function<void()>& call) {
  std::vector<double> samples;
  samples.reserve(repeats);
  for (int r = 0; r < repeats; ++r) {
    long long calls = 0;
    const auto start = Clock::now();
    auto elapsed = Clock::duration::zero();
    do {
      call();
      ++calls;
      elapsed = Clock::now() - start;
    } while (elapsed < std::chrono::microseconds(1));
    samples.push_back(
        std::chrono::duration<double, std::micro>(elapsed).count() / calls);
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

std::string format_real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

RatioRecord make_record(const EMGrid& grid, int n, std::optional<double> p,
                        std::uint64_t seed, const Solution& s,
                        double optimum) {
  RatioRecord rec;
  rec.rows = grid.rows();
  rec.cols = grid.cols();
  rec.border = grid.border();
  rec.n = n;
  rec.p = p;
  rec.seed = seed;
  rec.algorithm = s.algorithm;
  rec.dp_row = s.dp.row;
  rec.dp_col = s.dp.col;
  rec.cost = s.cost;
  rec.ratio = ratio_of(s.cost, optimum);
  return rec;
}

std::string describe(int rows, int cols, int border, int n,
                     std::optional<double> p, std::uint64_t seed) {
  std::ostringstream os;
  os << "rows=" << rows << " cols=" << cols << " border=" << border
     << " n=" << n << " p=" << (p ? format_real(*p) : "area")
     << " seed=" << seed;
  return os.str();
}

std::vector<RatioRecord> run(const ExperimentConfig& config, bool timed) {
  config.validate();
  std::vector<RatioRecord> records;

  if (config.scenario == Scenario::kFull) {
    const auto algorithms = full_algorithms(config);
    for (int rows : config.rows) {
      for (int cols : config.cols) {
        for (double f : config.border_fractions) {
          const EMGrid grid(rows, cols, border_for_fraction(cols, f));
          const ColumnCostTable table(grid);
          const Solution reference = opt_f(table);
          const std::optional<double> split =
              static_cast<double>(grid.border()) / grid.cols();
          const int n = static_cast<int>(grid.vertex_count());
          double build_us = 0.0;
          if (timed) {
            build_us = median_call_us(config.repeats,
                                      [&] { ColumnCostTable t(grid); });
          }
          for (FullAlgorithm a : algorithms) {
            const Solution s =
                a == FullAlgorithm::kOptF ? reference : solve_full(a, table);
            RatioRecord rec =
                make_record(grid, n, split, config.seed, s, reference.cost);
            if (timed) {
              rec.runtime_us = median_call_us(
                  config.repeats, [&] { (void)solve_full(a, table); });
              if (a == FullAlgorithm::kOptF) rec.preprocess_us = build_us;
            }
            records.push_back(std::move(rec));
          }
        }
      }
    }
    return records;
  }

  const auto algorithms = partial_algorithms(config);
  std::uint64_t seed = config.seed;
  for (int rows : config.rows) {
    for (int cols : config.cols) {
      for (double f : config.border_fractions) {
        const EMGrid grid(rows, cols, border_for_fraction(cols, f));
        for (int n : config.n) {
          for (const auto& p : config.p) {
            for (int trial = 0; trial < config.trials; ++trial, ++seed) {
              DeliverySet h;
              try {
                h = gen_uniform(grid, n, p, seed);
              } catch (const PreconditionError& e) {
                throw PreconditionError(
                    "cannot generate instance " +
                    describe(rows, cols, grid.border(), n, p, seed) + ": " +
                    e.what());
              }
              const Solution reference = opt_p(grid, h);
              for (PartialAlgorithm a : algorithms) {
                const Solution s = a == PartialAlgorithm::kOptP
                                       ? reference
                                       : solve_partial(a, grid, h);
                RatioRecord rec =
                    make_record(grid, n, p, seed, s, reference.cost);
                if (timed) {
                  rec.runtime_us = median_call_us(config.repeats, [&] {
                    (void)solve_partial(a, grid, h);
                  });
                }
                records.push_back(std::move(rec));
              }
            }
          }
        }
      }
    }
  }
  return records;
}

template <typename T>
std::vector<T> list_of(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) return {};
  const auto& v = doc.at(key);
  if (v.is_array()) return v.get<std::vector<T>>();
  return {v.get<T>()};
}

}  // namespace

void ExperimentConfig::validate() const {
  auto positive = [](const std::vector<int>& v) {
    return !v.empty() &&
           std::all_of(v.begin(), v.end(), [](int x) { return x >= 1; });
  };
  if (!positive(rows)) throw PreconditionError("config: rows must be >= 1");
  if (!positive(cols)) throw PreconditionError("config: cols must be >= 1");
  if (border_fractions.empty()) {
    throw PreconditionError("config: border_fractions is empty");
  }
  for (double f : border_fractions) {
    if (!(f > 0.0 && f <= 1.0)) {
      throw PreconditionError("config: border fractions must lie in (0, 1]");
    }
  }
  if (trials < 1) throw PreconditionError("config: trials must be >= 1");
  if (repeats < 1) throw PreconditionError("config: repeats must be >= 1");
  if (scenario == Scenario::kFull) {
    (void)full_algorithms(*this);
    return;
  }
  if (!positive(n)) throw PreconditionError("config: n must be >= 1");
  if (p.empty()) throw PreconditionError("config: p is empty");
  for (const auto& split : p) {
    if (split && !(*split >= 0.0 && *split <= 1.0)) {
      throw PreconditionError("config: p must lie in [0, 1]");
    }
  }
  (void)partial_algorithms(*this);
}

ExperimentConfig parse_config(const std::string& json_text) {
  ExperimentConfig config;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    const std::string scenario = doc.value("scenario", std::string("partial"));
    if (scenario == "full") {
      config.scenario = Scenario::kFull;
    } else if (scenario == "partial") {
      config.scenario = Scenario::kPartial;
    } else {
      throw PreconditionError("config: scenario must be 'full' or 'partial'");
    }
    config.rows = list_of<int>(doc, "rows");
    config.cols = list_of<int>(doc, "cols");
    config.border_fractions = list_of<double>(doc, "border_fractions");
    config.n = list_of<int>(doc, "n");
    if (doc.contains("p")) {
      const auto& ps = doc.at("p");
      for (const auto& v : ps.is_array() ? ps : nlohmann::json::array({ps})) {
        if (v.is_string() && v.get<std::string>() == "area") {
          config.p.emplace_back(std::nullopt);
        } else {
          config.p.emplace_back(v.get<double>());
        }
      }
    } else {
      config.p.emplace_back(std::nullopt);
    }
    config.trials = doc.value("trials", config.trials);
    config.seed = doc.value("seed", config.seed);
    config.algorithms = list_of<std::string>(doc, "algorithms");
    config.output = doc.value("output", std::string());
    config.repeats = doc.value("repeats", config.repeats);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("config: ") + e.what());
  }
  config.validate();
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

int border_for_fraction(int cols, double fraction) {
  const int k = static_cast<int>(std::floor(fraction * cols + 0.5 + 1e-9));
  return std::clamp(k, 1, cols);
}

std::vector<RatioRecord> ratio_experiment(const ExperimentConfig& config) {
  return run(config, false);
}

std::vector<RatioRecord> timing_experiment(const ExperimentConfig& config) {
  return run(config, true);
}

void write_csv(std::ostream& out, std::span<const RatioRecord> records,
               bool with_preprocess) {
  out << kCsvHeader;
  if (with_preprocess) out << ",preprocess_us";
  out << '\n';
  for (const RatioRecord& r : records) {
    out << r.rows << ',' << r.cols << ',' << r.border << ',' << r.n << ','
        << (r.p ? format_real(*r.p) : "area") << ',' << r.seed << ','
        << r.algorithm << ',' << r.dp_row << ',' << r.dp_col << ','
        << format_real(r.cost) << ',' << format_real(r.ratio) << ','
        << format_real(r.runtime_us);
    if (with_preprocess) {
      out << ',' << (r.preprocess_us ? format_real(*r.preprocess_us) : "");
    }
    out << '\n';
  }
}

void emit_csv(std::span<const RatioRecord> records,
              const std::filesystem::path& path, bool with_preprocess) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_csv(out, records, with_preprocess);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace memp
