#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "memp/bench.hpp"
#include "memp/costs.hpp"
#include "memp/error.hpp"
#include "memp/instances.hpp"
#include "memp/solvers_full.hpp"
#include "memp/solvers_partial.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct GridArgs {
  int rows = 0;
  int cols = 0;
  int border = 0;
};

void add_grid_options(CLI::App* cmd, GridArgs& g, bool required) {
  auto* r = cmd->add_option("--rows", g.rows, "Number of rows R");
  auto* c = cmd->add_option("--cols", g.cols, "Number of columns C");
  auto* k = cmd->add_option("--border", g.border, "Border column K");
  if (required) {
    r->required();
    c->required();
    k->required();
  }
}

void print_solution(const memp::Solution& s) {
  std::printf("%d %d %.9g\n", s.dp.row, s.dp.col, s.cost);
}

std::optional<double> parse_split(const std::string& text) {
  if (text == "area") return std::nullopt;
  try {
    std::size_t used = 0;
    const double p = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return p;
  } catch (const std::exception&) {
    throw memp::PreconditionError("--p must be a number in [0, 1] or 'area'");
  }
}

memp::PartialAlgorithm partial_algorithm(const std::string& name) {
  auto a = memp::parse_partial_algorithm(name);
  if (!a) throw memp::PreconditionError("unknown partial-grid algorithm " + name);
  return *a;
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dispatching-point solvers for Euclidean-Manhattan grids"};
  app.require_subcommand(1);

  GridArgs full_grid;
  std::string full_alg = "opt-f";
  auto* solve_full = app.add_subcommand("solve-full", "Serve every vertex");
  add_grid_options(solve_full, full_grid, true);
  solve_full->add_option("--algorithm", full_alg, "opt-f|cmall-f|cemb-f|cmeb-f|best-f")
      ->check(CLI::IsMember({"opt-f", "cmall-f", "cemb-f", "cmeb-f", "best-f"},
                            CLI::ignore_case));

  GridArgs partial_grid;
  std::string grid_file;
  std::string deliveries;
  std::string partial_alg = "opt-p";
  auto* solve_partial = app.add_subcommand("solve-partial", "Serve a delivery set");
  add_grid_options(solve_partial, partial_grid, false);
  auto* grid_file_opt =
      solve_partial->add_option("--grid-file", grid_file, "Grid JSON file");
  for (const char* name : {"--rows", "--cols", "--border"}) {
    grid_file_opt->excludes(solve_partial->get_option(name));
  }
  solve_partial->add_option("--deliveries", deliveries, "Delivery file")->required();
  solve_partial
      ->add_option("--algorithm", partial_alg, "opt-p|s-opt-p|cmall-p|cemb-p|cmeb-p")
      ->check(CLI::IsMember({"opt-p", "s-opt-p", "cmall-p", "cemb-p", "cmeb-p"},
                            CLI::ignore_case));

  GridArgs gen_grid;
  int gen_n = 0;
  std::string gen_p = "area";
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a random delivery set");
  add_grid_options(gen, gen_grid, true);
  gen->add_option("--n", gen_n, "Number of customers")->required();
  gen->add_option("--p", gen_p, "Euclidean-side fraction, or 'area'");
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--out", gen_out, "Output delivery file")->required();

  std::string config_path;
  std::string csv_out;
  auto* bench_ratio = app.add_subcommand("bench-ratio", "Cost-ratio sweep to CSV");
  bench_ratio->add_option("--config", config_path, "Experiment JSON")->required();
  bench_ratio->add_option("--out", csv_out, "CSV output");
  auto* bench_time = app.add_subcommand("bench-time", "Timing sweep to CSV");
  bench_time->add_option("--config", config_path, "Experiment JSON")->required();
  bench_time->add_option("--out", csv_out, "CSV output");

  std::string preset_name;
  auto* preset_cmd = app.add_subcommand("preset", "Show a city preset");
  preset_cmd->add_option("--name", preset_name, "chicago|newyork|miami")->required();

  std::string feas_preset;
  std::string feas_deliveries;
  std::string feas_alg = "opt-p";
  auto* feas = app.add_subcommand("feasibility", "Check a mission against the drone range");
  feas->add_option("--preset", feas_preset, "chicago|newyork|miami")->required();
  feas->add_option("--deliveries", feas_deliveries, "Delivery file")->required();
  feas->add_option("--algorithm", feas_alg, "Partial-grid algorithm");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve_full) {
      const memp::EMGrid grid(full_grid.rows, full_grid.cols, full_grid.border);
      const memp::ColumnCostTable table(grid);
      print_solution(memp::solve_full(*memp::parse_full_algorithm(full_alg), table));
    } else if (*solve_partial) {
      std::optional<memp::EMGrid> grid;
      if (!grid_file.empty()) {
        grid = memp::load_grid_file(grid_file).grid;
      } else if (partial_grid.rows && partial_grid.cols && partial_grid.border) {
        grid.emplace(partial_grid.rows, partial_grid.cols, partial_grid.border);
      } else {
        throw memp::PreconditionError(
            "solve-partial needs --grid-file or --rows/--cols/--border");
      }
      const auto h = memp::load_deliveries(deliveries, *grid);
      print_solution(
          memp::solve_partial(partial_algorithm(partial_alg), *grid, h));
    } else if (*gen) {
      const memp::EMGrid grid(gen_grid.rows, gen_grid.cols, gen_grid.border);
      const auto h = memp::gen_uniform(grid, gen_n, parse_split(gen_p), gen_seed);
      memp::save_deliveries(gen_out, h);
    } else if (*bench_ratio || *bench_time) {
      const bool timed = bench_time->parsed();
      const auto config = memp::load_config(config_path);
      const std::string out = csv_out.empty() ? config.output : csv_out;
      if (out.empty()) {
        throw memp::PreconditionError("no output path (--out or config 'output')");
      }
      const auto records = timed ? memp::timing_experiment(config)
                                 : memp::ratio_experiment(config);
      memp::emit_csv(records, out, timed);
    } else if (*preset_cmd) {
      const auto& p = memp::preset(preset_name);
      std::printf("%s %d %d %d %g\n", p.name.c_str(), p.grid.rows(),
                  p.grid.cols(), p.grid.border(), p.cell_length_m);
    } else if (*feas) {
      const auto& p = memp::preset(feas_preset);
      const auto h = memp::load_deliveries(feas_deliveries, p.grid);
      const auto s = memp::solve_partial(partial_algorithm(feas_alg), p.grid, h);
      const auto report = memp::feasibility(s, h, p.grid, p.cell_length_m);
      std::printf(
          "total_m=%.9g max_round_trip_m=%.9g range_m=%.9g "
          "mission_feasible=%s every_trip_feasible=%s\n",
          report.total_m, report.max_round_trip_m, report.range_m,
          flag(report.mission_feasible), flag(report.every_trip_feasible));
    }
  } catch (const memp::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const memp::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
