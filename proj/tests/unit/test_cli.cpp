#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MEMP_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 512> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "memp_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

std::string read_all(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("solve-full") {
  auto r = run("solve-full --rows 3 --cols 3 --border 2 --algorithm opt-f");
  CHECK(r.code == 0);
  CHECK(r.out == "2 2 21.6568542\n");
  r = run("solve-full --rows 1 --cols 3 --border 2 --algorithm CMALL-F");
  CHECK(r.code == 0);
  CHECK(r.out == "1 2 4\n");
  CHECK(run("solve-full --rows 3 --cols 3 --border 4 --algorithm opt-f").code == 2);
  CHECK(run("solve-full --rows 3 --cols 3 --border 2 --algorithm opt-p").code == 2);
  CHECK(run("solve-full --rows 3 --cols 3").code == 2);
}

TEST_CASE("solve-partial") {
  const auto h = scratch("h.txt");
  std::ofstream(h) << "# two customers\n1 1\n2 4\n";
  auto r = run("solve-partial --rows 2 --cols 4 --border 2 --deliveries " +
               h.string() + " --algorithm opt-p");
  CHECK(r.code == 0);
  CHECK(r.out == "1 1 6.82842712\n");
  r = run("solve-partial --rows 2 --cols 4 --border 2 --deliveries " +
          h.string() + " --algorithm cmeb-p");
  CHECK(r.out == "2 2 6.82842712\n");

  const auto grid = scratch("grid.json");
  std::ofstream(grid) << R"({"name": "tiny", "rows": 2, "cols": 4, "border": 2, "cell_length_m": 10})";
  r = run("solve-partial --grid-file " + grid.string() + " --deliveries " +
          h.string() + " --algorithm s-opt-p");
  CHECK(r.code == 0);
  CHECK(r.out == "1 1 6.82842712\n");

  CHECK(run("solve-partial --rows 2 --cols 4 --border 2 --deliveries " +
            scratch("missing.txt").string() + " --algorithm opt-p")
            .code == 3);
  CHECK(run("solve-partial --grid-file " + scratch("missing.json").string() +
            " --deliveries " + h.string() + " --algorithm opt-p")
            .code == 3);
  const auto empty = scratch("empty.txt");
  std::ofstream(empty) << "# nobody\n";
  CHECK(run("solve-partial --rows 2 --cols 4 --border 2 --deliveries " +
            empty.string() + " --algorithm opt-p")
            .code == 2);
  const auto outside = scratch("outside.txt");
  std::ofstream(outside) << "3 1\n";
  CHECK(run("solve-partial --rows 2 --cols 4 --border 2 --deliveries " +
            outside.string() + " --algorithm opt-p")
            .code == 2);
}

TEST_CASE("gen writes a reproducible delivery file") {
  const auto a = scratch("a.txt");
  const auto b = scratch("b.txt");
  const std::string args = "gen --rows 8 --cols 14 --border 6 --n 10 --p 0.5 --seed 4 --out ";
  CHECK(run(args + a.string()).code == 0);
  CHECK(run(args + b.string()).code == 0);
  CHECK(read_all(a) == read_all(b));

  std::istringstream in(read_all(a));
  int count = 0, left = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    int row = 0, col = 0;
    std::istringstream(line) >> row >> col;
    ++count;
    left += col <= 6;
  }
  CHECK(count == 10);
  CHECK(left == 5);

  CHECK(run("gen --rows 8 --cols 14 --border 6 --n 10 --p area --seed 4 --out " +
            a.string())
            .code == 0);
  CHECK(run("gen --rows 4 --cols 5 --border 1 --n 5 --p 1 --seed 4 --out " +
            a.string())
            .code == 2);
  CHECK(run("gen --rows 8 --cols 14 --border 6 --n 10 --p 0.5 --seed 4 --out "
            "/nonexistent-dir/h.txt")
            .code == 3);
}

TEST_CASE("preset and feasibility") {
  auto r = run("preset --name chicago");
  CHECK(r.code == 0);
  CHECK(r.out == "chicago 8 14 6 120\n");
  CHECK(run("preset --name miami").out == "miami 9 20 20 25\n");
  CHECK(run("preset --name boston").code == 2);

  const auto h = scratch("one.txt");
  std::ofstream(h) << "4 7\n";
  r = run("feasibility --preset chicago --deliveries " + h.string() +
          " --algorithm opt-p");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "total_m=0 max_round_trip_m=0 range_m=30000 mission_feasible=true "
        "every_trip_feasible=true\n");
}

TEST_CASE("bench commands write csv") {
  const auto config = scratch("config.json");
  std::ofstream(config) << R"({"scenario": "full", "rows": [3], "cols": [3],
    "border_fractions": [0.67], "algorithms": ["opt-f", "cmall-f"]})";
  const auto out = scratch("ratio.csv");
  CHECK(run("bench-ratio --config " + config.string() + " --out " + out.string()).code == 0);
  const std::string text = read_all(out);
  CHECK(text.rfind("rows,cols,border,n,p,seed,algorithm,dp_row,dp_col,cost,ratio,runtime_us\n", 0) == 0);
  CHECK(text.find("3,3,2,9,") != std::string::npos);

  const auto timed = scratch("time.csv");
  CHECK(run("bench-time --config " + config.string() + " --out " + timed.string()).code == 0);
  CHECK(read_all(timed).find(",preprocess_us\n") != std::string::npos);

  CHECK(run("bench-ratio --config " + scratch("none.json").string() + " --out " +
            out.string())
            .code == 3);
  std::ofstream(config) << "{\"rows\": [0]}";
  CHECK(run("bench-ratio --config " + config.string() + " --out " + out.string()).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("solve-full --rows x --cols 3 --border 2 --algorithm opt-f").code == 2);
}
