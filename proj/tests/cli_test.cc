// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end tests of the command-line tool; each test shells out to the
// built binary in a scratch directory.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dppc/oracles.hpp"
#include "dppc/vacc_instance.hpp"
#include "gtest/gtest.h"

namespace dppc {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dppc_cli_" +
            std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()
                      ->current_test_info()
                      ->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args) const {
    const std::string cmd = std::string(DPPC_CLI_PATH) + " " + args +
                            " >" + (dir_ / "stdout.txt").string() + " 2>" +
                            (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
  }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  static std::string slurp(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  // RFC-4180-aware row splitter, enough for the columns compared here.
  static std::vector<std::vector<std::string>> read_csv(
      const std::string& file) {
    std::vector<std::vector<std::string>> rows;
    std::ifstream in(file, std::ios::binary);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::vector<std::string> fields;
      std::string field;
      bool quoted = false;
      for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
          if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
            field += '"';
            ++i;
          } else if (c == '"') {
            quoted = false;
          } else {
            field += c;
          }
        } else if (c == '"') {
          quoted = true;
        } else if (c == ',') {
          fields.push_back(field);
          field.clear();
        } else {
          field += c;
        }
      }
      fields.push_back(field);
      rows.push_back(std::move(fields));
    }
    return rows;
  }

  static std::size_t column(const std::vector<std::string>& header,
                            const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    ADD_FAILURE() << "no column " << name;
    return 0;
  }

  void write_two_cluster_instance(const std::string& file) const {
    std::ofstream out(file);
    out << "24 6\n";
    const double xs[6] = {0.00, 0.01, 0.02, 1.00, 1.01, 1.02};
    for (int l = 0; l < 6; ++l) out << "loc " << l << ' ' << xs[l] << " 0\n";
    int person = 0;
    for (int l = 0; l < 6; ++l)
      for (int copy = 0; copy < 4; ++copy) out << "person " << person++ << ": " << l << "\n";
  }

  fs::path dir_;
};

TEST_F(CliTest, SolvePscSmoke) {
  ASSERT_EQ(run("gen star --n 10 --out " + path("sys.txt")), 0);
  ASSERT_EQ(run("solve-psc --algo greedy --rho 0.8 --eps 1 --delta 1e-6 "
                "--seed 7 --in " + path("sys.txt") + " --out " + path("run.csv")),
            0);
  const auto rows = read_csv(path("run.csv"));
  ASSERT_EQ(rows.size(), 2u);  // header + one result row
  EXPECT_EQ(rows[1][column(rows[0], "command")], "solve-psc");
  EXPECT_EQ(rows[1][column(rows[0], "seed")], "7");
  EXPECT_EQ(rows[1][column(rows[0], "eps_spent")], "2");  // 2 eps composed
}

TEST_F(CliTest, CsvHeadersAreStable) {
  // The header rows are a versioned interface; changing them must be a
  // deliberate schema bump.
  ASSERT_EQ(run("gen star --n 10 --out " + path("sys.txt")), 0);
  ASSERT_EQ(run("solve-psc --algo greedy --rho 0.8 --eps 1 --delta 1e-6 "
                "--in " + path("sys.txt") + " --out " + path("psc.csv")), 0);
  const auto psc = read_csv(path("psc.csv"));
  EXPECT_EQ(psc[0], (std::vector<std::string>{
      "schema", "command", "algo", "in", "n", "m", "rho", "eps", "delta",
      "seed", "status", "k", "solution_size", "coverage", "target",
      "exhausted", "eps_spent", "delta_spent", "wall_ms", "warnings",
      "solution"}));
  EXPECT_EQ(psc[1][0], "dppc.v1");

  write_two_cluster_instance(path("vacc.txt"));
  ASSERT_EQ(run("solve-vacc --k 2 --rho 0.75 --eps 40 --gamma 0.03125 "
                "--seed 1 --in " + path("vacc.txt") + " --out " +
                path("vacc.csv")), 0);
  const auto vacc = read_csv(path("vacc.csv"));
  EXPECT_EQ(vacc[0], (std::vector<std::string>{
      "schema", "command", "in", "people", "locations", "k", "rho", "eps",
      "delta", "gamma", "alpha_mode", "alpha_multiplier", "seed", "status",
      "facility_count", "selected_radius", "objective", "objective_original",
      "rounds", "eps_spent", "delta_spent", "wall_ms", "warnings",
      "facilities"}));

  ASSERT_EQ(run("bench --problem vacc --k 2 --eps 40 --rho 0.75 --gamma "
                "0.03125 --trials 1 --seed 1 --in " + path("vacc.txt") +
                " --out " + path("bench.csv")), 0);
  const auto bench = read_csv(path("bench.csv"));
  EXPECT_EQ(bench[0], (std::vector<std::string>{
      "schema", "row_type", "problem", "algo", "k", "eps", "delta", "rho",
      "gamma", "alpha_mode", "trial", "seed", "status", "objective",
      "objective_original", "solution_size", "coverage", "baseline_objective",
      "baseline_size", "eps_spent", "delta_spent", "wall_ms"}));
}

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(run("solve-psc --algo nonsense --in x --out y"), 1);
  EXPECT_EQ(run("no-such-command"), 1);
}

TEST_F(CliTest, MaxcovBelowRegimeExitsTwo) {
  ASSERT_EQ(run("gen star --n 20 --out " + path("sys.txt")), 0);
  EXPECT_EQ(run("solve-psc --algo maxcov --rho 0.6 --eps 8 --delta 1e-6 "
                "--in " + path("sys.txt") + " --out " + path("run.csv")),
            2);
  // An explicit guess-space cap lets the search run on the same instance.
  EXPECT_EQ(run("solve-psc --algo maxcov --rho 0.6 --eps 8 --delta 1e-6 "
                "--max-opt-guess 6 --seed 1 --in " + path("sys.txt") +
                " --out " + path("run.csv")),
            0);
  const auto rows = read_csv(path("run.csv"));
  EXPECT_EQ(rows[1][column(rows[0], "status")], "ok");
}

TEST_F(CliTest, ConfigFileSuppliesFlags) {
  ASSERT_EQ(run("gen star --n 10 --out " + path("sys.txt")), 0);
  {
    std::ofstream ini(path("solve.ini"));
    ini << "[solve-psc]\nalgo=greedy\nrho=0.8\neps=2\ndelta=1e-6\nseed=11\n"
        << "in=" << path("sys.txt") << "\nout=" << path("cfg.csv") << "\n";
  }
  ASSERT_EQ(run("--config " + path("solve.ini") + " solve-psc"), 0);
  const auto cfg = read_csv(path("cfg.csv"));
  ASSERT_EQ(cfg.size(), 2u);

  ASSERT_EQ(run("solve-psc --algo greedy --rho 0.8 --eps 2 --delta 1e-6 "
                "--seed 11 --in " + path("sys.txt") + " --out " +
                path("flags.csv")),
            0);
  const auto flags = read_csv(path("flags.csv"));
  // Same parameters, same result row apart from the instance path column.
  EXPECT_EQ(cfg[1][column(cfg[0], "solution")],
            flags[1][column(flags[0], "solution")]);
  EXPECT_EQ(cfg[1][column(cfg[0], "coverage")],
            flags[1][column(flags[0], "coverage")]);
}

TEST_F(CliTest, ZeroRadiusInstanceReportsObjectiveZero) {
  {
    std::ofstream out(path("vacc.txt"));
    out << "8 3\nloc 0 0 0\nloc 1 5 0\nloc 2 10 0\n";
    for (int p = 0; p < 8; ++p) out << "person " << p << ": 0\n";
  }
  ASSERT_EQ(run("solve-vacc --k 1 --rho 0.5 --eps 48 --gamma 0.0625 "
                "--zero-noise --in " + path("vacc.txt") + " --out " +
                path("run.csv")),
            0);
  const auto rows = read_csv(path("run.csv"));
  EXPECT_EQ(rows[1][column(rows[0], "objective")], "0");
  EXPECT_EQ(rows[1][column(rows[0], "status")], "ok");
}

TEST_F(CliTest, InfeasibleVaccExitsThree) {
  write_two_cluster_instance(path("vacc.txt"));
  EXPECT_EQ(run("solve-vacc --k 1 --rho 0.9 --eps 96 --gamma 0.125 "
                "--zero-noise --in " + path("vacc.txt") + " --out " +
                path("run.csv")),
            3);
  const auto rows = read_csv(path("run.csv"));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][column(rows[0], "status")], "infeasible");
}

TEST_F(CliTest, GenReproducesTheCommittedGoldenFixtures) {
  const std::string fixtures = DPPC_FIXTURES_DIR;
  ASSERT_EQ(run("gen star --n 10 --out " + path("star.txt")), 0);
  EXPECT_EQ(slurp(path("star.txt")), slurp(fixtures + "/star_n10.txt"));

  ASSERT_EQ(run("gen mobility --people 120 --locations 15 --clusters 3 "
                "--spread 0.05 --seed 7 --out " + path("mob.txt")), 0);
  EXPECT_EQ(slurp(path("mob.txt")), slurp(fixtures + "/mobility_small.txt"));

  ASSERT_EQ(run("gen reduce-psc --rho 0.5 --in " + fixtures + "/star_n10.txt" +
                " --out " + path("reduced.txt")), 0);
  EXPECT_EQ(slurp(path("reduced.txt")),
            slurp(fixtures + "/star_n10_reduced.txt"));
}

TEST_F(CliTest, HandComputedFixtureMatchesTheOracle) {
  // The committed two-cluster instance: the optimal pair serves everyone
  // within 0.01 raw, i.e. 0.01 / 1.02 once normalized to unit diameter.
  std::ifstream in(std::string(DPPC_FIXTURES_DIR) + "/two_cluster_line.txt");
  ASSERT_TRUE(in.good());
  const VaccInstance v = load_vacc_instance(in);
  const auto r = exact_client_cover(v, 2, 0.9);
  EXPECT_NEAR(r.opt_radius, 0.01 / 1.02, 1e-9);
}

TEST_F(CliTest, GenIsDeterministicPerSeed) {
  ASSERT_EQ(run("gen mobility --people 80 --locations 12 --clusters 3 "
                "--seed 1 --out " + path("a.txt")), 0);
  ASSERT_EQ(run("gen mobility --people 80 --locations 12 --clusters 3 "
                "--seed 1 --out " + path("b.txt")), 0);
  EXPECT_EQ(slurp(path("a.txt")), slurp(path("b.txt")));

  ASSERT_EQ(run("gen star --n 12 --out " + path("s1.txt")), 0);
  ASSERT_EQ(run("gen star --n 12 --out " + path("s2.txt")), 0);
  EXPECT_EQ(slurp(path("s1.txt")), slurp(path("s2.txt")));
}

TEST_F(CliTest, ReducePscYieldsRadiusZeroAtTheOptimum) {
  ASSERT_EQ(run("gen star --n 8 --out " + path("sys.txt")), 0);
  ASSERT_EQ(run("gen reduce-psc --rho 0.5 --in " + path("sys.txt") +
                " --out " + path("vacc.txt")), 0);
  std::ifstream in(path("vacc.txt"));
  const VaccInstance v = load_vacc_instance(in);
  // Star optimum is one center; the reduced instance reaches radius 0 there.
  const auto r = exact_client_cover(v, 1, 0.5);
  EXPECT_DOUBLE_EQ(r.opt_radius, 0.0);
}

TEST_F(CliTest, DegenerateBenchMatchesSingleSolve) {
  write_two_cluster_instance(path("vacc.txt"));
  ASSERT_EQ(run("bench --problem vacc --k 2 --eps 40 --rho 0.75 --gamma "
                "0.0078125 --trials 1 --seed 9 --in " + path("vacc.txt") +
                " --out " + path("bench.csv")),
            0);
  const auto bench = read_csv(path("bench.csv"));
  ASSERT_GE(bench.size(), 2u);
  const auto& header = bench[0];
  const auto& trial = bench[1];
  EXPECT_EQ(trial[column(header, "row_type")], "trial");
  const std::string trial_seed = trial[column(header, "seed")];

  ASSERT_EQ(run("solve-vacc --k 2 --rho 0.75 --eps 40 --gamma 0.0078125 "
                "--seed " + trial_seed + " --in " + path("vacc.txt") +
                " --out " + path("solo.csv")),
            0);
  const auto solo = read_csv(path("solo.csv"));
  EXPECT_EQ(trial[column(header, "objective")],
            solo[1][column(solo[0], "objective")]);
  EXPECT_EQ(trial[column(header, "solution_size")],
            solo[1][column(solo[0], "facility_count")]);
}

TEST_F(CliTest, BenchRowsReproduceAsSingleRuns) {
  ASSERT_EQ(run("gen star --n 16 --out " + path("sys.txt")), 0);
  ASSERT_EQ(run("bench --problem psc --algo greedy --eps 4 --rho 0.5 "
                "--trials 3 --seed 21 --in " + path("sys.txt") + " --out " +
                path("bench.csv")),
            0);
  const auto bench = read_csv(path("bench.csv"));
  const auto& header = bench[0];
  int checked = 0;
  for (std::size_t i = 1; i < bench.size(); ++i) {
    if (bench[i][column(header, "row_type")] != "trial") continue;
    const std::string seed = bench[i][column(header, "seed")];
    ASSERT_EQ(run("solve-psc --algo greedy --rho 0.5 --eps 4 --delta 1e-6 "
                  "--seed " + seed + " --in " + path("sys.txt") + " --out " +
                  path("solo.csv")),
              0);
    const auto solo = read_csv(path("solo.csv"));
    EXPECT_EQ(bench[i][column(header, "solution_size")],
              solo[1][column(solo[0], "solution_size")]);
    EXPECT_EQ(bench[i][column(header, "coverage")],
              solo[1][column(solo[0], "coverage")]);
    ++checked;
  }
  EXPECT_EQ(checked, 3);
}

TEST_F(CliTest, BenchGridMatchesTheExperimentShape) {
  // 13 budgets x 5 epsilon values: 65 cells, one trial row each.
  ASSERT_EQ(run("gen mobility --people 400 --locations 20 --clusters 4 "
                "--spread 0.05 --seed 5 --out " + path("mob.txt")), 0);
  ASSERT_EQ(run("bench --problem vacc --k 4,5,6,7,8,9,10,11,12,13,14,15,16 "
                "--eps 0.25,0.5,1,2,4 --rho 0.8 --delta 1e-6 --gamma "
                "0.015625 --trials 1 --seed 12 --in " + path("mob.txt") +
                " --out " + path("grid.csv")),
            0);
  const auto rows = read_csv(path("grid.csv"));
  const auto& header = rows[0];
  int trials = 0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    trials += rows[i][column(header, "row_type")] == "trial";
  EXPECT_EQ(trials, 65);
}

TEST_F(CliTest, BenchObjectiveImprovesWithEpsilon) {
  // Soft monotonicity: the mean objective at eps = 4 should not exceed the
  // mean at eps = 0.25 on the synthetic suite. Seeded, so deterministic.
  ASSERT_EQ(run("gen mobility --people 5000 --locations 20 --clusters 4 "
                "--spread 0.05 --seed 3 --out " + path("mob.txt")), 0);
  ASSERT_EQ(run("bench --problem vacc --k 6 --eps 0.25,4 --rho 0.8 --gamma "
                "0.015625 --trials 30 --seed 99 --in " + path("mob.txt") +
                " --out " + path("trend.csv")),
            0);
  const auto rows = read_csv(path("trend.csv"));
  const auto& header = rows[0];
  double mean_low = -1.0, mean_high = -1.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][column(header, "row_type")] != "mean") continue;
    const double eps = std::stod(rows[i][column(header, "eps")]);
    const double mean = std::stod(rows[i][column(header, "objective")]);
    if (eps == 0.25) mean_low = mean;
    if (eps == 4.0) mean_high = mean;
  }
  ASSERT_GE(mean_low, 0.0);
  ASSERT_GE(mean_high, 0.0);
  EXPECT_LE(mean_high, mean_low);

  // The baseline column is reproducible as a standalone baseline run.
  std::string baseline_in_bench;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i][column(header, "row_type")] == "trial") {
      baseline_in_bench = rows[i][column(header, "baseline_objective")];
      break;
    }
  ASSERT_EQ(run("solve-vacc --k 6 --rho 0.8 --gamma 0.015625 --baseline "
                "--in " + path("mob.txt") + " --out " + path("base.csv")),
            0);
  const auto base = read_csv(path("base.csv"));
  EXPECT_EQ(baseline_in_bench, base[1][column(base[0], "objective")]);
}

TEST_F(CliTest, BenchIsDeterministicAcrossWorkerCounts) {
  write_two_cluster_instance(path("vacc.txt"));
  const std::string cmd = "bench --problem vacc --k 2 --eps 30,40 --rho 0.75 "
                          "--gamma 0.03125 --trials 6 --seed 13 --in " +
                          path("vacc.txt") + " --out ";
  const int rc1 = std::system(("DPPC_THREADS=1 " + std::string(DPPC_CLI_PATH) +
                               " " + cmd + path("a.csv") + " 2>/dev/null")
                                  .c_str());
  const int rc4 = std::system(("DPPC_THREADS=4 " + std::string(DPPC_CLI_PATH) +
                               " " + cmd + path("b.csv") + " 2>/dev/null")
                                  .c_str());
  ASSERT_EQ(WEXITSTATUS(rc1), 0);
  ASSERT_EQ(WEXITSTATUS(rc4), 0);
  const auto a = read_csv(path("a.csv"));
  const auto b = read_csv(path("b.csv"));
  ASSERT_EQ(a.size(), b.size());
  const std::size_t wall = column(a[0], "wall_ms");
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a[i].size(), b[i].size());
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (j == wall) continue;  // timing differs, everything else must not
      EXPECT_EQ(a[i][j], b[i][j]) << "row " << i << " column " << j;
    }
  }
}

TEST_F(CliTest, BenchEmitsSummaryRowsPerCell) {
  write_two_cluster_instance(path("vacc.txt"));
  ASSERT_EQ(run("bench --problem vacc --k 1,2 --eps 30,40 --rho 0.75 "
                "--gamma 0.015625 --trials 2 --seed 4 --in " + path("vacc.txt") +
                " --out " + path("bench.csv")),
            0);
  const auto rows = read_csv(path("bench.csv"));
  const auto& header = rows[0];
  int trials = 0, means = 0, medians = 0, stds = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const std::string& kind = rows[i][column(header, "row_type")];
    trials += kind == "trial";
    means += kind == "mean";
    medians += kind == "median";
    stds += kind == "std";
  }
  EXPECT_EQ(trials, 8);  // 4 cells x 2 trials
  EXPECT_EQ(means, 4);
  EXPECT_EQ(medians, 4);
  EXPECT_EQ(stds, 4);
}

}  // namespace
}  // namespace dppc
