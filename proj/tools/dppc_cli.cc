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

// Command-line front end: solve single instances, benchmark parameter grids,
// and generate instances. Every result row carries its seed and composed
// privacy spend, so any row can be reproduced by a single-run command with
// that seed.
//
// Exit codes: 0 success, 1 usage, 2 regime or precondition failure,
// 3 infeasible.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "dppc/csv.hpp"
#include "dppc/facility.hpp"
#include "dppc/generators.hpp"
#include "dppc/greedy_cover.hpp"
#include "dppc/maxcov_cover.hpp"
#include "dppc/oracles.hpp"
#include "dppc/set_system.hpp"
#include "dppc/vacc_instance.hpp"

namespace {

constexpr const char* kSchema = "dppc.v1";
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRegime = 2;
constexpr int kExitInfeasible = 3;

double wall_ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::size_t worker_count(std::size_t jobs) {
  std::size_t workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char* cap = std::getenv("DPPC_THREADS")) {
    const long parsed = std::strtol(cap, nullptr, 10);
    if (parsed >= 1) workers = static_cast<std::size_t>(parsed);
  }
  return std::min(workers, std::max<std::size_t>(jobs, 1));
}

// Runs fn(0..jobs-1) on a small pool; results must be written to
// caller-provided slots so output order stays deterministic.
void run_parallel(std::size_t jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = worker_count(jobs);
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= jobs) return;
        fn(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

dppc::SetSystem load_set_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dppc::ValidationError("cannot open " + path);
  return dppc::load_set_system(in);
}

dppc::VaccInstance load_vacc_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dppc::ValidationError("cannot open " + path);
  return dppc::load_vacc_instance(in);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dppc::ValidationError("cannot open " + path + " for writing");
  return out;
}

std::string join_labels(const std::vector<std::int64_t>& labels) {
  std::ostringstream s;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) s << ' ';
    s << labels[i];
  }
  return s.str();
}

std::string join_warnings(const std::vector<std::string>& warnings) {
  std::ostringstream s;
  for (std::size_t i = 0; i < warnings.size(); ++i) {
    if (i > 0) s << "; ";
    s << warnings[i];
  }
  return s.str();
}

// ---------------------------------------------------------------------------
// solve-psc

struct PscConfig {
  std::string algo = "greedy";
  double rho = 0.8;
  double eps = 1.0;
  double delta = 1e-6;
  std::uint64_t seed = 0;
  bool zero_noise = false;
  std::optional<std::size_t> max_opt_guess;
  std::string in_path;
  std::string out_path;
};

struct PscRow {
  std::string status = "ok";
  std::size_t k = 0;
  std::size_t solution_size = 0;
  std::int64_t coverage = 0;
  std::int64_t target = 0;
  bool exhausted = false;
  dppc::PrivacyBudget spent;
  double wall_ms = 0.0;
  std::string warnings;
  std::vector<std::int64_t> solution_labels;
};

PscRow solve_psc_once(const dppc::SetSystem& system, const PscConfig& config,
                      std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  dppc::NoiseSource noise =
      config.zero_noise ? dppc::NoiseSource::zero_noise()
                        : dppc::NoiseSource(seed);
  PscRow row;
  row.target = dppc::coverage_target(system.universe_size(), config.rho);
  if (config.algo == "greedy") {
    const dppc::GreedyCoverResult r = dppc::partial_set_cover_greedy(
        system, config.rho, {config.eps, config.delta}, noise);
    row.k = r.solution.k;
    row.solution_size = r.solution.k;
    row.coverage = r.coverage;
    row.exhausted = r.exhausted;
    row.spent = r.ledger.total();
    row.warnings = join_warnings(r.warnings);
    for (std::size_t i = 0; i < r.solution.k; ++i)
      row.solution_labels.push_back(
          system.set_labels()[r.solution.permutation[i]]);
  } else {
    dppc::MaxCovOptions options;
    options.max_opt_guess = config.max_opt_guess;
    const dppc::MaxCovCoverResult r = dppc::partial_cover_via_maxcov(
        system, config.rho, {config.eps, config.delta}, noise, options);
    row.k = r.opt_guess;
    row.solution_size = r.solution.size();
    row.coverage = r.coverage;
    row.spent = r.ledger.total();
    row.warnings = join_warnings(r.warnings);
    if (!r.accepted) row.status = "infeasible";
    for (dppc::SetId id : r.solution)
      row.solution_labels.push_back(system.set_labels()[id]);
  }
  row.wall_ms = wall_ms_since(start);
  return row;
}

int run_solve_psc(const PscConfig& config) {
  const dppc::SetSystem system = load_set_system_file(config.in_path);
  const PscRow row = solve_psc_once(system, config, config.seed);

  std::ofstream out = open_output(config.out_path);
  dppc::CsvWriter csv(out);
  csv.write_row({"schema", "command", "algo", "in", "n", "m", "rho", "eps",
                 "delta", "seed", "status", "k", "solution_size", "coverage",
                 "target", "exhausted", "eps_spent", "delta_spent", "wall_ms",
                 "warnings", "solution"});
  csv.write_row({kSchema, "solve-psc", config.algo, config.in_path,
                 std::to_string(system.universe_size()),
                 std::to_string(system.set_count()), dppc::csv_num(config.rho),
                 dppc::csv_num(config.eps), dppc::csv_num(config.delta),
                 std::to_string(config.seed), row.status,
                 std::to_string(row.k), std::to_string(row.solution_size),
                 std::to_string(row.coverage), std::to_string(row.target),
                 row.exhausted ? "true" : "false", dppc::csv_num(row.spent.epsilon),
                 dppc::csv_num(row.spent.delta), dppc::csv_num(row.wall_ms),
                 row.warnings, join_labels(row.solution_labels)});
  std::cerr << "solve-psc: status=" << row.status << " size=" << row.solution_size
            << " coverage=" << row.coverage << "/" << row.target << "\n";
  return row.status == "ok" ? kExitOk : kExitInfeasible;
}

// ---------------------------------------------------------------------------
// solve-vacc

struct VaccConfig {
  std::size_t k = 4;
  double rho = 0.8;
  double eps = 1.0;
  double delta = 1e-6;
  double gamma = 1.0 / 1024.0;
  std::string alpha_mode = "heuristic";
  std::uint64_t seed = 0;
  bool zero_noise = false;
  bool baseline = false;
  bool trace = false;
  std::string in_path;
  std::string out_path;
};

dppc::AlphaMode parse_alpha_mode(const std::string& mode) {
  if (mode == "heuristic") return dppc::AlphaMode::kHeuristic;
  if (mode == "theoretical") return dppc::AlphaMode::kTheoretical;
  throw dppc::ValidationError("unknown alpha mode: " + mode);
}

dppc::FacilitySolution solve_vacc_once(const dppc::VaccInstance& instance,
                                       const VaccConfig& config,
                                       std::uint64_t seed) {
  if (config.baseline) return dppc::baseline_client_cover(instance, config.gamma);
  dppc::ClientCoverParams params;
  params.gamma = config.gamma;
  params.budget = {config.eps, config.delta};
  params.alpha_mode = parse_alpha_mode(config.alpha_mode);
  dppc::NoiseSource noise = config.zero_noise
                                ? dppc::NoiseSource::zero_noise()
                                : dppc::NoiseSource(seed);
  return dppc::dp_client_cover(instance, params, noise);
}

int run_solve_vacc(const VaccConfig& config) {
  dppc::VaccInstance instance = load_vacc_file(config.in_path);
  instance.set_budget_k(config.k);
  instance.set_rho(config.rho);
  const auto start = std::chrono::steady_clock::now();
  const dppc::FacilitySolution f = solve_vacc_once(instance, config, config.seed);
  const double wall = wall_ms_since(start);

  std::vector<std::int64_t> facility_labels;
  for (dppc::LocationId l : f.facilities)
    facility_labels.push_back(instance.location_labels()[l]);
  const dppc::PrivacyBudget spent = f.ledger.total();

  std::ofstream out = open_output(config.out_path);
  dppc::CsvWriter csv(out);
  csv.write_row({"schema", "command", "in", "people", "locations", "k", "rho",
                 "eps", "delta", "gamma", "alpha_mode", "alpha_multiplier",
                 "seed", "status", "facility_count", "selected_radius",
                 "objective", "objective_original", "rounds", "eps_spent",
                 "delta_spent", "wall_ms", "warnings", "facilities"});
  csv.write_row(
      {kSchema, "solve-vacc", config.in_path,
       std::to_string(instance.people_count()),
       std::to_string(instance.location_count()), std::to_string(config.k),
       dppc::csv_num(config.rho), dppc::csv_num(config.eps),
       dppc::csv_num(config.delta), dppc::csv_num(config.gamma),
       config.baseline ? "baseline" : config.alpha_mode,
       dppc::csv_num(f.budget_multiplier_used), std::to_string(config.seed),
       f.feasible ? "ok" : "infeasible", std::to_string(f.facilities.size()),
       dppc::csv_num(f.selected_radius), dppc::csv_num(f.achieved_radius),
       dppc::csv_num(f.achieved_radius * instance.metric().scale()),
       std::to_string(f.trace.size()), dppc::csv_num(spent.epsilon),
       dppc::csv_num(spent.delta), dppc::csv_num(wall),
       join_warnings(f.warnings), join_labels(facility_labels)});
  if (config.trace) {
    for (std::size_t i = 0; i < f.trace.size(); ++i) {
      const dppc::ClientCoverRound& r = f.trace[i];
      std::cerr << "round " << i + 1 << ": R=" << r.radius
                << " |F_R|=" << r.facilities.size()
                << " coverage=" << r.coverage
                << (r.exhausted ? " exhausted" : "")
                << (r.accepted ? " accepted" : " rejected") << "\n";
    }
  }
  std::cerr << "solve-vacc: status=" << (f.feasible ? "ok" : "infeasible")
            << " facilities=" << f.facilities.size()
            << " objective=" << f.achieved_radius << "\n";
  return f.feasible ? kExitOk : kExitInfeasible;
}

// ---------------------------------------------------------------------------
// bench

struct BenchConfig {
  std::string problem = "vacc";
  std::string algo = "greedy";
  std::vector<std::size_t> k_list{4};
  std::vector<double> eps_list{1.0};
  double rho = 0.8;
  double delta = 1e-6;
  double gamma = 1.0 / 1024.0;
  std::string alpha_mode = "heuristic";
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_opt_guess;
  std::string in_path;
  std::string out_path;
};

struct BenchCell {
  std::size_t k = 0;
  double eps = 0.0;
};

struct BenchTrialResult {
  std::string status = "ok";
  double objective = 0.0;   // percentile objective (vacc) or solution size (psc)
  double objective_original = 0.0;
  std::size_t solution_size = 0;
  std::int64_t coverage = 0;
  dppc::PrivacyBudget spent;
  double wall_ms = 0.0;
};

void write_bench_header(dppc::CsvWriter& csv) {
  csv.write_row({"schema", "row_type", "problem", "algo", "k", "eps", "delta",
                 "rho", "gamma", "alpha_mode", "trial", "seed", "status",
                 "objective", "objective_original", "solution_size", "coverage",
                 "baseline_objective", "baseline_size", "eps_spent",
                 "delta_spent", "wall_ms"});
}

struct Aggregate {
  double mean = 0.0;
  double median = 0.0;
  double stddev = 0.0;
};

Aggregate aggregate(std::vector<double> values) {
  Aggregate a;
  if (values.empty()) return a;
  double sum = 0.0;
  for (double v : values) sum += v;
  a.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - a.mean) * (v - a.mean);
  a.stddev = std::sqrt(sq / static_cast<double>(values.size()));
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  a.median = values.size() % 2 == 1
                 ? values[mid]
                 : (values[mid - 1] + values[mid]) / 2.0;
  return a;
}

int run_bench(const BenchConfig& config) {
  std::optional<dppc::SetSystem> system;
  std::optional<dppc::VaccInstance> instance;
  if (config.problem == "psc") {
    system = load_set_system_file(config.in_path);
  } else if (config.problem == "vacc") {
    instance = load_vacc_file(config.in_path);
    instance->set_rho(config.rho);
  } else {
    throw dppc::ValidationError("unknown problem: " + config.problem);
  }

  std::vector<BenchCell> cells;
  for (std::size_t k : config.k_list)
    for (double eps : config.eps_list) cells.push_back({k, eps});

  std::ofstream out = open_output(config.out_path);
  dppc::CsvWriter csv(out);
  write_bench_header(csv);

  for (const BenchCell& cell : cells) {
    // Baseline once per cell; it is deterministic.
    double baseline_objective = 0.0;
    std::size_t baseline_size = 0;
    std::string baseline_status = "ok";
    try {
      if (config.problem == "psc") {
        const std::vector<dppc::SetId> b =
            dppc::greedy_partial_cover(*system, config.rho);
        baseline_size = b.size();
        baseline_objective = static_cast<double>(b.size());
      } else {
        dppc::VaccInstance bench_instance = *instance;
        bench_instance.set_budget_k(cell.k);
        const dppc::FacilitySolution b =
            dppc::baseline_client_cover(bench_instance, config.gamma);
        baseline_size = b.facilities.size();
        baseline_objective = b.achieved_radius;
        if (!b.feasible) baseline_status = "infeasible";
      }
    } catch (const dppc::Error& e) {
      baseline_status = std::string("error: ") + e.what();
    }

    std::vector<BenchTrialResult> results(config.trials);
    run_parallel(config.trials, [&](std::size_t trial) {
      BenchTrialResult& r = results[trial];
      const std::uint64_t trial_seed = dppc::derive_seed(config.seed, trial);
      const auto start = std::chrono::steady_clock::now();
      try {
        if (config.problem == "psc") {
          PscConfig one;
          one.algo = config.algo;
          one.rho = config.rho;
          one.eps = cell.eps;
          one.delta = config.delta;
          one.max_opt_guess = config.max_opt_guess;
          const PscRow row = solve_psc_once(*system, one, trial_seed);
          r.status = row.status;
          r.objective = static_cast<double>(row.solution_size);
          r.objective_original = r.objective;
          r.solution_size = row.solution_size;
          r.coverage = row.coverage;
          r.spent = row.spent;
        } else {
          dppc::VaccInstance trial_instance = *instance;
          trial_instance.set_budget_k(cell.k);
          VaccConfig one;
          one.k = cell.k;
          one.rho = config.rho;
          one.eps = cell.eps;
          one.delta = config.delta;
          one.gamma = config.gamma;
          one.alpha_mode = config.alpha_mode;
          const dppc::FacilitySolution f =
              solve_vacc_once(trial_instance, one, trial_seed);
          r.status = f.feasible ? "ok" : "infeasible";
          r.objective = f.achieved_radius;
          r.objective_original =
              f.achieved_radius * trial_instance.metric().scale();
          r.solution_size = f.facilities.size();
          // People served within the achieved radius.
          std::int64_t served = 0;
          for (dppc::PersonId p = 0; p < trial_instance.people_count(); ++p) {
            double best = 2.0;
            for (dppc::LocationId l : f.facilities)
              best = std::min(best,
                              trial_instance.person_location_distance(p, l));
            if (best <= f.achieved_radius) ++served;
          }
          r.coverage = served;
          r.spent = f.ledger.total();
        }
      } catch (const dppc::Error& e) {
        r.status = std::string("error: ") + e.what();
      }
      r.wall_ms = wall_ms_since(start);
    });

    std::vector<double> objectives, sizes;
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
      const BenchTrialResult& r = results[trial];
      csv.write_row({kSchema, "trial", config.problem, config.algo,
                     std::to_string(cell.k), dppc::csv_num(cell.eps),
                     dppc::csv_num(config.delta), dppc::csv_num(config.rho),
                     dppc::csv_num(config.gamma), config.alpha_mode,
                     std::to_string(trial),
                     std::to_string(dppc::derive_seed(config.seed, trial)),
                     r.status, dppc::csv_num(r.objective),
                     dppc::csv_num(r.objective_original),
                     std::to_string(r.solution_size),
                     std::to_string(r.coverage),
                     dppc::csv_num(baseline_objective),
                     std::to_string(baseline_size),
                     dppc::csv_num(r.spent.epsilon),
                     dppc::csv_num(r.spent.delta), dppc::csv_num(r.wall_ms)});
      if (r.status == "ok") {
        objectives.push_back(r.objective);
        sizes.push_back(static_cast<double>(r.solution_size));
      }
    }

    const Aggregate obj = aggregate(objectives);
    const Aggregate size = aggregate(sizes);
    const std::vector<std::pair<std::string, std::pair<double, double>>> rows{
        {"mean", {obj.mean, size.mean}},
        {"median", {obj.median, size.median}},
        {"std", {obj.stddev, size.stddev}}};
    for (const auto& [kind, value] : rows)
      csv.write_row({kSchema, kind, config.problem, config.algo,
                     std::to_string(cell.k), dppc::csv_num(cell.eps),
                     dppc::csv_num(config.delta), dppc::csv_num(config.rho),
                     dppc::csv_num(config.gamma), config.alpha_mode, "", "",
                     baseline_status, dppc::csv_num(value.first), "",
                     dppc::csv_num(value.second), "",
                     dppc::csv_num(baseline_objective),
                     std::to_string(baseline_size), "", "", ""});
  }
  std::cerr << "bench: " << cells.size() << " cells x " << config.trials
            << " trials written to " << config.out_path << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// gen

int run_gen_star(std::size_t n, std::size_t extra_edges, bool demo,
                 const std::string& out_path) {
  const dppc::SetSystem base = dppc::gen_star_lower_bound(n);
  std::ofstream out = open_output(out_path);
  dppc::save_set_system(base, out);
  if (demo) {
    // Show how the exact witness flips between the instance and its
    // group-privacy neighbor: the whole reason exact private solving fails.
    const dppc::SetSystem perturbed =
        dppc::gen_star_lower_bound_perturbed(n, extra_edges);
    const auto opt = dppc::exact_partial_cover(base, 0.5);
    const auto opt_neighbor = dppc::exact_partial_cover(perturbed, 0.5);
    std::cout << "base instance:      opt = " << opt.opt_size << ", witness =";
    for (dppc::SetId s : opt.witness) std::cout << ' ' << s;
    std::cout << "\nneighbor (+" << extra_edges
              << " edges): opt = " << opt_neighbor.opt_size << ", witness =";
    for (dppc::SetId s : opt_neighbor.witness) std::cout << ' ' << s;
    std::cout << "\n";
  }
  return kExitOk;
}

int run_gen_mobility(const dppc::MobilityConfig& config,
                     const std::string& out_path) {
  const dppc::VaccInstance v = dppc::gen_synthetic_mobility(config);
  std::ofstream out = open_output(out_path);
  dppc::save_vacc_instance(v, out);
  return kExitOk;
}

int run_gen_reduce(const std::string& in_path, double rho,
                   const std::string& out_path) {
  const dppc::SetSystem system = load_set_system_file(in_path);
  const dppc::VaccInstance v = dppc::gen_psc_to_vacc(system, rho);
  std::ofstream out = open_output(out_path);
  dppc::save_vacc_instance(v, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"differentially private partial set cover and k-supplier "
               "facility placement"};
  app.require_subcommand(1);
  app.set_config("--config");

  PscConfig psc;
  CLI::App* solve_psc = app.add_subcommand(
      "solve-psc", "solve one partial set cover instance privately");
  solve_psc->add_option("--algo", psc.algo, "greedy or maxcov")
      ->check(CLI::IsMember({"greedy", "maxcov"}));
  solve_psc->add_option("--rho", psc.rho, "coverage fraction in (0,1)");
  solve_psc->add_option("--eps", psc.eps, "privacy budget epsilon");
  solve_psc->add_option("--delta", psc.delta, "privacy budget delta");
  solve_psc->add_option("--seed", psc.seed, "random seed");
  solve_psc->add_flag("--zero-noise", psc.zero_noise,
                      "deterministic test mode (no privacy)");
  std::size_t psc_guess_cap = 0;
  CLI::Option* psc_cap_opt = solve_psc->add_option(
      "--max-opt-guess", psc_guess_cap,
      "override the maxcov guess-space bound (forfeits the regime guarantee)");
  solve_psc->add_option("--in", psc.in_path, "set-system file")->required();
  solve_psc->add_option("--out", psc.out_path, "result CSV")->required();

  VaccConfig vacc;
  CLI::App* solve_vacc = app.add_subcommand(
      "solve-vacc", "place facilities privately on a mobility instance");
  solve_vacc->add_option("--k", vacc.k, "facility budget");
  solve_vacc->add_option("--rho", vacc.rho, "fraction of people to serve");
  solve_vacc->add_option("--eps", vacc.eps, "privacy budget epsilon");
  solve_vacc->add_option("--delta", vacc.delta, "privacy budget delta");
  solve_vacc->add_option("--gamma", vacc.gamma, "additive radius error");
  solve_vacc->add_option("--alpha-mode", vacc.alpha_mode,
                         "heuristic or theoretical budget multiplier")
      ->check(CLI::IsMember({"heuristic", "theoretical"}));
  solve_vacc->add_option("--seed", vacc.seed, "random seed");
  solve_vacc->add_flag("--zero-noise", vacc.zero_noise,
                       "deterministic test mode (no privacy)");
  solve_vacc->add_flag("--baseline", vacc.baseline,
                       "run the non-private greedy baseline instead");
  solve_vacc->add_flag("--trace", vacc.trace,
                       "print the per-round |F_R| search trace to stderr");
  solve_vacc->add_option("--in", vacc.in_path, "vacc-instance file")->required();
  solve_vacc->add_option("--out", vacc.out_path, "result CSV")->required();

  BenchConfig bench;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "sweep a parameter grid and emit per-trial and summary rows");
  bench_cmd->add_option("--problem", bench.problem, "psc or vacc")
      ->check(CLI::IsMember({"psc", "vacc"}));
  bench_cmd->add_option("--algo", bench.algo, "greedy or maxcov (psc only)")
      ->check(CLI::IsMember({"greedy", "maxcov"}));
  bench_cmd->add_option("--k", bench.k_list, "facility budgets (list)")
      ->delimiter(',');
  bench_cmd->add_option("--eps", bench.eps_list, "epsilon values (list)")
      ->delimiter(',');
  bench_cmd->add_option("--rho", bench.rho, "coverage fraction");
  bench_cmd->add_option("--delta", bench.delta, "privacy budget delta");
  bench_cmd->add_option("--gamma", bench.gamma, "additive radius error");
  bench_cmd->add_option("--alpha-mode", bench.alpha_mode,
                        "heuristic or theoretical")
      ->check(CLI::IsMember({"heuristic", "theoretical"}));
  bench_cmd->add_option("--trials", bench.trials, "trials per grid cell");
  bench_cmd->add_option("--seed", bench.seed, "master seed; trial i uses "
                        "hash(seed, i)");
  std::size_t bench_guess_cap = 0;
  CLI::Option* bench_cap_opt = bench_cmd->add_option(
      "--max-opt-guess", bench_guess_cap, "maxcov guess-space override");
  bench_cmd->add_option("--in", bench.in_path, "instance file")->required();
  bench_cmd->add_option("--out", bench.out_path, "output CSV")->required();

  CLI::App* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);

  std::size_t star_n = 10, star_extra = 3;
  bool star_demo = false;
  std::string star_out;
  CLI::App* gen_star = gen->add_subcommand(
      "star", "two-star vertex-cover instance (exactness lower bound)");
  gen_star->add_option("--n", star_n, "vertex count (even)")->required();
  gen_star->add_option("--extra-edges", star_extra,
                       "edges added in the demo's neighbor instance");
  gen_star->add_flag("--demo", star_demo,
                     "print how the exact witness flips on the neighbor");
  gen_star->add_option("--out", star_out, "output file")->required();

  dppc::MobilityConfig mobility;
  std::string mobility_out;
  CLI::App* gen_mobility =
      gen->add_subcommand("mobility", "synthetic clustered mobility instance");
  gen_mobility->add_option("--people", mobility.people, "number of people");
  gen_mobility->add_option("--locations", mobility.locations,
                           "number of locations");
  gen_mobility->add_option("--clusters", mobility.clusters, "cluster count");
  gen_mobility->add_option("--spread", mobility.spread, "within-cluster spread");
  gen_mobility->add_option("--seed", mobility.seed, "random seed");
  gen_mobility->add_option("--out", mobility_out, "output file")->required();

  std::string reduce_in, reduce_out;
  double reduce_rho = 0.8;
  CLI::App* gen_reduce = gen->add_subcommand(
      "reduce-psc", "lift a set system to a radius-0 facility instance");
  gen_reduce->add_option("--in", reduce_in, "set-system file")->required();
  gen_reduce->add_option("--rho", reduce_rho, "coverage fraction");
  gen_reduce->add_option("--out", reduce_out, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (psc_cap_opt->count() > 0) psc.max_opt_guess = psc_guess_cap;
  if (bench_cap_opt->count() > 0) bench.max_opt_guess = bench_guess_cap;

  try {
    if (solve_psc->parsed()) return run_solve_psc(psc);
    if (solve_vacc->parsed()) return run_solve_vacc(vacc);
    if (bench_cmd->parsed()) return run_bench(bench);
    if (gen_star->parsed())
      return run_gen_star(star_n, star_extra, star_demo, star_out);
    if (gen_mobility->parsed()) return run_gen_mobility(mobility, mobility_out);
    if (gen_reduce->parsed())
      return run_gen_reduce(reduce_in, reduce_rho, reduce_out);
  } catch (const dppc::RegimeError& e) {
    std::cerr << "regime error: " << e.what() << "\n";
    return kExitRegime;
  } catch (const dppc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRegime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
