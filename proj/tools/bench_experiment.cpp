// Times the serial reference experiment runner against the OpenMP kernel on
// the same workload and reports the speedup. The two must produce identical
// rows; this also cross-checks them on every run.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "stallings/experiment.hpp"

using namespace stallings;

namespace {

double time_run(const std::function<std::vector<ExperimentRow>()>& fn,
                std::vector<ExperimentRow>& rows) {
  auto start = std::chrono::steady_clock::now();
  rows = fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark: serial reference vs OpenMP experiment kernel"};
  std::string distribution = "graph";
  int rank = 3, param_min = 4, param_max = 10, samples = 500, jobs = omp_get_max_threads();
  std::uint64_t seed = 20240601;
  app.add_option("--distribution", distribution, "graph or word");
  app.add_option("--rank", rank, "ambient rank");
  app.add_option("--param-min", param_min, "first parameter point");
  app.add_option("--param-max", param_max, "last parameter point");
  app.add_option("--samples", samples, "pairs per parameter point");
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--jobs", jobs, "threads for the parallel run");
  CLI11_PARSE(app, argc, argv);

  ExperimentParams p;
  p.distribution = distribution == "word" ? Distribution::word_based : Distribution::graph_based;
  p.ambient_rank = rank;
  p.param_min = param_min;
  p.param_max = param_max;
  p.samples = samples;
  p.seed = seed;

  const long pairs = static_cast<long>(param_max - param_min + 1) * samples;
  std::cout << "workload: " << distribution_tag(p) << " rank=" << rank << " param=" << param_min
            << ".." << param_max << " samples=" << samples << " (" << pairs << " pairs)\n";

  std::vector<ExperimentRow> serial_rows, parallel_rows;
  double t_serial = time_run([&] { return run_experiment_serial(p); }, serial_rows);
  std::cout << "serial reference: " << t_serial << " s\n";
  double t_parallel =
      time_run([&] { return run_experiment_parallel(p, jobs); }, parallel_rows);
  std::cout << "openmp x" << jobs << ":       " << t_parallel << " s\n";
  std::cout << "speedup:          " << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "\n";

  if (serial_rows != parallel_rows) {
    std::cerr << "MISMATCH: serial and parallel rows differ\n";
    return 1;
  }
  std::cout << "rows identical: yes\n";
  return 0;
}
