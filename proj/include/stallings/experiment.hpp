#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "stallings/random.hpp"
#include "stallings/subgroup.hpp"

namespace stallings {

enum class Distribution { graph_based, word_based };

struct ExperimentParams {
  Distribution distribution = Distribution::graph_based;
  int ambient_rank = 2;
  int param_min = 2;  // vertex count (graph-based) or max word length (word-based)
  int param_max = 2;
  int samples = 100;  // pairs per parameter point
  std::uint64_t seed = 0;
  int generator_count = 4;      // word-based only
  int max_rejections = 10'000;  // graph-based only
};

// One CSV record: counterexample / nontrivial-intersection proportions for a
// parameter point. Only pairs with rr > 0 on both sides count toward
// pct_counterexample's denominator; pct_nontrivial_meet is over all pairs.
struct ExperimentRow {
  std::string distribution;
  int rank = 0;
  int param = 0;
  int samples = 0;
  double pct_counterexample = 0.0;
  double pct_nontrivial_meet = 0.0;
  std::uint64_t seed = 0;

  bool operator==(const ExperimentRow&) const = default;
};

// Draws one subgroup pair for a parameter point.
using PairSampler = std::function<std::pair<Subgroup, Subgroup>(int param, RandomStream& rng)>;

PairSampler make_sampler(const ExperimentParams& params);
std::string distribution_tag(const ExperimentParams& params);

// Serial reference: one pass, sample index i of point p drawing from the
// stream (seed, p * samples + i).
std::vector<ExperimentRow> run_experiment_serial(const ExperimentParams& params);
std::vector<ExperimentRow> run_experiment_serial(const ExperimentParams& params,
                                                 const PairSampler& sampler,
                                                 const std::string& tag);

// OpenMP kernel over the flattened (point, sample) index space. Per-sample
// streams and an index-ordered reduction make the rows identical to the
// serial reference for any job count.
std::vector<ExperimentRow> run_experiment_parallel(const ExperimentParams& params, int jobs);
std::vector<ExperimentRow> run_experiment_parallel(const ExperimentParams& params,
                                                   const PairSampler& sampler,
                                                   const std::string& tag, int jobs);

// jobs <= 1 runs the serial reference.
std::vector<ExperimentRow> run_experiment(const ExperimentParams& params, int jobs = 1);

// Header exactly:
// distribution,rank,param,samples,pct_counterexample,pct_nontrivial_meet,seed
std::string to_csv(const std::vector<ExperimentRow>& rows);

}  // namespace stallings
