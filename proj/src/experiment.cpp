#include "stallings/experiment.hpp"

#include <cstdio>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "stallings/conjecture.hpp"
#include "stallings/errors.hpp"

namespace stallings {

namespace {

struct SampleFlags {
  bool eligible = false;     // rr > 0 on both sides
  bool counterexample = false;  // eligible and IEHNC fails
  bool nontrivial_meet = false;
};

SampleFlags analyze_sample(const PairSampler& sampler, int param, RandomStream& rng) {
  auto [h, k] = sampler(param, rng);
  ConjectureReport rep = analyze_pair(h, k);
  SampleFlags f;
  f.eligible = rep.rr_h > 0 && rep.rr_k > 0;
  f.counterexample = f.eligible && !rep.holds_iehnc;
  f.nontrivial_meet = rep.rk_meet > 0;
  return f;
}

std::vector<ExperimentRow> reduce_rows(const ExperimentParams& p, const std::string& tag,
                                       const std::vector<SampleFlags>& flags,
                                       const std::vector<std::string>& errors) {
  const long samples = p.samples;
  for (std::size_t t = 0; t < errors.size(); ++t) {
    if (!errors[t].empty()) {
      throw SamplingError("param=" + std::to_string(p.param_min + static_cast<int>(t / samples)) +
                          " sample=" + std::to_string(t % samples) + ": " + errors[t]);
    }
  }
  std::vector<ExperimentRow> rows;
  for (int param = p.param_min; param <= p.param_max; ++param) {
    long offset = static_cast<long>(param - p.param_min) * samples;
    long eligible = 0, counterexamples = 0, nontrivial = 0;
    for (long i = 0; i < samples; ++i) {
      const SampleFlags& f = flags[offset + i];
      eligible += f.eligible;
      counterexamples += f.counterexample;
      nontrivial += f.nontrivial_meet;
    }
    ExperimentRow row;
    row.distribution = tag;
    row.rank = p.ambient_rank;
    row.param = param;
    row.samples = p.samples;
    row.pct_counterexample =
        eligible > 0 ? 100.0 * static_cast<double>(counterexamples) / static_cast<double>(eligible) : 0.0;
    row.pct_nontrivial_meet = 100.0 * static_cast<double>(nontrivial) / static_cast<double>(samples);
    row.seed = p.seed;
    rows.push_back(std::move(row));
  }
  return rows;
}

void validate(const ExperimentParams& p) {
  if (p.samples < 1) throw ContractError("samples must be >= 1");
  if (p.param_min > p.param_max) throw ContractError("empty parameter range");
}

}  // namespace

PairSampler make_sampler(const ExperimentParams& params) {
  if (params.distribution == Distribution::graph_based) {
    int rank = params.ambient_rank;
    int budget = params.max_rejections;
    return [rank, budget](int param, RandomStream& rng) {
      GraphBasedParams gp{rank, param, budget};
      Subgroup h = sample_graph_based(gp, rng).subgroup;
      Subgroup k = sample_graph_based(gp, rng).subgroup;
      return std::make_pair(std::move(h), std::move(k));
    };
  }
  int rank = params.ambient_rank;
  int count = params.generator_count;
  return [rank, count](int param, RandomStream& rng) {
    WordBasedParams wp{rank, count, param};
    Subgroup h = sample_word_based(wp, rng).subgroup;
    Subgroup k = sample_word_based(wp, rng).subgroup;
    return std::make_pair(std::move(h), std::move(k));
  };
}

std::string distribution_tag(const ExperimentParams& params) {
  if (params.distribution == Distribution::graph_based) return "graph";
  return "word-k" + std::to_string(params.generator_count);
}

std::vector<ExperimentRow> run_experiment_serial(const ExperimentParams& params,
                                                 const PairSampler& sampler,
                                                 const std::string& tag) {
  validate(params);
  const long points = params.param_max - params.param_min + 1;
  const long total = points * params.samples;
  std::vector<SampleFlags> flags(total);
  std::vector<std::string> errors(total);
  for (long t = 0; t < total; ++t) {
    int param = params.param_min + static_cast<int>(t / params.samples);
    RandomStream rng(derive_stream_seed(params.seed, static_cast<std::uint64_t>(t)));
    try {
      flags[t] = analyze_sample(sampler, param, rng);
    } catch (const std::exception& e) {
      errors[t] = e.what();
    }
  }
  return reduce_rows(params, tag, flags, errors);
}

std::vector<ExperimentRow> run_experiment_serial(const ExperimentParams& params) {
  return run_experiment_serial(params, make_sampler(params), distribution_tag(params));
}

std::vector<ExperimentRow> run_experiment_parallel(const ExperimentParams& params,
                                                   const PairSampler& sampler,
                                                   const std::string& tag, int jobs) {
  validate(params);
  if (jobs < 1) jobs = 1;
  const long points = params.param_max - params.param_min + 1;
  const long total = points * params.samples;
  std::vector<SampleFlags> flags(total);
  std::vector<std::string> errors(total);

  // Each sample owns the stream (seed, t), and results land in slot t, so the
  // schedule and job count never show up in the output.
#pragma omp parallel for schedule(dynamic, 8) num_threads(jobs)
  for (long t = 0; t < total; ++t) {
    int param = params.param_min + static_cast<int>(t / params.samples);
    RandomStream rng(derive_stream_seed(params.seed, static_cast<std::uint64_t>(t)));
    try {
      flags[t] = analyze_sample(sampler, param, rng);
    } catch (const std::exception& e) {
      errors[t] = e.what();
    }
  }
  return reduce_rows(params, tag, flags, errors);
}

std::vector<ExperimentRow> run_experiment_parallel(const ExperimentParams& params, int jobs) {
  return run_experiment_parallel(params, make_sampler(params), distribution_tag(params), jobs);
}

std::vector<ExperimentRow> run_experiment(const ExperimentParams& params, int jobs) {
  if (jobs <= 1) return run_experiment_serial(params);
  return run_experiment_parallel(params, jobs);
}

std::string to_csv(const std::vector<ExperimentRow>& rows) {
  std::string out = "distribution,rank,param,samples,pct_counterexample,pct_nontrivial_meet,seed\n";
  char pct[64];
  for (const ExperimentRow& r : rows) {
    std::snprintf(pct, sizeof(pct), "%.4f,%.4f", r.pct_counterexample, r.pct_nontrivial_meet);
    out += r.distribution + "," + std::to_string(r.rank) + "," + std::to_string(r.param) + "," +
           std::to_string(r.samples) + "," + pct + "," + std::to_string(r.seed) + "\n";
  }
  return out;
}

}  // namespace stallings
