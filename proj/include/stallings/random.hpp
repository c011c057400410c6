#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "stallings/partial_injection.hpp"
#include "stallings/subgroup.hpp"
#include "stallings/word.hpp"

namespace stallings {

// Seeded deterministic random stream. Bounded draws use rejection, not
// modulo, and avoid std::*_distribution, so identical seeds produce
// identical values on every platform.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, n), n >= 1, without modulo bias.
  std::uint64_t below(std::uint64_t n);

  // Uniform on [0, 1) with 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Stream splitting: task `index` draws from a stream seeded by
// mix(master ^ MULTIPLIER * index), one splitmix64 finalizer round. Identical
// (master, index) pairs give identical streams regardless of thread count.
std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index);

struct WordBasedParams {
  int ambient_rank;     // >= 2
  int generator_count;  // k >= 1
  int max_len;          // n >= 2; words have length in [1, n)
};

struct GraphBasedParams {
  int ambient_rank;             // >= 2
  int vertex_count;             // n >= 1
  int max_rejections = 10'000;  // >= 1
  // Resample every letter until total, i.e. draw uniform permutations. The
  // accepted graph then covers the rose: the finite-index case.
  bool finite_index = false;
};

// Uniform over reduced words of exactly length len: 2r choices for the first
// letter, 2r - 1 (everything but the inverse of the previous letter) after.
Word sample_reduced_word(int rank, int len, RandomStream& rng);

// Cumulative table of the domain-size weights C(n,k)^2 k!, computed with
// exact big integers then normalized into floating point.
class PartialInjectionTable {
 public:
  explicit PartialInjectionTable(int n);

  int ground_size() const { return n_; }
  int sample_domain_size(RandomStream& rng) const;

 private:
  int n_;
  std::vector<long double> cumulative_;
};

// Exactly uniform over all partial injections on n points: domain size k with
// probability proportional to C(n,k)^2 k!, then a uniform k-subset as domain,
// a uniform k-subset as image, and a uniform bijection between them.
PartialInjection sample_partial_injection(const PartialInjectionTable& table,
                                          RandomStream& rng);
PartialInjection sample_partial_injection(int n, RandomStream& rng);

// Uniform permutation of {0..n-1} (Fisher-Yates).
PartialInjection sample_permutation(int n, RandomStream& rng);

struct WordSample {
  Subgroup subgroup;
  std::vector<Word> generators;  // provenance: the tuple that was drawn
};

// k independent words, each with length uniform on {1, ..., n-1} and then
// uniform among reduced words of that length; the subgroup they generate.
WordSample sample_word_based(const WordBasedParams& params, RandomStream& rng);

struct GraphSample {
  Subgroup subgroup;
  int attempts;  // provenance: accepted on this attempt (1-based)
};

// Draws one partial injection per letter on a fixed vertex set and rejects
// until the graph is connected with no non-basepoint leaves. The accepted
// graph is already folded; the basepoint may be a leaf and is kept as is.
// Throws SamplingError when max_rejections draws were all rejected.
GraphSample sample_graph_based(const GraphBasedParams& params, RandomStream& rng);

}  // namespace stallings
