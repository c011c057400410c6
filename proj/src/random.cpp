#include "stallings/random.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "stallings/errors.hpp"

namespace stallings {

std::uint64_t RandomStream::below(std::uint64_t n) {
  if (n == 0) throw ContractError("below(0)");
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master ^ (0x9E3779B97F4A7C15ULL * index);
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

Word sample_reduced_word(int rank, int len, RandomStream& rng) {
  if (rank < 1) throw ContractError("rank must be >= 1");
  if (len < 1) throw ContractError("word length must be >= 1");
  // Letters indexed 0..2r-1: i < r is +(i+1), i >= r is -(i-r+1).
  auto letter_of = [rank](int i) { return i < rank ? i + 1 : -(i - rank + 1); };
  auto index_of = [rank](Letter l) { return l > 0 ? l - 1 : rank - l - 1; };

  std::vector<Letter> letters;
  letters.reserve(len);
  letters.push_back(letter_of(static_cast<int>(rng.below(2 * rank))));
  for (int i = 1; i < len; ++i) {
    int forbidden = index_of(-letters.back());
    int t = static_cast<int>(rng.below(2 * rank - 1));
    if (t >= forbidden) ++t;
    letters.push_back(letter_of(t));
  }
  return Word(std::move(letters));
}

PartialInjectionTable::PartialInjectionTable(int n) : n_(n) {
  if (n < 1) throw ContractError("ground set must be nonempty");
  namespace mp = boost::multiprecision;
  // w_k = C(n,k)^2 k!, exact; normalized cumulative sums in long double.
  std::vector<mp::cpp_int> weights(n + 1);
  mp::cpp_int binom = 1, factorial = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      binom = binom * (n - k + 1) / k;
      factorial *= k;
    }
    weights[k] = binom * binom * factorial;
  }
  mp::cpp_int total = 0;
  for (const auto& w : weights) total += w;
  long double total_ld = total.convert_to<long double>();

  cumulative_.resize(n + 1);
  mp::cpp_int running = 0;
  for (int k = 0; k <= n; ++k) {
    running += weights[k];
    cumulative_[k] = running.convert_to<long double>() / total_ld;
  }
}

int PartialInjectionTable::sample_domain_size(RandomStream& rng) const {
  long double u = static_cast<long double>(rng.unit());
  for (int k = 0; k <= n_; ++k) {
    if (u < cumulative_[k]) return k;
  }
  return n_;  // floating-point tail guard
}

namespace {

// First k entries of a uniformly shuffled [0, n) (partial Fisher-Yates).
std::vector<int> random_prefix(int n, int k, RandomStream& rng) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = 0; i < k; ++i) {
    int j = i + static_cast<int>(rng.below(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  return idx;
}

}  // namespace

PartialInjection sample_partial_injection(const PartialInjectionTable& table,
                                          RandomStream& rng) {
  const int n = table.ground_size();
  int k = table.sample_domain_size(rng);
  std::vector<int> domain = random_prefix(n, k, rng);
  std::sort(domain.begin(), domain.end());
  std::vector<int> image = random_prefix(n, k, rng);  // random order = random bijection
  PartialInjection pi(n);
  for (int i = 0; i < k; ++i) pi.link(domain[i], image[i]);
  return pi;
}

PartialInjection sample_partial_injection(int n, RandomStream& rng) {
  return sample_partial_injection(PartialInjectionTable(n), rng);
}

PartialInjection sample_permutation(int n, RandomStream& rng) {
  std::vector<int> image = random_prefix(n, n, rng);
  PartialInjection pi(n);
  for (int i = 0; i < n; ++i) pi.link(i, image[i]);
  return pi;
}

WordSample sample_word_based(const WordBasedParams& params, RandomStream& rng) {
  if (params.ambient_rank < 2) throw ContractError("word-based sampling needs rank >= 2");
  if (params.generator_count < 1) throw ContractError("generator count must be >= 1");
  if (params.max_len < 2) throw ContractError("max length must be >= 2");
  std::vector<Word> generators;
  generators.reserve(params.generator_count);
  for (int i = 0; i < params.generator_count; ++i) {
    int len = 1 + static_cast<int>(rng.below(params.max_len - 1));
    generators.push_back(sample_reduced_word(params.ambient_rank, len, rng));
  }
  Subgroup subgroup = Subgroup::generated_by(params.ambient_rank, generators);
  return WordSample{std::move(subgroup), std::move(generators)};
}

GraphSample sample_graph_based(const GraphBasedParams& params, RandomStream& rng) {
  if (params.ambient_rank < 2) throw ContractError("graph-based sampling needs rank >= 2");
  if (params.vertex_count < 1) throw ContractError("vertex count must be >= 1");
  if (params.max_rejections < 1) throw ContractError("rejection budget must be >= 1");

  PartialInjectionTable table(params.vertex_count);
  for (int attempt = 1; attempt <= params.max_rejections; ++attempt) {
    std::vector<PartialInjection> maps;
    maps.reserve(params.ambient_rank);
    for (int a = 0; a < params.ambient_rank; ++a) {
      maps.push_back(params.finite_index
                         ? sample_permutation(params.vertex_count, rng)
                         : sample_partial_injection(table, rng));
    }
    StallingsGraph g(params.ambient_rank, std::move(maps), 0);
    // Rejection: discard the draw unless connected and leaf-free away from
    // the basepoint. Partial injections make it folded by construction.
    if (g.core()) return GraphSample{Subgroup(std::move(g)), attempt};
  }
  throw SamplingError("no acceptable graph in " + std::to_string(params.max_rejections) +
                      " attempts (rank " + std::to_string(params.ambient_rank) + ", " +
                      std::to_string(params.vertex_count) + " vertices)");
}

}  // namespace stallings
