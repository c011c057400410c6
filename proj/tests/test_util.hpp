#pragma once

// Test-only oracles: exhaustive enumerations and a chi-square statistic.
// These stay independent of the library paths they are used to check.

#include <map>
#include <set>
#include <vector>

#include "stallings/word.hpp"

namespace stallings::testing {

// All reduced words of length <= max_len (including the empty word), by
// direct construction: never append the inverse of the last letter.
inline std::vector<Word> enumerate_reduced_words(int rank, int max_len) {
  std::vector<Word> out{Word{}};
  std::vector<std::vector<Letter>> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : frontier) {
      for (int a = 1; a <= rank; ++a) {
        for (Letter l : {a, -a}) {
          if (!w.empty() && w.back() == -l) continue;
          auto ext = w;
          ext.push_back(l);
          out.push_back(Word(ext));
          next.push_back(std::move(ext));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// All partial injections on {0..n-1} as forward vectors (-1 = undefined),
// by assigning each point in turn to "unmapped" or an unused image.
inline std::vector<std::vector<int>> enumerate_partial_injections(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> fwd(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.push_back(fwd);
      return;
    }
    self(self, v + 1);  // v unmapped
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      fwd[v] = w;
      used[w] = true;
      self(self, v + 1);
      fwd[v] = -1;
      used[w] = false;
    }
  };
  rec(rec, 0);
  return out;
}

// Chi-square statistic of observed counts against the uniform distribution.
inline double chi_square_uniform(const std::vector<long>& counts, long draws) {
  double expected = static_cast<double>(draws) / static_cast<double>(counts.size());
  double stat = 0;
  for (long c : counts) {
    double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return stat;
}

// Elements of <gens> reachable as products of at most max_factors generators
// or inverse generators, restricted to reduced length <= max_len.
inline std::set<Word> product_closure(const std::vector<Word>& gens, int max_factors,
                                      std::size_t max_len) {
  std::vector<Word> factors;
  for (const Word& g : gens) {
    factors.push_back(g);
    factors.push_back(g.inverse());
  }
  std::set<Word> out{Word{}};
  std::set<Word> frontier{Word{}};
  for (int step = 0; step < max_factors; ++step) {
    std::set<Word> next;
    for (const Word& w : frontier) {
      for (const Word& f : factors) {
        Word p = w * f;
        if (!out.count(p)) next.insert(p);
      }
    }
    for (const Word& w : next) out.insert(w);
    frontier = std::move(next);
  }
  std::set<Word> capped;
  for (const Word& w : out) {
    if (w.size() <= max_len) capped.insert(w);
  }
  return capped;
}

}  // namespace stallings::testing
