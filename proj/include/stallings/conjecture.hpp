#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stallings/subgroup.hpp"

namespace stallings {

// Ranks, reduced ranks and inequality verdicts for one subgroup pair.
//
//   HNC     rr(H∩K) <= rr(H) rr(K)                      (proved; must hold)
//   SHNC    sum over conjugacy classes  <= rr(H) rr(K)  (proved; must hold)
//   IEHNC   rr(H∨K) rr(H∩K) <= rr(H) rr(K)              (false in general)
//   Guzman  rk(H)=rk(K)=m>=2, rk(H∩K)>=m  =>  rk(H∨K) <= m
struct ConjectureReport {
  int rr_h = 0, rr_k = 0, rr_meet = 0, rr_join = 0;
  int rk_h = 0, rk_k = 0, rk_meet = 0, rk_join = 0;
  std::int64_t iehnc_lhs = 0;  // rr_meet * rr_join
  std::int64_t iehnc_rhs = 0;  // rr_h * rr_k
  bool holds_hnc = true;
  bool holds_shnc = true;
  bool holds_iehnc = true;
  bool guzman_applicable = false;
  bool holds_guzman = true;  // vacuously true when not applicable
  std::int64_t shnc_sum = 0;
};

ConjectureReport analyze_pair(const Subgroup& h, const Subgroup& k);

// key=value lines in a stable order.
std::string format_report(const ConjectureReport& report);

// A builtin pair together with its defining generator lists.
struct ExamplePair {
  Subgroup h;
  Subgroup k;
  std::vector<Word> h_generators;
  std::vector<Word> k_generators;
};

// The parametric IEHNC counterexample family in F of rank l+2:
//   H = < x2 x1^-1, x1 x2 x1^-2, ..., x1^(v-2) x2 x1^-(v-1), x3, ..., x_(l+2) >
//   K = < x1, x2 >
// Yields (rr_h, rr_k, rr_meet, rr_join) = (v+l-2, 1, v-2, l+1), so the
// IEHNC ratio is (v-2)(l+1) / (v+l-2). Requires v >= 3, l >= 1.
ExamplePair example_iehnc(int v, int l);

// The fixed rank-6 pair refuting Guzman's conjecture at m = 5, over
// F(a, b, c, d, x, y) with letters numbered in that order:
//   H = < a, b, x, y^2, y x y^-1 >
//   K = < c, d, y, x^2, x y x^-1 >
ExamplePair example_guzman();

}  // namespace stallings
