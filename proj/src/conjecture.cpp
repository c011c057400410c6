#include "stallings/conjecture.hpp"

#include <string>
#include <utility>
#include <vector>

#include "stallings/errors.hpp"

namespace stallings {

ConjectureReport analyze_pair(const Subgroup& h, const Subgroup& k) {
  Subgroup meet = intersect(h, k);
  Subgroup joined = join(h, k);

  ConjectureReport r;
  r.rk_h = h.rank();
  r.rk_k = k.rank();
  r.rk_meet = meet.rank();
  r.rk_join = joined.rank();
  r.rr_h = h.reduced_rank();
  r.rr_k = k.reduced_rank();
  r.rr_meet = meet.reduced_rank();
  r.rr_join = joined.reduced_rank();
  r.shnc_sum = shnc_left_side(h, k);

  r.iehnc_lhs = static_cast<std::int64_t>(r.rr_meet) * r.rr_join;
  r.iehnc_rhs = static_cast<std::int64_t>(r.rr_h) * r.rr_k;
  r.holds_hnc = r.rr_meet <= r.iehnc_rhs;
  r.holds_shnc = r.shnc_sum <= r.iehnc_rhs;
  r.holds_iehnc = r.iehnc_lhs <= r.iehnc_rhs;
  r.guzman_applicable = r.rk_h == r.rk_k && r.rk_h >= 2 && r.rk_meet >= r.rk_h;
  r.holds_guzman = !r.guzman_applicable || r.rk_join <= r.rk_h;
  return r;
}

std::string format_report(const ConjectureReport& r) {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::string out;
  out += "rr_H=" + std::to_string(r.rr_h) + "\n";
  out += "rr_K=" + std::to_string(r.rr_k) + "\n";
  out += "rr_meet=" + std::to_string(r.rr_meet) + "\n";
  out += "rr_join=" + std::to_string(r.rr_join) + "\n";
  out += "rk_H=" + std::to_string(r.rk_h) + "\n";
  out += "rk_K=" + std::to_string(r.rk_k) + "\n";
  out += "rk_meet=" + std::to_string(r.rk_meet) + "\n";
  out += "rk_join=" + std::to_string(r.rk_join) + "\n";
  out += "iehnc_lhs=" + std::to_string(r.iehnc_lhs) + "\n";
  out += "iehnc_rhs=" + std::to_string(r.iehnc_rhs) + "\n";
  out += "shnc_sum=" + std::to_string(r.shnc_sum) + "\n";
  out += std::string("holds_hnc=") + flag(r.holds_hnc) + "\n";
  out += std::string("holds_shnc=") + flag(r.holds_shnc) + "\n";
  out += std::string("holds_iehnc=") + flag(r.holds_iehnc) + "\n";
  out += std::string("guzman_applicable=") + flag(r.guzman_applicable) + "\n";
  out += std::string("holds_guzman=") + flag(r.holds_guzman) + "\n";
  return out;
}

ExamplePair example_iehnc(int v, int l) {
  if (v < 3) throw ContractError("example_iehnc needs v >= 3");
  if (l < 1) throw ContractError("example_iehnc needs l >= 1");
  const int rank = l + 2;

  std::vector<Word> h_gens;
  for (int i = 0; i <= v - 2; ++i) {
    // x1^i x2 x1^-(i+1)
    std::vector<Letter> letters(i, 1);
    letters.push_back(2);
    letters.insert(letters.end(), i + 1, -1);
    h_gens.push_back(Word(std::move(letters)));
  }
  for (int j = 3; j <= l + 2; ++j) h_gens.push_back(Word{j});
  std::vector<Word> k_gens{Word{1}, Word{2}};

  Subgroup h = Subgroup::generated_by(rank, h_gens);
  Subgroup k = Subgroup::generated_by(rank, k_gens);

  // The family's ranks are fixed; a mismatch would mean a folding bug.
  if (h.reduced_rank() != v + l - 2 || k.reduced_rank() != 1) {
    throw Error("example_iehnc construction produced unexpected ranks");
  }
  return {std::move(h), std::move(k), std::move(h_gens), std::move(k_gens)};
}

ExamplePair example_guzman() {
  // F(a, b, c, d, x, y) with letters numbered 1..6 in that order.
  const int a = 1, b = 2, c = 3, d = 4, x = 5, y = 6;
  std::vector<Word> h_gens{Word{a}, Word{b}, Word{x}, Word{y, y}, Word{y, x, -y}};
  std::vector<Word> k_gens{Word{c}, Word{d}, Word{y}, Word{x, x}, Word{x, y, -x}};
  Subgroup h = Subgroup::generated_by(6, h_gens);
  Subgroup k = Subgroup::generated_by(6, k_gens);
  return {std::move(h), std::move(k), std::move(h_gens), std::move(k_gens)};
}

}  // namespace stallings
