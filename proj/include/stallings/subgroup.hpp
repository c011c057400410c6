#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stallings/graph.hpp"
#include "stallings/word.hpp"

namespace stallings {

// A finitely generated subgroup of the free group of rank ambient_rank(),
// represented by its core Stallings graph. The graph must be connected and
// core (no non-basepoint leaves); membership, rank and index are all read
// off it.
class Subgroup {
 public:
  explicit Subgroup(StallingsGraph graph);

  static Subgroup generated_by(int ambient_rank, const std::vector<Word>& generators);
  static Subgroup whole_group(int ambient_rank);  // the rose
  static Subgroup trivial(int ambient_rank);      // single vertex, no edges

  const StallingsGraph& graph() const { return graph_; }
  int ambient_rank() const { return graph_.rank(); }

  int rank() const { return graph_.cycle_rank(); }
  int reduced_rank() const { return graph_.reduced_rank(); }
  bool is_trivial() const { return graph_.edge_count() == 0; }

  bool contains(const Word& w) const { return graph_.contains(w); }

 private:
  StallingsGraph graph_;
};

// The labelled product of two core graphs: vertices are pairs (v, v') with an
// a-edge (v,v') -> (w,w') exactly when a-edges v->w and v'->w' exist in the
// factors. Only pairs incident to a matched edge are materialized, plus the
// basepoint pair, which is always vertex 0; isolated pairs never contribute
// to any rank. The graph may be disconnected.
struct PullbackGraph {
  StallingsGraph graph;
  std::vector<std::pair<int, int>> labels;  // vertex -> (vertex in H, vertex in K)
};

PullbackGraph pullback(const Subgroup& h, const Subgroup& k);

// H ∩ K: the basepoint component of the pullback, trimmed to core.
Subgroup intersect(const Subgroup& h, const Subgroup& k);

// H ∨ K, the subgroup generated by H ∪ K: wedge the graphs at their
// basepoints and fold.
Subgroup join(const Subgroup& h, const Subgroup& k);

// Sum over all pullback components of max(0, E - V): the total reduced rank
// of the intersections of H with the conjugates of K, one conjugate per
// double coset with nontrivial intersection.
std::int64_t shnc_left_side(const Subgroup& h, const Subgroup& k);

// Index of H in the ambient free group: the vertex count when the graph
// covers the rose, nullopt (infinite) otherwise.
std::optional<std::int64_t> index_in_whole_group(const Subgroup& h);

// Index of `sub` in `sup`, or nullopt if infinite. Every generator of `sub`
// must lie in `sup` (throws NotASubgroupError otherwise). Realized by
// Schreier rewriting of sub's generators over a basis of sup.
std::optional<std::int64_t> relative_index(const Subgroup& sub, const Subgroup& sup);

// A free basis: one word per non-tree edge of a breadth-first spanning tree,
// spelled through tree paths. Returns exactly rank() words.
std::vector<Word> basis(const Subgroup& h);

// w H w^-1: a fresh path spelling w attached to the basepoint, folded and
// trimmed.
Subgroup conjugate(const Subgroup& h, const Word& w);

}  // namespace stallings
