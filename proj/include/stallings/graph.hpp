#pragma once

#include <array>
#include <optional>
#include <vector>

#include "stallings/partial_injection.hpp"
#include "stallings/word.hpp"

namespace stallings {

// A basepointed graph with edges labelled by the generators x_1..x_r, stored
// as one partial injection per letter: maps(a) sends v to w exactly when an
// a-labelled edge runs v -> w. Because every letter's edge set is a partial
// injection, each vertex has at most one outgoing and one incoming a-edge,
// so every instance is folded (an immersion over the rose) by construction.
//
// Values are immutable after construction; operations return new graphs.
class StallingsGraph {
 public:
  // Takes ownership of the per-letter maps; each must act on the same vertex
  // set. Vertex ids are dense integers [0, n).
  StallingsGraph(int rank, std::vector<PartialInjection> maps, int basepoint = 0);

  static StallingsGraph single_vertex(int rank);
  static StallingsGraph rose(int rank);

  int rank() const { return rank_; }
  int vertex_count() const { return vertex_count_; }
  int basepoint() const { return basepoint_; }
  const PartialInjection& map(int a) const { return maps_[a - 1]; }  // a in [1, rank]
  const std::vector<PartialInjection>& maps() const { return maps_; }

  int edge_count() const { return edge_count_; }
  // Total degree: incoming plus outgoing over all letters; a loop counts 2.
  int degree(int v) const;

  bool connected() const { return connected_; }
  // Core: connected, and no vertex other than the basepoint has degree <= 1.
  // The basepoint itself may be a leaf.
  bool core() const { return core_; }

  // Follows one signed letter from v; -1 if the transition is missing.
  int step(int v, Letter l) const;

  // Follows w letter by letter from `start`; nullopt the first time a
  // transition is missing.
  std::optional<int> trace(int start, const Word& w) const;

  // Membership: w spells a basepoint loop.
  bool contains(const Word& w) const;

  // E - V + 1; the rank of the fundamental group. Requires a connected graph.
  int cycle_rank() const;
  // max(0, E - V), i.e. max(0, cycle_rank - 1).
  int reduced_rank() const;

  // True iff every letter's map is a total bijection of the vertex set, i.e.
  // the graph is a covering of the rose.
  bool is_covering_of_rose() const;

  // Iteratively deletes non-basepoint vertices of degree <= 1; renumbers
  // canonically. Requires a connected graph.
  StallingsGraph trimmed_to_core() const;

  // Induced subgraph on the vertices reachable from v, re-based at v and
  // renumbered canonically (v becomes vertex 0).
  StallingsGraph component_of(int v) const;

  // Canonical vertex numbering: breadth-first from the basepoint, exploring
  // letters in order (out-edge before in-edge). Folded graphs are
  // deterministic automata, so two based graphs are isomorphic exactly when
  // their canonical forms are equal. Requires a connected graph.
  StallingsGraph canonical() const;

  bool operator==(const StallingsGraph&) const = default;

 private:
  int rank_ = 0;
  int vertex_count_ = 0;
  int basepoint_ = 0;
  std::vector<PartialInjection> maps_;
  int edge_count_ = 0;
  bool connected_ = false;
  bool core_ = false;
};

// Accumulates labelled arcs (possibly violating determinism) and folds them
// into a StallingsGraph: identify endpoints of equal-label edges sharing an
// endpoint until none remain, trim non-basepoint leaves, renumber
// canonically. Union-find over vertices with a worklist of fold candidates.
class GraphBuilder {
 public:
  explicit GraphBuilder(int rank, int vertex_count = 1, int basepoint = 0);

  int add_vertex();
  // An a-labelled arc u -> v, a in [1, rank].
  void add_arc(int a, int u, int v);
  // A subdivided loop at `at` spelling w (no-op for the empty word).
  void add_word_loop(const Word& w, int at);
  // A subdivided path from `from` to `to` spelling w; w must be nonempty.
  void add_word_path(const Word& w, int from, int to);

  int basepoint() const { return basepoint_; }
  void set_basepoint(int v) { basepoint_ = v; }

  StallingsGraph fold() &&;

 private:
  int rank_;
  int vertex_count_;
  int basepoint_;
  std::vector<std::array<int, 3>> arcs_;  // (letter, source, target)
};

// Wedge of subdivided loops at the basepoint, one per nonempty generator,
// folded and trimmed. Generators are reduced first. The result satisfies
// pi_1(result, basepoint) = <generators>.
StallingsGraph fold_from_words(int rank, const std::vector<Word>& generators);

// Based isomorphism, decided by comparing canonical forms.
bool isomorphic(const StallingsGraph& a, const StallingsGraph& b);

}  // namespace stallings
