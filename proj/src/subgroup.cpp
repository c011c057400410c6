#include "stallings/subgroup.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

#include "stallings/errors.hpp"

namespace stallings {

namespace {

void require_same_rank(const Subgroup& h, const Subgroup& k) {
  if (h.ambient_rank() != k.ambient_rank()) {
    throw RankMismatchError("ambient ranks differ: " + std::to_string(h.ambient_rank()) +
                            " vs " + std::to_string(k.ambient_rank()));
  }
}

}  // namespace

Subgroup::Subgroup(StallingsGraph graph) : graph_(std::move(graph)) {
  if (!graph_.connected()) throw ContractError("subgroup graph must be connected");
  if (!graph_.core()) throw ContractError("subgroup graph must be core");
}

Subgroup Subgroup::generated_by(int ambient_rank, const std::vector<Word>& generators) {
  return Subgroup(fold_from_words(ambient_rank, generators));
}

Subgroup Subgroup::whole_group(int ambient_rank) {
  return Subgroup(StallingsGraph::rose(ambient_rank));
}

Subgroup Subgroup::trivial(int ambient_rank) {
  return Subgroup(StallingsGraph::single_vertex(ambient_rank));
}

PullbackGraph pullback(const Subgroup& h, const Subgroup& k) {
  require_same_rank(h, k);
  const StallingsGraph& hg = h.graph();
  const StallingsGraph& kg = k.graph();
  const int rank = hg.rank();
  const std::int64_t stride = kg.vertex_count();

  std::unordered_map<std::int64_t, int> ids;
  std::vector<std::pair<int, int>> labels;
  auto vertex = [&](int u, int x) {
    auto [it, fresh] = ids.try_emplace(static_cast<std::int64_t>(u) * stride + x,
                                       static_cast<int>(labels.size()));
    if (fresh) labels.emplace_back(u, x);
    return it->second;
  };
  vertex(hg.basepoint(), kg.basepoint());  // always materialized, as vertex 0

  // First pass discovers the non-isolated pairs, second pass adds the edges.
  for (int a = 1; a <= rank; ++a) {
    for (int u = 0; u < hg.vertex_count(); ++u) {
      int w = hg.map(a).apply(u);
      if (w < 0) continue;
      for (int x = 0; x < kg.vertex_count(); ++x) {
        int y = kg.map(a).apply(x);
        if (y < 0) continue;
        vertex(u, x);
        vertex(w, y);
      }
    }
  }
  std::vector<PartialInjection> maps(rank, PartialInjection(static_cast<int>(labels.size())));
  for (int a = 1; a <= rank; ++a) {
    for (int u = 0; u < hg.vertex_count(); ++u) {
      int w = hg.map(a).apply(u);
      if (w < 0) continue;
      for (int x = 0; x < kg.vertex_count(); ++x) {
        int y = kg.map(a).apply(x);
        if (y < 0) continue;
        maps[a - 1].link(vertex(u, x), vertex(w, y));
      }
    }
  }
  return PullbackGraph{StallingsGraph(rank, std::move(maps), 0), std::move(labels)};
}

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  PullbackGraph pb = pullback(h, k);
  return Subgroup(pb.graph.component_of(pb.graph.basepoint()).trimmed_to_core());
}

Subgroup join(const Subgroup& h, const Subgroup& k) {
  require_same_rank(h, k);
  const StallingsGraph& hg = h.graph();
  const StallingsGraph& kg = k.graph();
  GraphBuilder builder(hg.rank(), hg.vertex_count(), hg.basepoint());
  for (int a = 1; a <= hg.rank(); ++a) {
    for (int u = 0; u < hg.vertex_count(); ++u) {
      if (int w = hg.map(a).apply(u); w >= 0) builder.add_arc(a, u, w);
    }
  }
  // Wedge: k's basepoint is identified with h's, other vertices are fresh.
  std::vector<int> image(kg.vertex_count(), -1);
  image[kg.basepoint()] = hg.basepoint();
  for (int v = 0; v < kg.vertex_count(); ++v) {
    if (image[v] < 0) image[v] = builder.add_vertex();
  }
  for (int a = 1; a <= kg.rank(); ++a) {
    for (int u = 0; u < kg.vertex_count(); ++u) {
      if (int w = kg.map(a).apply(u); w >= 0) builder.add_arc(a, image[u], image[w]);
    }
  }
  return Subgroup(std::move(builder).fold());
}

std::int64_t shnc_left_side(const Subgroup& h, const Subgroup& k) {
  require_same_rank(h, k);
  const StallingsGraph& pg = pullback(h, k).graph;
  const int n = pg.vertex_count();

  // Component sums of max(0, E - V); trees and unicyclic tails cancel out,
  // so no per-component trimming is needed.
  std::vector<int> comp(n, -1);
  std::int64_t total = 0;
  std::vector<int> stack;
  for (int v0 = 0; v0 < n; ++v0) {
    if (comp[v0] >= 0) continue;
    std::int64_t vertices = 0, edges = 0;
    comp[v0] = v0;
    stack.push_back(v0);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++vertices;
      for (int a = 1; a <= pg.rank(); ++a) {
        if (pg.map(a).maps(v)) ++edges;
        for (int w : {pg.map(a).apply(v), pg.map(a).preimage(v)}) {
          if (w >= 0 && comp[w] < 0) {
            comp[w] = v0;
            stack.push_back(w);
          }
        }
      }
    }
    total += std::max<std::int64_t>(0, edges - vertices);
  }
  return total;
}

std::optional<std::int64_t> index_in_whole_group(const Subgroup& h) {
  if (h.graph().is_covering_of_rose()) return h.graph().vertex_count();
  return std::nullopt;
}

std::vector<Word> basis(const Subgroup& h) {
  const StallingsGraph& g = h.graph();
  const int n = g.vertex_count();

  // Breadth-first spanning tree; path_to[v] spells basepoint -> v through it.
  // A tree edge is recorded by its (letter, source) pair, which identifies it
  // uniquely in a folded graph.
  std::vector<Word> path_to(n);
  std::vector<char> seen(n, 0);
  std::vector<char> tree(static_cast<std::size_t>(n) * g.rank(), 0);
  std::vector<int> queue{g.basepoint()};
  seen[g.basepoint()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int a = 1; a <= g.rank(); ++a) {
      if (int w = g.map(a).apply(v); w >= 0 && !seen[w]) {
        seen[w] = 1;
        tree[static_cast<std::size_t>(v) * g.rank() + (a - 1)] = 1;
        path_to[w] = path_to[v] * Word{a};
        queue.push_back(w);
      }
      if (int w = g.map(a).preimage(v); w >= 0 && !seen[w]) {
        seen[w] = 1;
        tree[static_cast<std::size_t>(w) * g.rank() + (a - 1)] = 1;
        path_to[w] = path_to[v] * Word{-a};
        queue.push_back(w);
      }
    }
  }

  std::vector<Word> out;
  for (int v = 0; v < n; ++v) {
    for (int a = 1; a <= g.rank(); ++a) {
      int w = g.map(a).apply(v);
      if (w < 0 || tree[static_cast<std::size_t>(v) * g.rank() + (a - 1)]) continue;
      out.push_back(path_to[v] * Word{a} * path_to[w].inverse());
    }
  }
  return out;
}

std::optional<std::int64_t> relative_index(const Subgroup& sub, const Subgroup& sup) {
  require_same_rank(sub, sup);
  std::vector<Word> sub_basis = basis(sub);
  for (const Word& g : sub_basis) {
    if (!sup.contains(g)) {
      throw NotASubgroupError("generator outside the claimed supergroup: " + g.str());
    }
  }

  const int m = sup.rank();
  if (m == 0) return 1;  // both trivial

  // Schreier rewriting on sup's graph: walking a word crosses some sequence
  // of non-tree edges, and that sequence spells the word over sup's basis.
  const StallingsGraph& g = sup.graph();
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> edge_index(static_cast<std::size_t>(g.vertex_count()) * g.rank(), 0);
  std::vector<int> queue{g.basepoint()};
  seen[g.basepoint()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int a = 1; a <= g.rank(); ++a) {
      if (int w = g.map(a).apply(v); w >= 0 && !seen[w]) {
        seen[w] = 1;
        edge_index[static_cast<std::size_t>(v) * g.rank() + (a - 1)] = -1;  // tree edge
        queue.push_back(w);
      }
      if (int w = g.map(a).preimage(v); w >= 0 && !seen[w]) {
        seen[w] = 1;
        edge_index[static_cast<std::size_t>(w) * g.rank() + (a - 1)] = -1;
        queue.push_back(w);
      }
    }
  }
  int next = 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int a = 1; a <= g.rank(); ++a) {
      std::size_t slot = static_cast<std::size_t>(v) * g.rank() + (a - 1);
      if (g.map(a).maps(v) && edge_index[slot] == 0) edge_index[slot] = next++;
    }
  }

  std::vector<Word> rewritten;
  for (const Word& w : sub_basis) {
    std::vector<Letter> spelled;
    int v = g.basepoint();
    for (Letter l : w) {
      int a = l > 0 ? l : -l;
      int src = l > 0 ? v : g.step(v, l);
      int idx = edge_index[static_cast<std::size_t>(src) * g.rank() + (a - 1)];
      if (idx > 0) spelled.push_back(l > 0 ? idx : -idx);
      v = g.step(v, l);
    }
    rewritten.push_back(Word(std::move(spelled)));
  }
  return index_in_whole_group(Subgroup::generated_by(m, rewritten));
}

Subgroup conjugate(const Subgroup& h, const Word& w) {
  if (w.empty()) return Subgroup(h.graph().canonical());
  const StallingsGraph& g = h.graph();
  GraphBuilder builder(g.rank(), g.vertex_count(), g.basepoint());
  for (int a = 1; a <= g.rank(); ++a) {
    for (int u = 0; u < g.vertex_count(); ++u) {
      if (int v = g.map(a).apply(u); v >= 0) builder.add_arc(a, u, v);
    }
  }
  if (w.max_index() > g.rank()) {
    throw AlphabetError("conjugator uses letter outside alphabet of rank " +
                        std::to_string(g.rank()));
  }
  int fresh = builder.add_vertex();
  builder.add_word_path(w, fresh, g.basepoint());
  builder.set_basepoint(fresh);
  return Subgroup(std::move(builder).fold());
}

}  // namespace stallings
