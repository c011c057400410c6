#include "stallings/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "stallings/errors.hpp"

namespace stallings {

namespace {

// Breadth-first discovery order from `start`, exploring letters in order and
// out-edges before in-edges, restricted to `alive` vertices (empty = all).
// This is the canonical numbering for folded graphs.
std::vector<int> bfs_order(int rank, const std::vector<PartialInjection>& maps,
                           int start, const std::vector<char>& alive) {
  std::vector<int> order;
  const int n = maps.empty() ? 0 : maps[0].size();
  std::vector<char> seen(n, 0);
  order.reserve(n);
  order.push_back(start);
  seen[start] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int a = 0; a < rank; ++a) {
      for (int w : {maps[a].apply(v), maps[a].preimage(v)}) {
        if (w >= 0 && !seen[w] && (alive.empty() || alive[w])) {
          seen[w] = 1;
          order.push_back(w);
        }
      }
    }
  }
  return order;
}

// Rebuilds the graph on the vertices of `order`, numbered by position.
StallingsGraph renumber(int rank, const std::vector<PartialInjection>& maps,
                        const std::vector<int>& order) {
  const int n = maps.empty() ? 0 : maps[0].size();
  std::vector<int> newid(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) newid[order[i]] = static_cast<int>(i);
  std::vector<PartialInjection> out(rank, PartialInjection(static_cast<int>(order.size())));
  for (int a = 0; a < rank; ++a) {
    for (int v : order) {
      int w = maps[a].apply(v);
      if (w >= 0 && newid[w] >= 0) out[a].link(newid[v], newid[w]);
    }
  }
  return StallingsGraph(rank, std::move(out), 0);
}

}  // namespace

StallingsGraph::StallingsGraph(int rank, std::vector<PartialInjection> maps, int basepoint)
    : rank_(rank), basepoint_(basepoint), maps_(std::move(maps)) {
  if (rank_ < 1) throw ContractError("alphabet rank must be >= 1");
  if (static_cast<int>(maps_.size()) != rank_) {
    throw ContractError("expected one partial injection per letter");
  }
  vertex_count_ = maps_[0].size();
  if (vertex_count_ < 1) throw ContractError("graph needs at least one vertex");
  for (const auto& m : maps_) {
    if (m.size() != vertex_count_) {
      throw ContractError("letter maps act on different vertex sets");
    }
    edge_count_ += m.domain_size();
  }
  if (basepoint_ < 0 || basepoint_ >= vertex_count_) {
    throw ContractError("basepoint out of range");
  }
  connected_ = static_cast<int>(bfs_order(rank_, maps_, basepoint_, {}).size()) == vertex_count_;
  core_ = connected_;
  for (int v = 0; core_ && v < vertex_count_; ++v) {
    if (v != basepoint_ && degree(v) <= 1) core_ = false;
  }
}

StallingsGraph StallingsGraph::single_vertex(int rank) {
  return StallingsGraph(rank, std::vector<PartialInjection>(rank, PartialInjection(1)), 0);
}

StallingsGraph StallingsGraph::rose(int rank) {
  std::vector<PartialInjection> maps(rank, PartialInjection(1));
  for (auto& m : maps) m.link(0, 0);
  return StallingsGraph(rank, std::move(maps), 0);
}

int StallingsGraph::degree(int v) const {
  int d = 0;
  for (const auto& m : maps_) d += (m.maps(v) ? 1 : 0) + (m.hits(v) ? 1 : 0);
  return d;
}

int StallingsGraph::step(int v, Letter l) const {
  if (l == 0 || std::abs(l) > rank_) throw AlphabetError("letter out of range: " + std::to_string(l));
  return l > 0 ? maps_[l - 1].apply(v) : maps_[-l - 1].preimage(v);
}

std::optional<int> StallingsGraph::trace(int start, const Word& w) const {
  int v = start;
  for (Letter l : w) {
    v = step(v, l);
    if (v < 0) return std::nullopt;
  }
  return v;
}

bool StallingsGraph::contains(const Word& w) const {
  return trace(basepoint_, w) == std::optional<int>(basepoint_);
}

int StallingsGraph::cycle_rank() const {
  if (!connected_) throw ContractError("cycle rank requires a connected graph");
  return edge_count_ - vertex_count_ + 1;
}

int StallingsGraph::reduced_rank() const { return std::max(0, cycle_rank() - 1); }

bool StallingsGraph::is_covering_of_rose() const {
  return std::all_of(maps_.begin(), maps_.end(),
                     [](const PartialInjection& m) { return m.total(); });
}

StallingsGraph StallingsGraph::trimmed_to_core() const {
  if (!connected_) throw ContractError("trimming requires a connected graph");
  std::vector<char> alive(vertex_count_, 1);
  std::vector<int> deg(vertex_count_);
  for (int v = 0; v < vertex_count_; ++v) deg[v] = degree(v);

  std::vector<int> queue;
  for (int v = 0; v < vertex_count_; ++v) {
    if (v != basepoint_ && deg[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (!alive[v] || v == basepoint_ || deg[v] > 1) continue;
    alive[v] = 0;
    for (int a = 0; a < rank_; ++a) {
      for (int w : {maps_[a].apply(v), maps_[a].preimage(v)}) {
        if (w >= 0 && alive[w]) {
          if (--deg[w] <= 1 && w != basepoint_) queue.push_back(w);
        }
      }
    }
  }
  return renumber(rank_, maps_, bfs_order(rank_, maps_, basepoint_, alive));
}

StallingsGraph StallingsGraph::component_of(int v) const {
  if (v < 0 || v >= vertex_count_) throw ContractError("vertex out of range");
  return renumber(rank_, maps_, bfs_order(rank_, maps_, v, {}));
}

StallingsGraph StallingsGraph::canonical() const {
  if (!connected_) throw ContractError("canonical form requires a connected graph");
  return component_of(basepoint_);
}

bool isomorphic(const StallingsGraph& a, const StallingsGraph& b) {
  if (a.rank() != b.rank() || a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count()) {
    return false;
  }
  return a.canonical() == b.canonical();
}

// ---------------------------------------------------------------------------
// Folding

GraphBuilder::GraphBuilder(int rank, int vertex_count, int basepoint)
    : rank_(rank), vertex_count_(vertex_count), basepoint_(basepoint) {
  if (rank < 1) throw ContractError("alphabet rank must be >= 1");
  if (vertex_count < 1) throw ContractError("graph needs at least one vertex");
}

int GraphBuilder::add_vertex() { return vertex_count_++; }

void GraphBuilder::add_arc(int a, int u, int v) {
  if (a < 1 || a > rank_) throw AlphabetError("letter out of range: " + std::to_string(a));
  arcs_.push_back({a, u, v});
}

void GraphBuilder::add_word_path(const Word& w, int from, int to) {
  if (w.empty()) throw ContractError("empty word cannot span a path");
  int prev = from;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int next = (i + 1 == w.size()) ? to : add_vertex();
    Letter l = w[i];
    if (l > 0) {
      add_arc(l, prev, next);
    } else {
      add_arc(-l, next, prev);
    }
    prev = next;
  }
}

void GraphBuilder::add_word_loop(const Word& w, int at) {
  if (!w.empty()) add_word_path(w, at, at);
}

StallingsGraph GraphBuilder::fold() && {
  const int r = rank_;
  const int n = vertex_count_;

  // Union-find with union by size.
  std::vector<int> parent(n), size(n, 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  // Per-class out/in neighbor slots. Slots may hold stale vertex ids; reads
  // normalize with find(). Invariant: current representatives own the slots
  // of their whole class.
  std::vector<int> out(static_cast<std::size_t>(n) * r, -1);
  std::vector<int> in(static_cast<std::size_t>(n) * r, -1);
  auto out_at = [&](int v, int a) -> int& { return out[static_cast<std::size_t>(v) * r + a]; };
  auto in_at = [&](int v, int a) -> int& { return in[static_cast<std::size_t>(v) * r + a]; };

  std::vector<std::pair<int, int>> pending;
  auto merge = [&](int p, int q) {
    pending.emplace_back(p, q);
    while (!pending.empty()) {
      auto [x, y] = pending.back();
      pending.pop_back();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (size[x] < size[y]) std::swap(x, y);
      parent[y] = x;
      size[x] += size[y];
      // Combining the classes can put two equal-label edges on one vertex;
      // those target pairs are the new fold candidates.
      for (int a = 0; a < r; ++a) {
        if (int t = out_at(y, a); t != -1) {
          if (int& s = out_at(x, a); s == -1) {
            s = t;
          } else {
            pending.emplace_back(s, t);
          }
        }
        if (int t = in_at(y, a); t != -1) {
          if (int& s = in_at(x, a); s == -1) {
            s = t;
          } else {
            pending.emplace_back(s, t);
          }
        }
      }
    }
  };

  for (const auto& [a, u, v] : arcs_) {
    const int aa = a - 1;
    for (;;) {
      int fu = find(u), fv = find(v);
      if (int t = out_at(fu, aa); t != -1) {
        int w = find(t);
        if (w == fv) break;  // edge already present
        merge(w, fv);
        continue;
      }
      if (int t = in_at(fv, aa); t != -1) {
        int x = find(t);
        if (x == fu) break;
        merge(x, fu);
        continue;
      }
      out_at(fu, aa) = fv;
      in_at(fv, aa) = fu;
      break;
    }
  }

  // Quotient graph on the representatives.
  std::vector<int> reps;
  std::vector<int> repid(n, -1);
  for (int v = 0; v < n; ++v) {
    if (find(v) == v) {
      repid[v] = static_cast<int>(reps.size());
      reps.push_back(v);
    }
  }
  std::vector<PartialInjection> maps(r, PartialInjection(static_cast<int>(reps.size())));
  for (int v : reps) {
    for (int a = 0; a < r; ++a) {
      if (int t = out_at(v, a); t != -1) maps[a].link(repid[v], repid[find(t)]);
    }
  }
  StallingsGraph folded(r, std::move(maps), repid[find(basepoint_)]);
  if (!folded.connected()) {
    throw ContractError("folding expects a connected arc set");
  }
  return folded.trimmed_to_core();
}

StallingsGraph fold_from_words(int rank, const std::vector<Word>& generators) {
  GraphBuilder builder(rank);
  for (const Word& g : generators) {
    if (g.max_index() > rank) {
      throw AlphabetError("generator uses letter outside alphabet of rank " +
                          std::to_string(rank));
    }
    builder.add_word_loop(g, builder.basepoint());
  }
  return std::move(builder).fold();
}

}  // namespace stallings
