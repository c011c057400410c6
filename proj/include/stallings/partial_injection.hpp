#pragma once

#include <vector>

namespace stallings {

// An injective partial self-map of {0, ..., n-1}. Forward and backward maps
// are kept mutually consistent: apply(v) == w exactly when preimage(w) == v.
// One of these per letter encodes the edge set of a Stallings graph.
class PartialInjection {
 public:
  PartialInjection() = default;
  explicit PartialInjection(int n) : fwd_(n, -1), bwd_(n, -1) {}

  int size() const { return static_cast<int>(fwd_.size()); }
  int domain_size() const { return count_; }
  bool total() const { return count_ == size(); }

  int apply(int v) const { return fwd_[v]; }      // -1 if undefined
  int preimage(int w) const { return bwd_[w]; }   // -1 if undefined
  bool maps(int v) const { return fwd_[v] >= 0; }
  bool hits(int w) const { return bwd_[w] >= 0; }

  // Adds v -> w. Throws ContractError if either slot is occupied.
  void link(int v, int w);
  void unlink(int v);

  bool operator==(const PartialInjection&) const = default;

 private:
  std::vector<int> fwd_, bwd_;
  int count_ = 0;
};

}  // namespace stallings
