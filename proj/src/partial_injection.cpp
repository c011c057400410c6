#include "stallings/partial_injection.hpp"

#include <string>

#include "stallings/errors.hpp"

namespace stallings {

void PartialInjection::link(int v, int w) {
  if (fwd_[v] >= 0 || bwd_[w] >= 0) {
    throw ContractError("partial injection slot already occupied: " +
                        std::to_string(v) + " -> " + std::to_string(w));
  }
  fwd_[v] = w;
  bwd_[w] = v;
  ++count_;
}

void PartialInjection::unlink(int v) {
  int w = fwd_[v];
  if (w < 0) return;
  fwd_[v] = -1;
  bwd_[w] = -1;
  --count_;
}

}  // namespace stallings
