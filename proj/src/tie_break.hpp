#pragma once

#include <cstddef>
#include <vector>

#include "gtsprd/instance.hpp"

namespace gtsprd::detail {

// first[m] = smallest p with tau(p) == tau(m). Depot distances are
// nonincreasing, so equal values form runs and the release-dispatch term
// r + 2 tau(k+1) is attained first at predecessor first[k+1] - 1.
template <Scalar T>
std::vector<std::size_t> tau_run_starts(const CanonicalSide<T>& side) {
  std::vector<std::size_t> first(side.size() + 1, 0);
  for (std::size_t m = 1; m <= side.size(); ++m) {
    first[m] = (m > 1 && side.tau(m - 1) == side.tau(m)) ? first[m - 1] : m;
  }
  return first;
}

}  // namespace gtsprd::detail
