#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gtsprd/instance.hpp"

namespace gtsprd::testing {

using I64 = std::int64_t;

// Depot 0 at an extremity, path 0-3-2-1 with weights 3,3,4.
// Canonical: r = [0, 5, 21], tau = [10, 6, 3].
inline const char* kX1 = R"({
  "vertices": [{"id": 0}, {"id": 1, "release": 0}, {"id": 2, "release": 5}, {"id": 3, "release": 21}],
  "edges": [{"u": 0, "v": 3, "d": 3}, {"u": 3, "v": 2, "d": 3}, {"u": 2, "v": 1, "d": 4}],
  "depot": 0
})";

// Path 1-0-2-3: left customer 1 (r=3, tau=4); right customers 2 (r=6, tau=2)
// and 3 (r=0, tau=5). Canonical right side: (0,5), (6,2).
inline const char* kX2 = R"({
  "vertices": [{"id": 1, "release": 3}, {"id": 0}, {"id": 2, "release": 6}, {"id": 3, "release": 0}],
  "edges": [{"u": 1, "v": 0, "d": 4}, {"u": 0, "v": 2, "d": 2}, {"u": 2, "v": 3, "d": 3}],
  "depot": 0
})";

inline CanonicalSide<I64> x1_side() {
  return CanonicalSide<I64>::from_values(Side::Right, {0, 5, 21}, {10, 6, 3});
}

inline GeneralInstance<I64> x2_instance() {
  GeneralInstance<I64> g;
  g.left = CanonicalSide<I64>::from_values(Side::Left, {3}, {4});
  g.right = CanonicalSide<I64>::from_values(Side::Right, {0, 6}, {5, 2});
  return g;
}

inline GeneralInstance<I64> one_sided(CanonicalSide<I64> side) {
  GeneralInstance<I64> g;
  if (side.side() == Side::Left) {
    g.left = std::move(side);
  } else {
    g.right = std::move(side);
  }
  return g;
}

// Canonical side with occasional zero-weight edges and repeated releases,
// which exercise the tie-breaking paths.
inline CanonicalSide<I64> random_side(Side side, std::size_t n, std::mt19937_64& rng, I64 max_edge = 50,
                                      I64 max_release = 200) {
  const I64 min_edge = std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? 0 : 1;
  return random_canonical_side(side, n, max_edge, max_release, rng, min_edge);
}

inline GeneralInstance<I64> random_general(std::size_t n_left, std::size_t n_right, std::mt19937_64& rng,
                                           I64 max_edge = 50, I64 max_release = 200) {
  GeneralInstance<I64> g;
  g.left = random_side(Side::Left, n_left, rng, max_edge, max_release);
  g.right = random_side(Side::Right, n_right, rng, max_edge, max_release);
  return g;
}

// A deadline between two bounds on the minimum makespan: the farthest round
// trips on each side (a lower bound) and one route per side dispatched after
// the last release (always feasible).
inline I64 random_deadline(const GeneralInstance<I64>& g, std::mt19937_64& rng) {
  I64 latest = 0;
  I64 far = 0;
  for (const auto* s : {&g.left, &g.right}) {
    if (s->empty()) continue;
    latest = std::max(latest, s->release(s->size()));
    far += 2 * s->tau(1);
  }
  return std::uniform_int_distribution<I64>(std::max<I64>(std::max(latest, far) - 5, 0), latest + far + 10)(rng);
}

}  // namespace gtsprd::testing
