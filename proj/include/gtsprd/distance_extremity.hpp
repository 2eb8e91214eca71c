#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gtsprd/instance.hpp"
#include "gtsprd/solution.hpp"

namespace gtsprd {

// lambda[i], i in 1..n+1, is the latest dispatch from which customers
// i..n can all be served by the deadline; lambda[n+1] = D. An empty value
// means no feasible continuation exists. The route starting at i delivers
// [i .. succ[i]-1]. Index 0 is unused.
template <Scalar T>
struct DistDpTrace {
  std::vector<std::optional<T>> lambda;
  std::vector<std::size_t> succ;
};

// `solution` is empty when the deadline cannot be met.
template <Scalar T>
struct DistanceResult {
  DistDpTrace<T> trace;
  std::optional<Solution<T>> solution;

  bool feasible() const { return solution.has_value(); }
};

/// Minimum total distance under deadline D, depot at an extremity:
///   lambda(i) = max_{j>i} { lambda(j) - 2 tau_i : lambda(j) - r_{j-1} >= 2 tau_i }
/// scanning every j. The answer is D - lambda(1). O(n^2).
template <Scalar T>
DistanceResult<T> solve_distance_quadratic(const CanonicalSide<T>& side, T deadline);

/// Same recurrence with a max-heap over lambda(j) and a min-heap over
/// lambda(j) - r_{j-1}, paired by handles. The feasibility threshold 2 tau_i
/// only grows as i descends, so an entry evicted once never returns.
/// O(n log n) with the binary heap.
template <Scalar T>
DistanceResult<T> solve_distance_heap(const CanonicalSide<T>& side, T deadline);

// Routes packed against the deadline: route i leaves at lambda(i).
template <Scalar T>
std::optional<Solution<T>> distance_solution_from_trace(const CanonicalSide<T>& side, const DistDpTrace<T>& trace,
                                                        T deadline);

}  // namespace gtsprd
