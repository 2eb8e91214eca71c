#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gtsprd/distance_extremity.hpp"
#include "gtsprd/instance.hpp"
#include "gtsprd/solution.hpp"
#include "gtsprd/time_general.hpp"

namespace gtsprd {

/// lambda(i, j) for i in 1..n_l+1, j in 1..n_r+1: latest dispatch from
/// which left customers i..n_l and right customers j..n_r can all be served
/// by the deadline. lambda(n_l+1, n_r+1) = D. Stored row-major over
/// (n_l + 2) x (n_r + 2); row 0 and column 0 are unused.
template <Scalar T>
struct DistDp2Trace {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::optional<T>> lambda;
  std::vector<DpStep> succ;  // w is the state index after the route on `side`

  const std::optional<T>& at(std::size_t i, std::size_t j) const { return lambda[i * cols + j]; }
  const DpStep& step(std::size_t i, std::size_t j) const { return succ[i * cols + j]; }
};

template <Scalar T>
struct Distance2Result {
  DistDp2Trace<T> trace;
  std::optional<Solution<T>> solution;

  bool feasible() const { return solution.has_value(); }
};

struct DistanceGeneralStats {
  std::size_t reads_before_write = 0;  // must stay zero
  std::size_t evictions = 0;
};

/// Minimum total distance under deadline D, depot anywhere:
///   L(i,j) = max_{w>i} { lambda(w,j) : lambda(w,j) - r^l_{w-1} >= 2 tau^l_i } - 2 tau^l_i
///   R(i,j) symmetric, lambda(i,j) = max(L, R).
/// Answer D - lambda(1,1). O(n^3) by direct scans.
template <Scalar T>
Distance2Result<T> solve_distance_2d_cubic(const GeneralInstance<T>& inst, T deadline,
                                           DistanceGeneralStats* stats = nullptr);

/// Same recurrence with a paired max/min heap per column for L and per row
/// for R. O(n_l * n_r * log n) with the binary heap.
template <Scalar T>
Distance2Result<T> solve_distance_2d_heap(const GeneralInstance<T>& inst, T deadline,
                                          DistanceGeneralStats* stats = nullptr);

template <Scalar T>
std::optional<Solution<T>> distance_solution_from_trace(const GeneralInstance<T>& inst, const DistDp2Trace<T>& trace,
                                                        T deadline);

}  // namespace gtsprd
