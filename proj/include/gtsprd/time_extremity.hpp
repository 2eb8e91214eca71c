#pragma once

#include <cstddef>
#include <vector>

#include "gtsprd/instance.hpp"
#include "gtsprd/solution.hpp"

namespace gtsprd {

// c[i] is the minimum completion time for customers 1..i; the last route
// of that optimum delivers block [pred[i]+1 .. i].
template <Scalar T>
struct TimeDpTrace {
  std::vector<T> c;
  std::vector<std::size_t> pred;
};

template <Scalar T>
struct TimeResult {
  TimeDpTrace<T> trace;
  Solution<T> solution;
};

/// Minimum makespan with the depot at an extremity, evaluating
///   c(i) = min_{0<=j<i} max(c(j), r_i) + 2 tau_{j+1}
/// over every j. O(n^2).
template <Scalar T>
TimeResult<T> solve_time_quadratic(const CanonicalSide<T>& side);

/// Same recurrence in O(n). c is nondecreasing, so the j with c(j) <= r_i
/// form a prefix [0..k] whose best candidate is r_i + 2 tau_{k+1}; the
/// remaining c(j) + 2 tau_{j+1}, k < j < i, sit in a MinQueue. k only moves
/// forward as i grows.
template <Scalar T>
TimeResult<T> solve_time_linear(const CanonicalSide<T>& side);

template <Scalar T>
Solution<T> time_solution_from_trace(const CanonicalSide<T>& side, const TimeDpTrace<T>& trace);

}  // namespace gtsprd
