#pragma once

#include <cstddef>
#include <vector>

#include "gtsprd/instance.hpp"
#include "gtsprd/solution.hpp"

namespace gtsprd {

// The last route of the optimum for state (i, j): block [w+1 .. i] on the
// left when side == Left (moving to state (w, j)), or [w+1 .. j] on the right.
struct DpStep {
  Side side = Side::Left;
  std::size_t w = 0;
  friend bool operator==(const DpStep&, const DpStep&) = default;
};

/// c(i, j): minimum completion time for left customers 1..i and right
/// customers 1..j, stored row-major over (n_l + 1) x (n_r + 1).
template <Scalar T>
struct TimeDp2Trace {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> c;
  std::vector<DpStep> pred;

  T at(std::size_t i, std::size_t j) const { return c[i * cols + j]; }
  const DpStep& step(std::size_t i, std::size_t j) const { return pred[i * cols + j]; }
};

template <Scalar T>
struct Time2Result {
  TimeDp2Trace<T> trace;
  Solution<T> solution;
};

/// Minimum makespan, depot anywhere. Each state extends either a left or a
/// right prefix by one route:
///   L(i,j) = min_{w<i} max(c(w,j), r^l_i) + 2 tau^l_{w+1}
///   R(i,j) = min_{w<j} max(c(i,w), r^r_j) + 2 tau^r_{w+1}
/// evaluated by direct scans. O(n^3).
template <Scalar T>
Time2Result<T> solve_time_2d_cubic(const GeneralInstance<T>& inst);

/// Counters gathered by the queue-based solver.
struct TimeGeneralStats {
  std::size_t queue_moves = 0;
  // States where a cursor's last prefix member had c > release; stays zero
  // as long as c is monotone along each axis.
  std::size_t cursor_violations = 0;
};

/// Same recurrence in O(n_l * n_r): one MinQueue and one release cursor per
/// column for L, and per row for R, so every state is amortized O(1).
template <Scalar T>
Time2Result<T> solve_time_2d_minqueue(const GeneralInstance<T>& inst, TimeGeneralStats* stats = nullptr);

template <Scalar T>
Solution<T> time_solution_from_trace(const GeneralInstance<T>& inst, const TimeDp2Trace<T>& trace);

}  // namespace gtsprd
