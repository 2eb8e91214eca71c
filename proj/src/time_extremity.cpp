#include "gtsprd/time_extremity.hpp"

#include <algorithm>
#include <utility>

#include "gtsprd/min_queue.hpp"
#include "tie_break.hpp"

namespace gtsprd {

template <Scalar T>
Solution<T> time_solution_from_trace(const CanonicalSide<T>& side, const TimeDpTrace<T>& trace) {
  Solution<T> sol;
  sol.objective = Objective::Time;
  std::size_t i = side.size();
  sol.value = trace.c[i];
  while (i > 0) {
    std::size_t j = trace.pred[i];
    sol.routes.push_back(make_route(side, j + 1, i, std::max(trace.c[j], side.release(i))));
    i = j;
  }
  std::reverse(sol.routes.begin(), sol.routes.end());
  return sol;
}

template <Scalar T>
TimeResult<T> solve_time_quadratic(const CanonicalSide<T>& side) {
  const std::size_t n = side.size();
  TimeDpTrace<T> t;
  t.c.assign(n + 1, T{0});
  t.pred.assign(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    T best = std::max(t.c[0], side.release(i)) + 2 * side.tau(1);
    std::size_t arg = 0;
    for (std::size_t j = 1; j < i; ++j) {
      T v = std::max(t.c[j], side.release(i)) + 2 * side.tau(j + 1);
      if (v < best) {
        best = v;
        arg = j;
      }
    }
    t.c[i] = best;
    t.pred[i] = arg;
  }
  Solution<T> sol = time_solution_from_trace(side, t);
  return {std::move(t), std::move(sol)};
}

template <Scalar T>
TimeResult<T> solve_time_linear(const CanonicalSide<T>& side) {
  const std::size_t n = side.size();
  TimeDpTrace<T> t;
  t.c.assign(n + 1, T{0});
  t.pred.assign(n + 1, 0);
  const auto run_start = detail::tau_run_starts(side);

  // Holds (c(j) + 2 tau_{j+1}, j) for k < j < i. The pair order resolves
  // ties towards the smaller j.
  MinQueue<std::pair<T, std::size_t>> queue;
  std::size_t k = 0;  // c(0) = 0 <= r_i, so k never needs a sentinel
  for (std::size_t i = 1; i <= n; ++i) {
    // j = i-1 becomes a candidate; j = 0 is always inside the release prefix.
    if (i >= 2) queue.enqueue({t.c[i - 1] + 2 * side.tau(i), i - 1});
    while (k + 1 < i && t.c[k + 1] <= side.release(i)) {
      ++k;
      queue.dequeue();
    }
    T best = side.release(i) + 2 * side.tau(k + 1);
    std::size_t arg = run_start[k + 1] - 1;
    if (!queue.empty() && queue.find_min().first < best) {
      std::tie(best, arg) = queue.find_min();
    }
    t.c[i] = best;
    t.pred[i] = arg;
  }
  Solution<T> sol = time_solution_from_trace(side, t);
  return {std::move(t), std::move(sol)};
}

#define GTSPRD_INSTANTIATE(T)                                                                   \
  template Solution<T> time_solution_from_trace<T>(const CanonicalSide<T>&, const TimeDpTrace<T>&); \
  template TimeResult<T> solve_time_quadratic<T>(const CanonicalSide<T>&);                      \
  template TimeResult<T> solve_time_linear<T>(const CanonicalSide<T>&);

GTSPRD_INSTANTIATE(std::int64_t)
GTSPRD_INSTANTIATE(double)

}  // namespace gtsprd
