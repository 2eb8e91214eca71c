#include "gtsprd/distance_extremity.hpp"

#include <stdexcept>
#include <utility>

#include "gtsprd/addressable_heap.hpp"

namespace gtsprd {

template <Scalar T>
std::optional<Solution<T>> distance_solution_from_trace(const CanonicalSide<T>& side, const DistDpTrace<T>& trace,
                                                        T deadline) {
  const std::size_t n = side.size();
  if (!trace.lambda[1]) return std::nullopt;
  Solution<T> sol;
  sol.objective = Objective::Distance;
  sol.value = deadline - *trace.lambda[1];
  for (std::size_t i = 1; i <= n;) {
    std::size_t j = trace.succ[i];
    sol.routes.push_back(make_route(side, i, j - 1, *trace.lambda[i]));
    i = j;
  }
  return sol;
}

namespace {

template <Scalar T>
DistDpTrace<T> empty_trace(std::size_t n, T deadline) {
  if (deadline < T{0}) throw std::invalid_argument("deadline must be nonnegative");
  DistDpTrace<T> t;
  t.lambda.assign(n + 2, std::nullopt);
  t.succ.assign(n + 2, 0);
  t.lambda[n + 1] = deadline;
  t.succ[n + 1] = n + 1;
  return t;
}

}  // namespace

template <Scalar T>
DistanceResult<T> solve_distance_quadratic(const CanonicalSide<T>& side, T deadline) {
  const std::size_t n = side.size();
  DistDpTrace<T> t = empty_trace(n, deadline);
  for (std::size_t i = n; i >= 1; --i) {
    const T threshold = 2 * side.tau(i);
    for (std::size_t j = i + 1; j <= n + 1; ++j) {
      if (!t.lambda[j] || *t.lambda[j] - side.release(j - 1) < threshold) continue;
      T v = *t.lambda[j] - threshold;
      if (!t.lambda[i] || v > *t.lambda[i]) {
        t.lambda[i] = v;
        t.succ[i] = j;
      }
    }
  }
  auto sol = distance_solution_from_trace(side, t, deadline);
  return {std::move(t), std::move(sol)};
}

template <Scalar T>
DistanceResult<T> solve_distance_heap(const CanonicalSide<T>& side, T deadline) {
  const std::size_t n = side.size();
  DistDpTrace<T> t = empty_trace(n, deadline);
  if (n == 0) return {std::move(t), Solution<T>{{}, Objective::Distance, T{0}}};

  MaxHeap<T> latest;  // lambda(j)
  MinHeap<T> slack;   // lambda(j) - r_{j-1}
  latest.reserve(n + 1);
  slack.reserve(n + 1);
  std::vector<HeapHandle> latest_of(n + 2);

  auto admit = [&](std::size_t j) {
    latest_of[j] = latest.insert(*t.lambda[j], j);
    slack.insert(*t.lambda[j] - side.release(j - 1), j);
  };
  admit(n + 1);
  for (std::size_t i = n; i >= 1; --i) {
    const T threshold = 2 * side.tau(i);
    while (!slack.empty() && slack.peek().key < threshold) {
      auto [key, j] = slack.pop();
      latest.remove(latest_of[j]);
    }
    if (latest.empty()) continue;
    const auto& top = latest.peek();
    t.lambda[i] = top.key - threshold;
    t.succ[i] = top.payload;
    if (i >= 2) admit(i);
  }
  auto sol = distance_solution_from_trace(side, t, deadline);
  return {std::move(t), std::move(sol)};
}

#define GTSPRD_INSTANTIATE(T)                                                                          \
  template std::optional<Solution<T>> distance_solution_from_trace<T>(const CanonicalSide<T>&,          \
                                                                      const DistDpTrace<T>&, T);        \
  template DistanceResult<T> solve_distance_quadratic<T>(const CanonicalSide<T>&, T);                  \
  template DistanceResult<T> solve_distance_heap<T>(const CanonicalSide<T>&, T);

GTSPRD_INSTANTIATE(std::int64_t)
GTSPRD_INSTANTIATE(double)

}  // namespace gtsprd
