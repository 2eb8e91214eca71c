#include "gtsprd/distance_general.hpp"

#include <stdexcept>
#include <utility>

#include "gtsprd/addressable_heap.hpp"

namespace gtsprd {

template <Scalar T>
std::optional<Solution<T>> distance_solution_from_trace(const GeneralInstance<T>& inst, const DistDp2Trace<T>& trace,
                                                        T deadline) {
  if (!trace.at(1, 1)) return std::nullopt;
  const std::size_t nl = inst.left.size();
  const std::size_t nr = inst.right.size();
  Solution<T> sol;
  sol.objective = Objective::Distance;
  sol.value = deadline - *trace.at(1, 1);
  std::size_t i = 1;
  std::size_t j = 1;
  while (i <= nl || j <= nr) {
    const DpStep& s = trace.step(i, j);
    const T dispatch = *trace.at(i, j);
    if (s.side == Side::Left) {
      sol.routes.push_back(make_route(inst.left, i, s.w - 1, dispatch));
      i = s.w;
    } else {
      sol.routes.push_back(make_route(inst.right, j, s.w - 1, dispatch));
      j = s.w;
    }
  }
  return sol;
}

namespace {

template <Scalar T>
struct Candidate {
  T value;
  std::size_t w;
};

template <Scalar T>
DistDp2Trace<T> make_trace(const GeneralInstance<T>& inst, T deadline) {
  if (deadline < T{0}) throw std::invalid_argument("deadline must be nonnegative");
  DistDp2Trace<T> t;
  t.rows = inst.left.size() + 2;
  t.cols = inst.right.size() + 2;
  t.lambda.assign(t.rows * t.cols, std::nullopt);
  t.succ.assign(t.rows * t.cols, DpStep{});
  t.lambda[(t.rows - 1) * t.cols + (t.cols - 1)] = deadline;
  return t;
}

// Left wins ties.
template <Scalar T>
void settle(DistDp2Trace<T>& t, std::size_t i, std::size_t j, const std::optional<Candidate<T>>& left,
            const std::optional<Candidate<T>>& right) {
  const std::size_t at = i * t.cols + j;
  if (left && (!right || left->value >= right->value)) {
    t.lambda[at] = left->value;
    t.succ[at] = {Side::Left, left->w};
  } else if (right) {
    t.lambda[at] = right->value;
    t.succ[at] = {Side::Right, right->w};
  }
}

}  // namespace

template <Scalar T>
Distance2Result<T> solve_distance_2d_cubic(const GeneralInstance<T>& inst, T deadline, DistanceGeneralStats* stats_out) {
  const auto& lf = inst.left;
  const auto& rt = inst.right;
  const std::size_t nl = lf.size();
  const std::size_t nr = rt.size();
  DistDp2Trace<T> t = make_trace(inst, deadline);
  DistanceGeneralStats stats;
  std::vector<bool> written(t.rows * t.cols, false);
  written[(nl + 1) * t.cols + (nr + 1)] = true;
  auto read = [&](std::size_t i, std::size_t j) -> const std::optional<T>& {
    if (!written[i * t.cols + j]) ++stats.reads_before_write;
    return t.lambda[i * t.cols + j];
  };

  for (std::size_t i = nl + 1; i >= 1; --i) {
    for (std::size_t j = nr + 1; j >= 1; --j) {
      if (i == nl + 1 && j == nr + 1) continue;
      std::optional<Candidate<T>> left, right;
      if (i <= nl) {
        const T threshold = 2 * lf.tau(i);
        for (std::size_t w = i + 1; w <= nl + 1; ++w) {
          const auto& lam = read(w, j);
          if (!lam || *lam - lf.release(w - 1) < threshold) continue;
          T v = *lam - threshold;
          if (!left || v > left->value) left = Candidate<T>{v, w};
        }
      }
      if (j <= nr) {
        const T threshold = 2 * rt.tau(j);
        for (std::size_t w = j + 1; w <= nr + 1; ++w) {
          const auto& lam = read(i, w);
          if (!lam || *lam - rt.release(w - 1) < threshold) continue;
          T v = *lam - threshold;
          if (!right || v > right->value) right = Candidate<T>{v, w};
        }
      }
      settle(t, i, j, left, right);
      written[i * t.cols + j] = true;
    }
  }
  if (stats_out) *stats_out = stats;
  auto sol = distance_solution_from_trace(inst, t, deadline);
  return {std::move(t), std::move(sol)};
}

namespace {

// Paired heaps for one axis: `latest` ranks lambda, `slack` ranks
// lambda - r_{w-1} so infeasible entries can be found and evicted.
template <Scalar T>
struct HeapPair {
  MaxHeap<T> latest;
  MinHeap<T> slack;
  std::vector<HeapHandle> latest_of;

  explicit HeapPair(std::size_t slots) : latest_of(slots) {}

  void admit(std::size_t w, T lambda, T release_before) {
    latest_of[w] = latest.insert(lambda, w);
    slack.insert(lambda - release_before, w);
  }

  std::optional<Candidate<T>> best(T threshold, std::size_t& evictions) {
    while (!slack.empty() && slack.peek().key < threshold) {
      auto [key, w] = slack.pop();
      latest.remove(latest_of[w]);
      ++evictions;
    }
    if (latest.empty()) return std::nullopt;
    const auto& top = latest.peek();
    return Candidate<T>{top.key - threshold, top.payload};
  }
};

}  // namespace

template <Scalar T>
Distance2Result<T> solve_distance_2d_heap(const GeneralInstance<T>& inst, T deadline, DistanceGeneralStats* stats_out) {
  const auto& lf = inst.left;
  const auto& rt = inst.right;
  const std::size_t nl = lf.size();
  const std::size_t nr = rt.size();
  DistDp2Trace<T> t = make_trace(inst, deadline);
  DistanceGeneralStats stats;

  // columns[j] holds lambda(w, j) for w > i; thresholds 2 tau^l_i grow as i
  // descends, so evictions are permanent.
  std::vector<HeapPair<T>> columns;
  columns.reserve(nr + 2);
  for (std::size_t j = 0; j <= nr + 1; ++j) columns.emplace_back(nl + 2);

  for (std::size_t i = nl + 1; i >= 1; --i) {
    HeapPair<T> row(nr + 2);  // lambda(i, w) for w > j
    for (std::size_t j = nr + 1; j >= 1; --j) {
      if (i <= nl || j <= nr) {
        std::optional<Candidate<T>> left, right;
        if (i <= nl) left = columns[j].best(2 * lf.tau(i), stats.evictions);
        if (j <= nr) right = row.best(2 * rt.tau(j), stats.evictions);
        settle(t, i, j, left, right);
      }
      const auto& lam = t.lambda[i * t.cols + j];
      if (!lam) continue;
      if (i >= 2) columns[j].admit(i, *lam, lf.release(i - 1));
      if (j >= 2) row.admit(j, *lam, rt.release(j - 1));
    }
  }
  if (stats_out) *stats_out = stats;
  auto sol = distance_solution_from_trace(inst, t, deadline);
  return {std::move(t), std::move(sol)};
}

#define GTSPRD_INSTANTIATE(T)                                                                                     \
  template std::optional<Solution<T>> distance_solution_from_trace<T>(const GeneralInstance<T>&,                   \
                                                                      const DistDp2Trace<T>&, T);                  \
  template Distance2Result<T> solve_distance_2d_cubic<T>(const GeneralInstance<T>&, T, DistanceGeneralStats*);    \
  template Distance2Result<T> solve_distance_2d_heap<T>(const GeneralInstance<T>&, T, DistanceGeneralStats*);

GTSPRD_INSTANTIATE(std::int64_t)
GTSPRD_INSTANTIATE(double)

}  // namespace gtsprd
