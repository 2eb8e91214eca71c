#include "gtsprd/time_general.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "gtsprd/min_queue.hpp"
#include "tie_break.hpp"

namespace gtsprd {

template <Scalar T>
Solution<T> time_solution_from_trace(const GeneralInstance<T>& inst, const TimeDp2Trace<T>& trace) {
  Solution<T> sol;
  sol.objective = Objective::Time;
  std::size_t i = inst.left.size();
  std::size_t j = inst.right.size();
  sol.value = trace.at(i, j);
  while (i > 0 || j > 0) {
    const DpStep& s = trace.step(i, j);
    if (s.side == Side::Left) {
      sol.routes.push_back(make_route(inst.left, s.w + 1, i, std::max(trace.at(s.w, j), inst.left.release(i))));
      i = s.w;
    } else {
      sol.routes.push_back(make_route(inst.right, s.w + 1, j, std::max(trace.at(i, s.w), inst.right.release(j))));
      j = s.w;
    }
  }
  std::reverse(sol.routes.begin(), sol.routes.end());
  return sol;
}

namespace {

template <Scalar T>
struct Candidate {
  T value;
  std::size_t w;
};

template <Scalar T>
TimeDp2Trace<T> make_trace(const GeneralInstance<T>& inst) {
  TimeDp2Trace<T> t;
  t.rows = inst.left.size() + 1;
  t.cols = inst.right.size() + 1;
  t.c.assign(t.rows * t.cols, T{0});
  t.pred.assign(t.rows * t.cols, DpStep{});
  return t;
}

// Left wins ties.
template <Scalar T>
void settle(TimeDp2Trace<T>& t, std::size_t i, std::size_t j, const std::optional<Candidate<T>>& left,
            const std::optional<Candidate<T>>& right) {
  const std::size_t at = i * t.cols + j;
  if (left && (!right || left->value <= right->value)) {
    t.c[at] = left->value;
    t.pred[at] = {Side::Left, left->w};
  } else if (right) {
    t.c[at] = right->value;
    t.pred[at] = {Side::Right, right->w};
  }
}

}  // namespace

template <Scalar T>
Time2Result<T> solve_time_2d_cubic(const GeneralInstance<T>& inst) {
  const auto& lf = inst.left;
  const auto& rt = inst.right;
  TimeDp2Trace<T> t = make_trace(inst);
  auto c = [&t](std::size_t i, std::size_t j) { return t.c[i * t.cols + j]; };

  for (std::size_t i = 0; i < t.rows; ++i) {
    for (std::size_t j = 0; j < t.cols; ++j) {
      if (i == 0 && j == 0) continue;
      std::optional<Candidate<T>> left, right;
      for (std::size_t w = 0; w < i; ++w) {
        T v = std::max(c(w, j), lf.release(i)) + 2 * lf.tau(w + 1);
        if (!left || v < left->value) left = Candidate<T>{v, w};
      }
      for (std::size_t w = 0; w < j; ++w) {
        T v = std::max(c(i, w), rt.release(j)) + 2 * rt.tau(w + 1);
        if (!right || v < right->value) right = Candidate<T>{v, w};
      }
      settle(t, i, j, left, right);
    }
  }
  Solution<T> sol = time_solution_from_trace(inst, t);
  return {std::move(t), std::move(sol)};
}

namespace {

// One axis of the queue-based scheme: the candidates w for extending a
// side's prefix while the other side's prefix is held fixed.
template <Scalar T>
struct AxisState {
  MinQueue<std::pair<T, std::size_t>> queue;  // (c + 2 tau_{w+1}, w) for cursor < w < current index
  std::ptrdiff_t cursor = -1;                 // largest w with c <= release, or -1 when none
};

// c_along(w) reads c at prefix w on the scanned side. Returns the best
// candidate for extending to index `idx` of `side`.
template <Scalar T, class CAlong>
Candidate<T> extend(AxisState<T>& axis, const CanonicalSide<T>& side, const std::vector<std::size_t>& run_start,
                    std::size_t idx, CAlong c_along, TimeGeneralStats& stats) {
  const T rel = side.release(idx);
  while (static_cast<std::size_t>(axis.cursor + 1) < idx && c_along(static_cast<std::size_t>(axis.cursor + 1)) <= rel) {
    ++axis.cursor;
    axis.queue.dequeue();
  }
  if (axis.cursor >= 0 && c_along(static_cast<std::size_t>(axis.cursor)) > rel) ++stats.cursor_violations;

  std::optional<Candidate<T>> best;
  if (axis.cursor >= 0) {
    auto k = static_cast<std::size_t>(axis.cursor);
    best = Candidate<T>{rel + 2 * side.tau(k + 1), run_start[k + 1] - 1};
  }
  // With no cursor the queue holds every w < idx, so it is nonempty.
  if (!axis.queue.empty() && (!best || axis.queue.find_min().first < best->value)) {
    const auto& [v, w] = axis.queue.find_min();
    best = Candidate<T>{v, w};
  }
  return *best;
}

}  // namespace

template <Scalar T>
Time2Result<T> solve_time_2d_minqueue(const GeneralInstance<T>& inst, TimeGeneralStats* stats_out) {
  const auto& lf = inst.left;
  const auto& rt = inst.right;
  const std::size_t nl = lf.size();
  const std::size_t nr = rt.size();
  TimeDp2Trace<T> t = make_trace(inst);
  TimeGeneralStats stats;
  const auto left_runs = detail::tau_run_starts(lf);
  const auto right_runs = detail::tau_run_starts(rt);

  std::vector<AxisState<T>> columns(nr + 1);  // L(., j) for each fixed j
  for (std::size_t i = 0; i <= nl; ++i) {
    AxisState<T> row;  // R(i, .); only row i is ever read while i is current
    for (std::size_t j = 0; j <= nr; ++j) {
      if (i > 0 || j > 0) {
        std::optional<Candidate<T>> left, right;
        if (i > 0) {
          left = extend(columns[j], lf, left_runs, i, [&](std::size_t w) { return t.c[w * t.cols + j]; }, stats);
        }
        if (j > 0) {
          right = extend(row, rt, right_runs, j, [&](std::size_t w) { return t.c[i * t.cols + w]; }, stats);
        }
        settle(t, i, j, left, right);
      }
      const T cij = t.c[i * t.cols + j];
      if (i < nl) columns[j].queue.enqueue({cij + 2 * lf.tau(i + 1), i});
      if (j < nr) row.queue.enqueue({cij + 2 * rt.tau(j + 1), j});
    }
    stats.queue_moves += row.queue.element_moves();
  }
  for (const auto& col : columns) stats.queue_moves += col.queue.element_moves();
  if (stats_out) *stats_out = stats;

  Solution<T> sol = time_solution_from_trace(inst, t);
  return {std::move(t), std::move(sol)};
}

#define GTSPRD_INSTANTIATE(T)                                                                            \
  template Solution<T> time_solution_from_trace<T>(const GeneralInstance<T>&, const TimeDp2Trace<T>&);   \
  template Time2Result<T> solve_time_2d_cubic<T>(const GeneralInstance<T>&);                             \
  template Time2Result<T> solve_time_2d_minqueue<T>(const GeneralInstance<T>&, TimeGeneralStats*);

GTSPRD_INSTANTIATE(std::int64_t)
GTSPRD_INSTANTIATE(double)

}  // namespace gtsprd
