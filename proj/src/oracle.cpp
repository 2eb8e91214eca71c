#include "gtsprd/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace gtsprd {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Partition: return "PartitionViolation";
    case ViolationKind::Release: return "ReleaseViolation";
    case ViolationKind::Overlap: return "OverlapViolation";
    case ViolationKind::Duration: return "DurationViolation";
    case ViolationKind::Deadline: return "DeadlineViolation";
    case ViolationKind::Value: return "ValueViolation";
  }
  return "?";
}

template <Scalar T>
Schedule<T> schedule_min_makespan(std::span<const RouteRequest<T>> routes) {
  std::vector<std::size_t> order(routes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return routes[a].min_dispatch < routes[b].min_dispatch; });
  Schedule<T> s;
  s.completion = T{0};
  s.dispatches.assign(routes.size(), T{0});
  for (std::size_t q : order) {
    T start = std::max(s.completion, routes[q].min_dispatch);
    s.dispatches[q] = start;
    s.completion = start + routes[q].duration;
  }
  return s;
}

namespace {

struct Block {
  std::size_t lo;
  std::size_t hi;
};

// Composition of 1..n selected by the n-1 cut bits of `mask`.
std::vector<Block> blocks_of(std::size_t n, std::uint64_t mask) {
  std::vector<Block> blocks;
  std::size_t lo = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (mask >> (i - 1) & 1U) {
      blocks.push_back({lo, i});
      lo = i + 1;
    }
  }
  if (n > 0) blocks.push_back({lo, n});
  return blocks;
}

std::uint64_t composition_count(std::size_t n) { return n == 0 ? 1 : std::uint64_t{1} << (n - 1); }

template <Scalar T>
struct Candidate {
  std::vector<Route<T>> routes;  // unscheduled, left blocks then right blocks
  std::vector<RouteRequest<T>> requests;
};

template <Scalar T>
void add_blocks(Candidate<T>& cand, const CanonicalSide<T>& side, const std::vector<Block>& blocks) {
  for (const auto& b : blocks) {
    Route<T> r = make_route(side, b.lo, b.hi, T{0});
    T latest_release = side.release(b.lo);
    for (std::size_t i = b.lo; i <= b.hi; ++i) latest_release = std::max(latest_release, side.release(i));
    cand.requests.push_back({latest_release, r.duration});
    cand.routes.push_back(std::move(r));
  }
}

// Calls visit(candidate, schedule) for every pair of compositions.
template <Scalar T, class Visit>
std::uint64_t enumerate(const GeneralInstance<T>& inst, Visit visit) {
  const std::size_t nl = inst.left.size();
  const std::size_t nr = inst.right.size();
  if (nl + nr > kOracleMaxCustomers) {
    throw TooLargeError("oracle supports at most " + std::to_string(kOracleMaxCustomers) + " customers, got " +
                        std::to_string(nl + nr));
  }
  std::uint64_t visited = 0;
  for (std::uint64_t ml = 0; ml < composition_count(nl); ++ml) {
    const auto lb = blocks_of(nl, ml);
    for (std::uint64_t mr = 0; mr < composition_count(nr); ++mr) {
      ++visited;
      Candidate<T> cand;
      add_blocks(cand, inst.left, lb);
      add_blocks(cand, inst.right, blocks_of(nr, mr));
      Schedule<T> s = schedule_min_makespan<T>(cand.requests);
      visit(cand, s);
    }
  }
  return visited;
}

template <Scalar T>
Solution<T> realize(Candidate<T> cand, const Schedule<T>& s, Objective objective, T value) {
  for (std::size_t q = 0; q < cand.routes.size(); ++q) cand.routes[q].dispatch = s.dispatches[q];
  std::stable_sort(cand.routes.begin(), cand.routes.end(),
                   [](const Route<T>& a, const Route<T>& b) { return a.dispatch < b.dispatch; });
  Solution<T> sol;
  sol.routes = std::move(cand.routes);
  sol.objective = objective;
  sol.value = value;
  return sol;
}

}  // namespace

template <Scalar T>
OracleResult<T> oracle_time(const GeneralInstance<T>& inst) {
  OracleResult<T> best;
  best.partitions_visited = enumerate(inst, [&](const Candidate<T>& cand, const Schedule<T>& s) {
    if (!best.value || s.completion < *best.value) {
      best.value = s.completion;
      best.witness = realize(cand, s, Objective::Time, s.completion);
    }
  });
  return best;
}

template <Scalar T>
OracleResult<T> oracle_distance(const GeneralInstance<T>& inst, T deadline) {
  if (deadline < T{0}) throw std::invalid_argument("deadline must be nonnegative");
  OracleResult<T> best;
  best.partitions_visited = enumerate(inst, [&](const Candidate<T>& cand, const Schedule<T>& s) {
    if (s.completion > deadline) return;
    T distance{0};
    for (const auto& r : cand.requests) distance += r.duration;
    if (!best.value || distance < *best.value) {
      best.value = distance;
      best.witness = realize(cand, s, Objective::Distance, distance);
    }
  });
  return best;
}

namespace {

template <Scalar T>
std::string str(T x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

template <Scalar T>
std::vector<Violation> validate_solution(const GeneralInstance<T>& inst, const Solution<T>& sol,
                                         std::optional<T> deadline) {
  std::vector<Violation> out;
  auto report = [&out](ViolationKind k, std::string detail) { out.push_back({k, std::move(detail)}); };

  for (Side s : {Side::Left, Side::Right}) {
    const auto& side = inst.side(s);
    std::vector<Block> blocks;
    for (const auto& r : sol.routes) {
      if (r.side == s) blocks.push_back({r.lo, r.hi});
    }
    std::sort(blocks.begin(), blocks.end(), [](Block a, Block b) { return a.lo < b.lo; });
    std::size_t next = 1;
    for (const auto& b : blocks) {
      if (b.lo != next || b.hi < b.lo || b.hi > side.size()) {
        report(ViolationKind::Partition, std::string(to_string(s)) + " block [" + std::to_string(b.lo) + ".." +
                                             std::to_string(b.hi) + "] does not continue at " + std::to_string(next));
        next = b.hi + 1;
        continue;
      }
      next = b.hi + 1;
    }
    if (next != side.size() + 1) {
      report(ViolationKind::Partition, std::string(to_string(s)) + " customers " + std::to_string(next) + ".." +
                                           std::to_string(side.size()) + " are not covered exactly");
    }
  }

  for (std::size_t q = 0; q < sol.routes.size(); ++q) {
    const auto& r = sol.routes[q];
    const auto& side = inst.side(r.side);
    const std::string name = "route " + std::to_string(q + 1);
    if (r.lo < 1 || r.hi > side.size() || r.lo > r.hi) continue;  // already a partition violation
    T latest_release = side.release(r.lo);
    for (std::size_t i = r.lo; i <= r.hi; ++i) latest_release = std::max(latest_release, side.release(i));
    if (r.dispatch < latest_release) {
      report(ViolationKind::Release, name + " leaves at " + str(r.dispatch) + " before release " + str(latest_release));
    }
    if (r.duration != 2 * side.tau(r.lo)) {
      report(ViolationKind::Duration, name + " lasts " + str(r.duration) + ", expected " + str(2 * side.tau(r.lo)));
    }
    if (q > 0 && sol.routes[q - 1].dispatch + sol.routes[q - 1].duration > r.dispatch) {
      report(ViolationKind::Overlap, name + " leaves at " + str(r.dispatch) + " before the previous route returns at " +
                                         str(sol.routes[q - 1].dispatch + sol.routes[q - 1].duration));
    }
  }

  if (deadline && sol.completion() > *deadline) {
    report(ViolationKind::Deadline, "completion " + str(sol.completion()) + " exceeds deadline " + str(*deadline));
  }
  const T expected = sol.objective == Objective::Time ? sol.completion() : sol.total_duration();
  if (sol.value != expected) {
    report(ViolationKind::Value, "reported value " + str(sol.value) + " but routes give " + str(expected));
  }
  return out;
}

template <Scalar T>
std::vector<Violation> validate_deliveries(const RawPathInstance& inst, const Solution<T>& sol) {
  std::vector<Violation> out;
  auto report = [&out](ViolationKind k, std::string detail) { out.push_back({k, std::move(detail)}); };

  const GeneralInstance<T> sides = split_at_depot<T>(inst, false);
  std::map<Label, std::pair<Side, T>> where;  // label -> (side, tau)
  for (Side s : {Side::Left, Side::Right}) {
    const auto& side = sides.side(s);
    for (std::size_t i = 1; i <= side.size(); ++i) where[side.label(i)] = {s, side.tau(i)};
  }
  std::map<Label, T> release;
  for (const auto& v : inst.vertices) release[v.id] = to_scalar<T>(v.release);

  std::map<Label, int> seen;
  for (std::size_t q = 0; q < sol.routes.size(); ++q) {
    const auto& r = sol.routes[q];
    const std::string name = "route " + std::to_string(q + 1);
    for (Label id : r.deliveries) {
      auto it = where.find(id);
      if (it == where.end()) {
        report(ViolationKind::Partition, name + " delivers " + std::to_string(id) + ", which is not a customer");
        continue;
      }
      ++seen[id];
      const auto& [side, tau] = it->second;
      if (side != r.side || 2 * tau > r.duration) {
        report(ViolationKind::Duration, name + " does not reach customer " + std::to_string(id));
      }
      if (r.dispatch < release[id]) {
        report(ViolationKind::Release, name + " leaves before customer " + std::to_string(id) + " is released");
      }
    }
  }
  for (const auto& [id, info] : where) {
    int times = seen.count(id) ? seen[id] : 0;
    if (times != 1) {
      report(ViolationKind::Partition, "customer " + std::to_string(id) + " delivered " + std::to_string(times) + " times");
    }
  }
  return out;
}

#define GTSPRD_INSTANTIATE(T)                                                                                  \
  template Schedule<T> schedule_min_makespan<T>(std::span<const RouteRequest<T>>);                            \
  template OracleResult<T> oracle_time<T>(const GeneralInstance<T>&);                                         \
  template OracleResult<T> oracle_distance<T>(const GeneralInstance<T>&, T);                                  \
  template std::vector<Violation> validate_solution<T>(const GeneralInstance<T>&, const Solution<T>&,          \
                                                       std::optional<T>);                                      \
  template std::vector<Violation> validate_deliveries<T>(const RawPathInstance&, const Solution<T>&);

GTSPRD_INSTANTIATE(std::int64_t)
GTSPRD_INSTANTIATE(double)

}  // namespace gtsprd
