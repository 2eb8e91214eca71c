#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtsprd/instance.hpp"
#include "gtsprd/solution.hpp"

namespace gtsprd {

class TooLargeError : public std::invalid_argument {
 public:
  explicit TooLargeError(const std::string& what) : std::invalid_argument(what) {}
};

inline constexpr std::size_t kOracleMaxCustomers = 14;

template <Scalar T>
struct RouteRequest {
  T min_dispatch{};
  T duration{};
};

template <Scalar T>
struct Schedule {
  T completion{};
  std::vector<T> dispatches;  // same order as the requests
};

/// Serializes routes by earliest allowed dispatch (stable), each leaving as
/// soon as both its release and the previous return allow. This order is
/// optimal for one machine with release times.
template <Scalar T>
Schedule<T> schedule_min_makespan(std::span<const RouteRequest<T>> routes);

template <Scalar T>
struct OracleResult {
  std::optional<T> value;  // empty when infeasible
  std::optional<Solution<T>> witness;
  std::uint64_t partitions_visited = 0;
};

/// Exhaustive optimum over every pair of contiguous partitions of the two
/// release-ordered sides. Route durations use the farthest customer of each
/// block, so sides need not be dominance-reduced.
template <Scalar T>
OracleResult<T> oracle_time(const GeneralInstance<T>& inst);

template <Scalar T>
OracleResult<T> oracle_distance(const GeneralInstance<T>& inst, T deadline);

enum class ViolationKind { Partition, Release, Overlap, Duration, Deadline, Value };

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

/// Checks a solution against the canonical instance: blocks partition each
/// side, dispatches respect releases, routes do not overlap, durations are
/// 2 tau_lo, the deadline (if any) holds and the reported value matches.
template <Scalar T>
std::vector<Violation> validate_solution(const GeneralInstance<T>& inst, const Solution<T>& sol,
                                         std::optional<T> deadline = std::nullopt);

/// Label-level check against the original path: every customer delivered
/// exactly once, on a route of its side that leaves after its release and
/// reaches at least its depot distance.
template <Scalar T>
std::vector<Violation> validate_deliveries(const RawPathInstance& inst, const Solution<T>& sol);

}  // namespace gtsprd
