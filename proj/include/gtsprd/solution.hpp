#pragma once

#include <cstddef>
#include <vector>

#include "gtsprd/instance.hpp"

namespace gtsprd {

enum class Objective { Time, Distance };

const char* to_string(Objective objective);

/// A closed walk from the depot delivering the canonical block [lo..hi] of
/// one side. On a path its duration is twice the depot distance of lo,
/// the farthest customer of the block.
template <Scalar T>
struct Route {
  Side side = Side::Right;
  std::size_t lo = 0;
  std::size_t hi = 0;
  T dispatch{};
  T duration{};
  std::vector<Label> deliveries;  // original labels, dominated riders included

  T completion() const { return dispatch + duration; }
};

// Routes in dispatch order.
template <Scalar T>
struct Solution {
  std::vector<Route<T>> routes;
  Objective objective = Objective::Time;
  T value{};

  T completion() const { return routes.empty() ? T{0} : routes.back().completion(); }
  T total_duration() const {
    T sum{0};
    for (const auto& r : routes) sum += r.duration;
    return sum;
  }
};

// Route over block [lo..hi] with duration 2 * max tau in the block.
template <Scalar T>
Route<T> make_route(const CanonicalSide<T>& side, std::size_t lo, std::size_t hi, T dispatch);

}  // namespace gtsprd
