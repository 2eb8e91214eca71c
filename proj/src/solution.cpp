#include "gtsprd/solution.hpp"

#include <algorithm>

namespace gtsprd {

const char* to_string(Objective objective) { return objective == Objective::Time ? "time" : "distance"; }

template <Scalar T>
Route<T> make_route(const CanonicalSide<T>& side, std::size_t lo, std::size_t hi, T dispatch) {
  Route<T> route;
  route.side = side.side();
  route.lo = lo;
  route.hi = hi;
  route.dispatch = dispatch;
  T far = side.tau(lo);
  for (std::size_t i = lo; i <= hi; ++i) {
    far = std::max(far, side.tau(i));
    route.deliveries.push_back(side.label(i));
    auto riders = side.riders(i);
    route.deliveries.insert(route.deliveries.end(), riders.begin(), riders.end());
  }
  route.duration = 2 * far;
  return route;
}

template Route<std::int64_t> make_route(const CanonicalSide<std::int64_t>&, std::size_t, std::size_t, std::int64_t);
template Route<double> make_route(const CanonicalSide<double>&, std::size_t, std::size_t, double);

}  // namespace gtsprd
