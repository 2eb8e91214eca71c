#include <doctest.h>

#include <random>

#include "gtsprd/oracle.hpp"
#include "gtsprd/time_extremity.hpp"
#include "support.hpp"

using namespace gtsprd;
using namespace gtsprd::testing;

TEST_CASE("X1 prefix values and routes") {
  auto fast = solve_time_linear(x1_side());
  auto base = solve_time_quadratic(x1_side());
  CHECK(fast.trace.c == std::vector<I64>{0, 20, 25, 31});
  CHECK(base.trace.c == fast.trace.c);
  CHECK(fast.solution.value == 31);
  REQUIRE(fast.solution.routes.size() == 2);
  CHECK(fast.solution.routes[0].lo == 1);
  CHECK(fast.solution.routes[0].hi == 2);
  CHECK(fast.solution.routes[0].dispatch == 5);
  CHECK(fast.solution.routes[0].duration == 20);
  CHECK(fast.solution.routes[1].lo == 3);
  CHECK(fast.solution.routes[1].dispatch == 25);
  CHECK(fast.solution.routes[1].duration == 6);
}

TEST_CASE("single customer and empty side") {
  auto one = CanonicalSide<I64>::from_values(Side::Right, {7}, {4});
  CHECK(solve_time_linear(one).solution.value == 15);
  CHECK(solve_time_quadratic(one).solution.value == 15);

  CanonicalSide<I64> none(Side::Right);
  auto r = solve_time_linear(none);
  CHECK(r.solution.value == 0);
  CHECK(r.solution.routes.empty());
}

TEST_CASE("all released at zero: one route") {
  auto s = CanonicalSide<I64>::from_values(Side::Right, {0, 0, 0}, {10, 6, 3});
  auto r = solve_time_linear(s);
  CHECK(r.solution.value == 20);
  CHECK(r.solution.routes.size() == 1);
}

TEST_CASE("linear and quadratic agree on full tables") {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 200)(rng);
    auto s = random_side(Side::Right, n, rng);
    auto fast = solve_time_linear(s);
    auto base = solve_time_quadratic(s);
    REQUIRE(fast.trace.c == base.trace.c);
    REQUIRE(fast.trace.pred == base.trace.pred);
    CHECK(validate_solution(one_sided(s), fast.solution).empty());
    CHECK(fast.solution.value == fast.trace.c.back());

    for (std::size_t i = 1; i <= n; ++i) {
      // monotone, and never below the release + round trip lower bound
      CHECK(fast.trace.c[i] >= fast.trace.c[i - 1]);
      CHECK(fast.trace.c[i] >= s.release(i) + 2 * s.tau(i));
    }
  }
}

TEST_CASE("double arithmetic agrees with the quadratic baseline") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 60)(rng);
    std::vector<double> r(n), tau(n);
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      acc += u(rng) * 10;
      r[i] = acc;
    }
    double t = 0;
    for (std::size_t i = n; i-- > 0;) {
      t += 0.01 + u(rng) * 5;
      tau[i] = t;
    }
    auto s = CanonicalSide<double>::from_values(Side::Right, r, tau);
    auto fast = solve_time_linear(s);
    auto base = solve_time_quadratic(s);
    CHECK(fast.trace.c == base.trace.c);
    CHECK(fast.trace.pred == base.trace.pred);
  }
}

TEST_CASE("matches the exhaustive oracle") {
  std::mt19937_64 rng(55);
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
    auto s = random_side(Side::Right, n, rng);
    CHECK(solve_time_linear(s).solution.value == oracle_time(one_sided(s)).value);
  }
}
