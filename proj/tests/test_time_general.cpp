#include <doctest.h>

#include <random>

#include "gtsprd/oracle.hpp"
#include "gtsprd/time_extremity.hpp"
#include "gtsprd/time_general.hpp"
#include "support.hpp"

using namespace gtsprd;
using namespace gtsprd::testing;

TEST_CASE("X2 table and routes") {
  auto r = solve_time_2d_minqueue(x2_instance());
  auto b = solve_time_2d_cubic(x2_instance());
  CHECK(r.trace.c == std::vector<I64>{0, 10, 14, 11, 18, 21});
  CHECK(b.trace.c == r.trace.c);
  CHECK(r.solution.value == 21);
  REQUIRE(r.solution.routes.size() == 2);
  CHECK(r.solution.routes[0].side == Side::Left);
  CHECK(r.solution.routes[0].dispatch == 3);
  CHECK(r.solution.routes[1].side == Side::Right);
  CHECK(r.solution.routes[1].hi == 2);
  CHECK(r.solution.routes[1].dispatch == 11);
}

TEST_CASE("one empty side reduces to the extremity solver") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 80)(rng);
    const Side side = k % 2 ? Side::Left : Side::Right;
    auto s = random_side(side, n, rng);
    auto one = solve_time_linear(s);
    auto two = solve_time_2d_minqueue(one_sided(s));
    CHECK(two.solution.value == one.solution.value);
    CHECK(two.solution.routes.size() == one.solution.routes.size());
  }
}

TEST_CASE("queue and cubic agree on full tables") {
  std::mt19937_64 rng(303);
  for (int k = 0; k < 500; ++k) {
    const std::size_t nl = std::uniform_int_distribution<std::size_t>(0, 30)(rng);
    const std::size_t nr = std::uniform_int_distribution<std::size_t>(0, 30)(rng);
    auto g = random_general(nl, nr, rng);
    TimeGeneralStats stats;
    auto fast = solve_time_2d_minqueue(g, &stats);
    auto base = solve_time_2d_cubic(g);
    REQUIRE(fast.trace.c == base.trace.c);
    REQUIRE(fast.trace.pred == base.trace.pred);
    CHECK(stats.cursor_violations == 0);
    CHECK(validate_solution(g, fast.solution).empty());

    // c is monotone along both axes
    for (std::size_t i = 0; i <= nl; ++i) {
      for (std::size_t j = 0; j <= nr; ++j) {
        if (i > 0) CHECK(fast.trace.at(i, j) >= fast.trace.at(i - 1, j));
        if (j > 0) CHECK(fast.trace.at(i, j) >= fast.trace.at(i, j - 1));
      }
    }
  }
}

TEST_CASE("queue work is linear in the table size") {
  std::mt19937_64 rng(12);
  auto g = random_general(300, 300, rng);
  TimeGeneralStats stats;
  solve_time_2d_minqueue(g, &stats);
  // every table cell enqueues into one column queue and one row queue
  CHECK(stats.queue_moves <= 4 * 301 * 301);
}

TEST_CASE("matches the exhaustive oracle") {
  std::mt19937_64 rng(66);
  for (int k = 0; k < 400; ++k) {
    const std::size_t nl = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
    const std::size_t nr = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
    auto g = random_general(nl, nr, rng);
    CHECK(solve_time_2d_minqueue(g).solution.value == oracle_time(g).value);
  }
}
