#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gtsprd/oracle.hpp"
#include "gtsprd/time_extremity.hpp"
#include "support.hpp"

using namespace gtsprd;
using namespace gtsprd::testing;

TEST_CASE("schedule_min_makespan") {
  std::vector<RouteRequest<I64>> two{{3, 8}, {6, 10}};
  auto s = schedule_min_makespan<I64>(two);
  CHECK(s.completion == 21);
  CHECK(s.dispatches == std::vector<I64>{3, 11});

  std::vector<RouteRequest<I64>> one{{0, 5}};
  CHECK(schedule_min_makespan<I64>(one).completion == 5);
  CHECK(schedule_min_makespan<I64>(std::vector<RouteRequest<I64>>{}).completion == 0);
}

TEST_CASE("release order is optimal for up to six routes") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 300; ++k) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
    std::vector<RouteRequest<I64>> rs(m);
    for (auto& r : rs) r = {std::uniform_int_distribution<I64>(0, 40)(rng), std::uniform_int_distribution<I64>(0, 15)(rng)};
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    I64 best = -1;
    do {
      I64 t = 0;
      for (auto q : perm) t = std::max(t, rs[q].min_dispatch) + rs[q].duration;
      if (best < 0 || t < best) best = t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(schedule_min_makespan<I64>(rs).completion == std::max<I64>(best, 0));
  }
}

TEST_CASE("oracle_time on the worked instances") {
  auto x1 = oracle_time(one_sided(x1_side()));
  CHECK(x1.value == 31);
  CHECK(x1.partitions_visited == 4);
  auto x2 = oracle_time(x2_instance());
  CHECK(x2.value == 21);
  CHECK(x2.partitions_visited == 2);

  auto flat = one_sided(CanonicalSide<I64>::from_values(Side::Right, {0, 0, 0}, {10, 6, 3}));
  CHECK(oracle_time(flat).value == 20);
}

TEST_CASE("oracle_distance on the worked instances") {
  auto g = one_sided(x1_side());
  CHECK(oracle_distance(g, I64{40}).value == 26);
  CHECK(oracle_distance(g, I64{45}).value == 20);
  CHECK_FALSE(oracle_distance(g, I64{20}).value.has_value());
  CHECK(oracle_distance(x2_instance(), I64{22}).value == 18);
  CHECK_FALSE(oracle_distance(x2_instance(), I64{17}).value.has_value());
}

TEST_CASE("oracle refuses large instances") {
  std::mt19937_64 rng(3);
  CHECK_THROWS_AS(oracle_time(random_general(8, 7, rng)), TooLargeError);
}

TEST_CASE("witnesses validate and the enumeration count is exact") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 200; ++k) {
    const std::size_t nl = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
    const std::size_t nr = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
    auto g = random_general(nl, nr, rng);
    auto t = oracle_time(g);
    REQUIRE(t.witness);
    CHECK(validate_solution(g, *t.witness).empty());
    CHECK(t.witness->value == *t.value);
    const std::uint64_t expected = (nl ? 1ULL << (nl - 1) : 1) * (nr ? 1ULL << (nr - 1) : 1);
    CHECK(t.partitions_visited == expected);

    const I64 d = random_deadline(g, rng);
    auto dist = oracle_distance(g, d);
    if (dist.value) {
      REQUIRE(dist.witness);
      CHECK(validate_solution(g, *dist.witness, std::optional<I64>(d)).empty());
    }
  }
}

TEST_CASE("validate_solution reports violations") {
  auto g = one_sided(x1_side());
  auto good = solve_time_linear(x1_side()).solution;
  CHECK(validate_solution(g, good).empty());

  SUBCASE("dispatch before release") {
    Solution<I64> bad = good;
    bad.routes[0].dispatch = 4;  // r_2 = 5
    bad.value = bad.completion();
    auto vs = validate_solution(g, bad);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].kind == ViolationKind::Release);
  }
  SUBCASE("missing customer") {
    Solution<I64> bad = good;
    bad.routes.pop_back();
    bad.value = bad.completion();
    auto vs = validate_solution(g, bad);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].kind == ViolationKind::Partition);
  }
  SUBCASE("overlap, duration, deadline and value") {
    Solution<I64> bad = good;
    bad.routes[1].dispatch = 23;  // first route now ends at 23
    bad.routes[0].duration = 18;
    auto vs = validate_solution(g, bad, std::optional<I64>(10));
    std::vector<ViolationKind> kinds;
    for (const auto& v : vs) kinds.push_back(v.kind);
    CHECK(std::count(kinds.begin(), kinds.end(), ViolationKind::Overlap) == 0);
    CHECK(std::count(kinds.begin(), kinds.end(), ViolationKind::Duration) == 1);
    CHECK(std::count(kinds.begin(), kinds.end(), ViolationKind::Deadline) == 1);
    CHECK(std::count(kinds.begin(), kinds.end(), ViolationKind::Value) == 1);

    Solution<I64> early = good;
    early.routes[1].dispatch = 24;
    early.value = early.completion();
    auto ov = validate_solution(g, early);
    REQUIRE(ov.size() == 1);
    CHECK(ov[0].kind == ViolationKind::Overlap);
  }
}

TEST_CASE("validate_deliveries checks original labels") {
  auto raw = parse_instance(kX2);
  auto g = split_at_depot<I64>(raw);
  auto sol = oracle_time(g).witness.value();
  CHECK(validate_deliveries(raw, sol).empty());
  sol.routes[0].deliveries.push_back(sol.routes[0].deliveries.front());
  CHECK_FALSE(validate_deliveries(raw, sol).empty());
}
