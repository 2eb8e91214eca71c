#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "gtsprd/addressable_heap.hpp"

using namespace gtsprd;

TEST_CASE("min and max peek") {
  MinHeap<int> lo;
  MaxHeap<int> hi;
  for (int k : {5, 2}) {
    lo.insert(k, 0);
    hi.insert(k, 0);
  }
  CHECK(lo.peek().key == 2);
  CHECK(hi.peek().key == 5);
}

TEST_CASE("remove by handle") {
  MinHeap<int> h;
  auto a = h.insert(1, 10);
  h.insert(4, 20);
  auto removed = h.remove(a);
  CHECK(removed.first == 1);
  CHECK(removed.second == 10);
  CHECK(h.peek().key == 4);
  CHECK(h.peek().payload == 20);
  CHECK_THROWS_AS(h.remove(a), DeadHandleError);
  CHECK_FALSE(h.contains(a));
}

TEST_CASE("ties and empty heap") {
  MinHeap<int> h;
  CHECK_THROWS_AS(h.peek(), EmptyError);
  h.insert(3, 7);
  h.insert(3, 2);
  CHECK(h.peek().key == 3);
  CHECK(h.peek().payload == 2);  // smaller payload wins ties
  CHECK(h.contains(h.peek().handle));
}

namespace {

template <class Heap, class Extreme>
void fuzz(std::uint64_t seed, Extreme extreme) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> key(-500, 500);
  std::uniform_int_distribution<int> op(0, 9);
  Heap heap;
  std::multiset<std::pair<int, std::size_t>> ref;
  std::map<std::size_t, HeapHandle> live;  // payload -> handle
  std::size_t next = 0;
  const int ops = 100000;
  for (int k = 0; k < ops; ++k) {
    int o = op(rng);
    if (o < 5 || ref.empty()) {
      int x = key(rng);
      live[next] = heap.insert(x, next);
      ref.insert({x, next});
      ++next;
    } else if (o < 8) {
      // remove a random live entry
      auto it = live.lower_bound(std::uniform_int_distribution<std::size_t>(0, next)(rng));
      if (it == live.end()) it = live.begin();
      auto [kk, pp] = heap.remove(it->second);
      REQUIRE(pp == it->first);
      auto found = ref.find({kk, pp});
      REQUIRE(found != ref.end());
      ref.erase(found);
      live.erase(it);
    } else {
      const auto& top = heap.peek();
      REQUIRE(top.key == extreme(ref));
      REQUIRE(live.at(top.payload) == top.handle);
    }
    REQUIRE(heap.size() == ref.size());
  }
  // O(log n) comparisons per operation.
  CHECK(static_cast<double>(heap.comparisons()) <= 4.0 * ops * std::log2(static_cast<double>(ops)));
}

}  // namespace

TEST_CASE("random min-heap operations match a sorted multiset") {
  fuzz<MinHeap<int>>(3, [](const auto& ref) { return ref.begin()->first; });
}

TEST_CASE("random max-heap operations match a sorted multiset") {
  fuzz<MaxHeap<int>>(4, [](const auto& ref) { return ref.rbegin()->first; });
}
