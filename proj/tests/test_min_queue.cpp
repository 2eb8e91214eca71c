#include <doctest.h>

#include <algorithm>
#include <deque>
#include <random>

#include "gtsprd/min_queue.hpp"

using gtsprd::EmptyError;
using gtsprd::MinQueue;

TEST_CASE("find_min after enqueues") {
  MinQueue<int> q;
  q.enqueue(5);
  q.enqueue(3);
  q.enqueue(7);
  CHECK(q.find_min() == 3);
  CHECK(q.size() == 3);
}

TEST_CASE("empty queue throws") {
  MinQueue<int> q;
  CHECK_THROWS_AS(q.find_min(), EmptyError);
  CHECK_THROWS_AS(q.dequeue(), EmptyError);
}

TEST_CASE("dequeue is FIFO and updates the minimum") {
  SUBCASE("front was not the minimum") {
    MinQueue<int> q;
    q.enqueue(5);
    q.enqueue(3);
    CHECK(q.dequeue() == 5);
    CHECK(q.find_min() == 3);
  }
  SUBCASE("minimum leaves") {
    MinQueue<int> q;
    q.enqueue(3);
    q.enqueue(5);
    CHECK(q.dequeue() == 3);
    CHECK(q.find_min() == 5);
  }
}

TEST_CASE("singleton and duplicate minima") {
  MinQueue<int> q;
  q.enqueue(4);
  CHECK(q.find_min() == 4);
  q.dequeue();
  for (int x : {9, 2, 2}) q.enqueue(x);
  CHECK(q.find_min() == 2);
  q.dequeue();
  q.dequeue();
  CHECK(q.find_min() == 2);
}

TEST_CASE("random enqueues match a scan") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> val(-1000, 1000);
  MinQueue<int> q;
  int naive = 1 << 30;
  for (int k = 0; k < 100000; ++k) {
    int x = val(rng);
    q.enqueue(x);
    naive = std::min(naive, x);
    REQUIRE(q.find_min() == naive);
  }
}

TEST_CASE("random interleavings match a reference deque, with linear element moves") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> val(0, 50);
  std::uniform_int_distribution<int> op(0, 9);
  MinQueue<int> q;
  std::deque<int> ref;
  const int ops = 100000;
  for (int k = 0; k < ops; ++k) {
    int o = op(rng);
    if (o < 5 || ref.empty()) {
      int x = val(rng);
      q.enqueue(x);
      ref.push_back(x);
    } else if (o < 8) {
      REQUIRE(q.dequeue() == ref.front());
      ref.pop_front();
    } else {
      REQUIRE(q.find_min() == *std::min_element(ref.begin(), ref.end()));
    }
    REQUIRE(q.size() == ref.size());
  }
  // Each element is pushed once on arrival and at most once on transfer.
  CHECK(q.element_moves() <= 2 * static_cast<std::size_t>(ops));
}
