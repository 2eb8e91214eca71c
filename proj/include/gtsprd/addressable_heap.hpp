#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "gtsprd/errors.hpp"

namespace gtsprd {

struct HeapHandle {
  std::size_t id = std::numeric_limits<std::size_t>::max();
  friend bool operator==(HeapHandle, HeapHandle) = default;
};

template <class Key, class Payload>
struct HeapEntry {
  Key key;
  Payload payload;
  HeapHandle handle;
};

// Orders entries by key, breaking ties by the smaller payload.
struct MinKeyOrder {
  template <class E>
  bool operator()(const E& a, const E& b) const {
    if (a.key != b.key) return a.key < b.key;
    return a.payload < b.payload;
  }
};

struct MaxKeyOrder {
  template <class E>
  bool operator()(const E& a, const E& b) const {
    if (a.key != b.key) return a.key > b.key;
    return a.payload < b.payload;
  }
};

/// Binary heap whose entries can be removed through the handle returned by
/// insert. `Before(a, b)` is true when `a` belongs closer to the top.
///
/// Handles are never reused, so a removed handle stays detectably dead.
template <class Key, class Payload = std::size_t, class Before = MinKeyOrder>
class AddressableHeap {
 public:
  using Entry = HeapEntry<Key, Payload>;

  HeapHandle insert(Key key, Payload payload) {
    HeapHandle h{pos_.size()};
    pos_.push_back(heap_.size());
    heap_.push_back({std::move(key), std::move(payload), h});
    sift_up(heap_.size() - 1);
    return h;
  }

  std::pair<Key, Payload> remove(HeapHandle h) {
    std::size_t at = slot_of(h);
    Entry e = std::move(heap_[at]);
    pos_[h.id] = kDead;
    std::size_t last = heap_.size() - 1;
    if (at != last) {
      heap_[at] = std::move(heap_[last]);
      pos_[heap_[at].handle.id] = at;
      heap_.pop_back();
      if (at > 0 && before(heap_[at], heap_[(at - 1) / 2])) {
        sift_up(at);
      } else {
        sift_down(at);
      }
    } else {
      heap_.pop_back();
    }
    return {std::move(e.key), std::move(e.payload)};
  }

  const Entry& peek() const {
    if (heap_.empty()) throw EmptyError("AddressableHeap::peek on empty heap");
    return heap_.front();
  }

  std::pair<Key, Payload> pop() { return remove(peek().handle); }

  bool contains(HeapHandle h) const { return h.id < pos_.size() && pos_[h.id] != kDead; }
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  std::uint64_t comparisons() const { return comparisons_; }

  void reserve(std::size_t n) {
    heap_.reserve(n);
    pos_.reserve(n);
  }

 private:
  static constexpr std::size_t kDead = std::numeric_limits<std::size_t>::max();

  std::size_t slot_of(HeapHandle h) const {
    if (!contains(h)) throw DeadHandleError("AddressableHeap: handle is not live");
    return pos_[h.id];
  }

  bool before(const Entry& a, const Entry& b) {
    ++comparisons_;
    return Before{}(a, b);
  }

  void place(std::size_t at, Entry e) {
    pos_[e.handle.id] = at;
    heap_[at] = std::move(e);
  }

  void sift_up(std::size_t at) {
    Entry e = std::move(heap_[at]);
    while (at > 0) {
      std::size_t parent = (at - 1) / 2;
      if (!before(e, heap_[parent])) break;
      place(at, std::move(heap_[parent]));
      at = parent;
    }
    place(at, std::move(e));
  }

  void sift_down(std::size_t at) {
    Entry e = std::move(heap_[at]);
    const std::size_t n = heap_.size();
    for (;;) {
      std::size_t child = 2 * at + 1;
      if (child >= n) break;
      if (child + 1 < n && before(heap_[child + 1], heap_[child])) ++child;
      if (!before(heap_[child], e)) break;
      place(at, std::move(heap_[child]));
      at = child;
    }
    place(at, std::move(e));
  }

  std::vector<Entry> heap_;
  std::vector<std::size_t> pos_;
  std::uint64_t comparisons_ = 0;
};

template <class Key, class Payload = std::size_t>
using MinHeap = AddressableHeap<Key, Payload, MinKeyOrder>;

template <class Key, class Payload = std::size_t>
using MaxHeap = AddressableHeap<Key, Payload, MaxKeyOrder>;

}  // namespace gtsprd
