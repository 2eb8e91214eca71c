#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "gtsprd/errors.hpp"

namespace gtsprd {

/// FIFO queue answering find_min in O(1).
///
/// Two stacks, each slot caching the minimum of everything below it. A
/// dequeue on an empty output stack moves the whole input stack over, so
/// every element is moved at most twice and all operations are amortized
/// O(1). `element_moves()` counts pushes onto either stack.
template <class T, class Compare = std::less<T>>
class MinQueue {
 public:
  MinQueue() = default;
  explicit MinQueue(Compare cmp) : cmp_(std::move(cmp)) {}

  void enqueue(T x) {
    push(in_, std::move(x));
  }

  T dequeue() {
    if (empty()) throw EmptyError("MinQueue::dequeue on empty queue");
    if (out_.empty()) transfer();
    T v = std::move(out_.back().value);
    out_.pop_back();
    return v;
  }

  const T& front() const {
    if (empty()) throw EmptyError("MinQueue::front on empty queue");
    return out_.empty() ? in_.front().value : out_.back().value;
  }

  const T& find_min() const {
    if (empty()) throw EmptyError("MinQueue::find_min on empty queue");
    if (in_.empty()) return out_.back().min;
    if (out_.empty()) return in_.back().min;
    const T& a = out_.back().min;
    const T& b = in_.back().min;
    return cmp_(b, a) ? b : a;
  }

  bool empty() const { return in_.empty() && out_.empty(); }
  std::size_t size() const { return in_.size() + out_.size(); }

  void clear() {
    in_.clear();
    out_.clear();
  }

  std::size_t element_moves() const { return moves_; }

 private:
  struct Slot {
    T value;
    T min;
  };

  void push(std::vector<Slot>& stack, T x) {
    ++moves_;
    if (stack.empty() || cmp_(x, stack.back().min)) {
      T m = x;
      stack.push_back({std::move(x), std::move(m)});
    } else {
      T m = stack.back().min;
      stack.push_back({std::move(x), std::move(m)});
    }
  }

  void transfer() {
    while (!in_.empty()) {
      T v = std::move(in_.back().value);
      in_.pop_back();
      push(out_, std::move(v));
    }
  }

  std::vector<Slot> in_;
  std::vector<Slot> out_;
  std::size_t moves_ = 0;
  [[no_unique_address]] Compare cmp_{};
};

}  // namespace gtsprd
