#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <stdexcept>

namespace gtsprd {

// Vertex identifier as written in instance documents.
using Label = std::int64_t;

// Solvers run on exact integers when every input is integral and on
// doubles otherwise. Comparisons are always exact.
template <class T>
concept Scalar = std::same_as<T, std::int64_t> || std::same_as<T, double>;

// Largest magnitude an integral document value may have (exactly representable as double).
inline constexpr double kMaxExactInteger = 9007199254740992.0;

inline bool is_integral_value(double x) {
  return std::isfinite(x) && std::floor(x) == x && std::fabs(x) <= kMaxExactInteger;
}

template <Scalar T>
T to_scalar(double x) {
  if constexpr (std::same_as<T, std::int64_t>) {
    if (!is_integral_value(x)) {
      throw std::invalid_argument("value is not an exact integer");
    }
    return static_cast<std::int64_t>(x);
  } else {
    return x;
  }
}

}  // namespace gtsprd
