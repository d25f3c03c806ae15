#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace atomsum {

using i64 = std::int64_t;

/// Thrown when a request exceeds a built-in size cap.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 64-bit product with a 128-bit intermediate; overflow is an error,
/// never silent wraparound.
inline i64 checked_mul(i64 a, i64 b) {
  __int128 p = static_cast<__int128>(a) * static_cast<__int128>(b);
  if (p > std::numeric_limits<i64>::max() || p < std::numeric_limits<i64>::min()) {
    throw std::overflow_error("64-bit overflow in product");
  }
  return static_cast<i64>(p);
}

inline i64 checked_narrow(__int128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min()) {
    throw std::overflow_error("value does not fit in 64 bits");
  }
  return static_cast<i64>(v);
}

}  // namespace atomsum
