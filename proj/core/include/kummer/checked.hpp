#pragma once

#include <cstdint>

#include "kummer/error.hpp"

// Overflow-checked 64-bit helpers. Overflow is always an Error, never a wrap.
namespace kummer::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(ErrorCode::kOverflow, "integer overflow in addition");
  return out;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    throw Error(ErrorCode::kOverflow, "integer overflow in subtraction");
  return out;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorCode::kOverflow, "integer overflow in multiplication");
  return out;
}

// Floor division for a positive divisor; rounds toward negative infinity.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a > 0)) ++q;
  return q;
}

}  // namespace kummer::checked
