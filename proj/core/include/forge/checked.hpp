#pragma once

#include <cstdint>

#include "forge/error.hpp"

namespace forge::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::arithmetic_overflow, "64-bit overflow in exponent arithmetic");
  }
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorCode::arithmetic_overflow, "64-bit overflow in exponent arithmetic");
  }
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::arithmetic_overflow, "64-bit overflow in exponent arithmetic");
  }
  return r;
}

}  // namespace forge::checked
