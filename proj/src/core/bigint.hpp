#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace permdiam {

using BigInt = boost::multiprecision::cpp_int;

// floor(log2(x)) for x >= 1.
inline std::uint64_t floor_log2(const BigInt& x) {
  return static_cast<std::uint64_t>(boost::multiprecision::msb(x));
}

inline bool fits_u64(const BigInt& x) {
  return x >= 0 && x <= BigInt(UINT64_MAX);
}

inline std::uint64_t to_u64(const BigInt& x) {
  return static_cast<std::uint64_t>(x);
}

/// log2 as a double, safe for values beyond double range.
inline double log2_big(const BigInt& v) {
  if (v <= 1) return 0.0;
  std::uint64_t b = floor_log2(v);
  if (b <= 52) return std::log2(static_cast<double>(v));
  BigInt shifted = v >> (b - 52);
  return static_cast<double>(b - 52) + std::log2(static_cast<double>(shifted));
}

inline BigInt pow_big(const BigInt& base, std::uint64_t e) {
  BigInt r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace permdiam
