#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclo3 {

/// Arbitrary-precision signed integer used for every exact quantity that can
/// outgrow 64 bits (group-ring coefficients, cyclotomic integers, eigenmatrix
/// products).
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline bool fits_int64(const BigInt& v) {
  return v >= BigInt(INT64_MIN) && v <= BigInt(INT64_MAX);
}

}  // namespace cyclo3
