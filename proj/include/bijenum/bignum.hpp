#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bijenum {

// Exact unbounded integers. Nat is non-negative by contract; every operation
// taking a Nat rejects negative values rather than truncating.
using Nat = boost::multiprecision::cpp_int;
using Int = boost::multiprecision::cpp_int;

/// Floor of the square root, exact at any magnitude.
inline Nat isqrt(const Nat& n) { return boost::multiprecision::sqrt(n); }

}  // namespace bijenum
