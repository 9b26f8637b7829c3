#pragma once

#include <utility>

#include "bijenum/bignum.hpp"

namespace bijenum {

// Cantor pairing: the quadratic bijection Nat x Nat -> Nat that enumerates
// pairs along anti-diagonals (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...

/// (x+y)(x+y+1)/2 + y.
Nat pair(const Nat& x, const Nat& y);

/// Exact inverse of pair, via integer square root of the triangular index.
/// The result is re-verified by forward evaluation before being returned.
std::pair<Nat, Nat> unpair(const Nat& z);

/// Pairing lifted to signed values through the zigzag bijection;
/// bijective Int x Int -> Nat.
Nat pair_int(const Int& x, const Int& y);

/// Inverse of pair_int.
std::pair<Int, Int> unpair_int(const Nat& z);

}  // namespace bijenum
