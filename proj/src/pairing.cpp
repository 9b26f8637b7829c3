#include "bijenum/pairing.hpp"

#include "bijenum/errors.hpp"
#include "bijenum/numeration.hpp"

namespace bijenum {

Nat pair(const Nat& x, const Nat& y) {
  if (x < 0 || y < 0) throw Error("pair requires non-negative components");
  const Nat s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<Nat, Nat> unpair(const Nat& z) {
  if (z < 0) throw Error("unpair requires a non-negative value");
  // Anti-diagonal index w is the largest integer with w(w+1)/2 <= z.
  const Nat w = (isqrt(8 * z + 1) - 1) / 2;
  const Nat t = w * (w + 1) / 2;
  const Nat y = z - t;
  const Nat x = w - y;
  if (pair(x, y) != z) {
    throw Error("unpair verification failed for " + z.str());
  }
  return {x, y};
}

Nat pair_int(const Int& x, const Int& y) {
  return pair(int_to_nat(x), int_to_nat(y));
}

std::pair<Int, Int> unpair_int(const Nat& z) {
  auto [a, b] = unpair(z);
  return {nat_to_int(a), nat_to_int(b)};
}

}  // namespace bijenum
