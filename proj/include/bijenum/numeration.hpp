#pragma once

#include <vector>

#include "bijenum/alphabet.hpp"
#include "bijenum/bignum.hpp"

namespace bijenum {

// Bijective base-k numeration: the shortlex enumeration of all strings over a
// k-symbol alphabet, with the empty string at position 0. Unlike positional
// base-k, this is a true bijection — strings with leading zeros get their own
// positions. Works for any k >= 1 (k = 1 degenerates to unary).

/// Position of s in the shortlex enumeration of its alphabet.
/// Equals sum of (digit_i + 1) * k^(m-i) over digits 1..m.
Nat shortlex_index(const SymbolString& s);

/// Inverse of shortlex_index: the n-th string over the alphabet,
/// extracted by repeated (n-1) divmod k.
SymbolString shortlex_string(Nat n, AlphabetPtr alphabet);

/// Single-consumer stream of the shortlex enumeration, starting at the
/// empty string. Each next() advances by the shortlex successor rule.
class ShortlexEnumerator {
 public:
  explicit ShortlexEnumerator(AlphabetPtr alphabet);

  /// The next string in shortlex order.
  SymbolString next();

  /// Number of strings yielded so far.
  const Nat& yielded() const noexcept { return yielded_; }

 private:
  AlphabetPtr alphabet_;
  std::vector<std::uint32_t> digits_;
  bool started_ = false;
  Nat yielded_ = 0;
};

/// First `limit` strings of the enumeration, in order.
std::vector<SymbolString> enumerate_strings(AlphabetPtr alphabet, std::size_t limit);

// Zigzag bijection between Nat and Int: 0, +1, -1, +2, -2, ...

/// even n -> -n/2, odd n -> (n+1)/2.
Int nat_to_int(const Nat& n);

/// Exact inverse of nat_to_int.
Nat int_to_nat(const Int& z);

}  // namespace bijenum
