#include "bijenum/numeration.hpp"

#include <algorithm>
#include <utility>

#include "bijenum/errors.hpp"

namespace bijenum {

Nat shortlex_index(const SymbolString& s) {
  const Nat k = s.alphabet()->size();
  Nat index = 0;
  for (std::uint32_t d : s.digits()) {
    index = index * k + (d + 1);
  }
  return index;
}

SymbolString shortlex_string(Nat n, AlphabetPtr alphabet) {
  if (n < 0) throw Error("shortlex_string requires a non-negative index");
  const Nat k = alphabet->size();
  std::vector<std::uint32_t> digits;
  while (n > 0) {
    --n;
    digits.push_back(static_cast<std::uint32_t>(n % k));
    n /= k;
  }
  std::reverse(digits.begin(), digits.end());
  return SymbolString(std::move(alphabet), std::move(digits));
}

ShortlexEnumerator::ShortlexEnumerator(AlphabetPtr alphabet)
    : alphabet_(std::move(alphabet)) {}

SymbolString ShortlexEnumerator::next() {
  if (!started_) {
    started_ = true;
  } else {
    // Shortlex successor: increment the rightmost digit that has room,
    // zeroing everything to its right; if none has room, the next string
    // is the all-zeros string one symbol longer.
    const std::uint32_t top = static_cast<std::uint32_t>(alphabet_->size()) - 1;
    std::size_t i = digits_.size();
    while (i > 0 && digits_[i - 1] == top) {
      digits_[i - 1] = 0;
      --i;
    }
    if (i == 0) {
      digits_.assign(digits_.size() + 1, 0);
    } else {
      ++digits_[i - 1];
    }
  }
  ++yielded_;
  return SymbolString(alphabet_, digits_);
}

std::vector<SymbolString> enumerate_strings(AlphabetPtr alphabet, std::size_t limit) {
  ShortlexEnumerator stream(std::move(alphabet));
  std::vector<SymbolString> out;
  out.reserve(limit);
  for (std::size_t i = 0; i < limit; ++i) out.push_back(stream.next());
  return out;
}

Int nat_to_int(const Nat& n) {
  if (n < 0) throw Error("nat_to_int requires a non-negative value");
  if (n % 2 == 0) return -(n / 2);
  return (n + 1) / 2;
}

Nat int_to_nat(const Int& z) {
  if (z > 0) return 2 * z - 1;
  return -2 * z;
}

}  // namespace bijenum
