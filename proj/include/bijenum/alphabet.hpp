#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace bijenum {

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// An ordered finite set of distinct symbols. The construction order is
/// fixed and defines the digit values 0..k-1 used everywhere else.
class Alphabet {
 public:
  /// Symbols may be multi-character tokens; they must be non-empty and
  /// pairwise distinct, and there must be at least one.
  explicit Alphabet(std::vector<std::string> symbols);

  static AlphabetPtr make(std::vector<std::string> symbols);

  /// One symbol per character, in the order given, e.g. "01" or "0123456789".
  static AlphabetPtr from_characters(std::string_view characters);

  /// Shared {0,1} and {0..9} instances.
  static const AlphabetPtr& binary();
  static const AlphabetPtr& decimal();

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbol(std::size_t digit) const { return symbols_.at(digit); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  /// Digit value of a symbol, or nullopt if the symbol is not listed.
  std::optional<std::size_t> find(std::string_view symbol) const;

  /// True when every symbol is a single character, so plain text can be
  /// split into symbols without a tokenizer.
  bool single_character() const noexcept { return single_character_; }

  /// Symbols joined, for diagnostics: {0,1} renders as "01".
  std::string display() const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::map<std::string, std::size_t, std::less<>> index_;
  bool single_character_ = true;
};

/// A finite, possibly empty sequence of symbols from one alphabet.
/// Equality is structural: same alphabet, same length, symbolwise equal.
/// Leading zeros (and any other repeated symbols) are significant.
class SymbolString {
 public:
  /// From digit values; every digit must be < alphabet size.
  SymbolString(AlphabetPtr alphabet, std::vector<std::uint32_t> digits);

  static SymbolString empty(AlphabetPtr alphabet);

  /// Maps each listed symbol through the alphabet.
  static SymbolString from_symbols(AlphabetPtr alphabet,
                                   const std::vector<std::string>& symbols);

  /// Splits text character by character; requires a single-character
  /// alphabet. Unknown characters raise InvalidStringError with position.
  static SymbolString parse(AlphabetPtr alphabet, std::string_view text);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::uint32_t>& digits() const noexcept { return digits_; }
  std::size_t length() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  std::uint32_t digit(std::size_t i) const { return digits_.at(i); }

  /// Concatenation of the symbols' text.
  std::string str() const;

  friend bool operator==(const SymbolString& a, const SymbolString& b);
  friend bool operator!=(const SymbolString& a, const SymbolString& b) { return !(a == b); }

 private:
  AlphabetPtr alphabet_;
  std::vector<std::uint32_t> digits_;
};

/// a followed by b; both must be over equal alphabets.
SymbolString concat(const SymbolString& a, const SymbolString& b);

std::ostream& operator<<(std::ostream& os, const SymbolString& s);

}  // namespace bijenum
