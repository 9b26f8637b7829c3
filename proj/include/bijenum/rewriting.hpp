#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bijenum/alphabet.hpp"

namespace bijenum {

/// Fixed-width binary block code over a source alphabet. Width is
/// ceil(log2(size)) with a minimum of 1, so every codeword has the same
/// length and decoding is unambiguous by framing alone.
class SubstitutionCode {
 public:
  /// Canonical code: the symbol with digit value v gets the width-bit
  /// binary spelling of v.
  static SubstitutionCode make(AlphabetPtr source);

  /// Explicit table, one codeword per source symbol in alphabet order.
  /// Codewords must all have the forced width, use only 0/1, and be
  /// pairwise distinct.
  SubstitutionCode(AlphabetPtr source, std::vector<std::string> codewords);

  const AlphabetPtr& source() const noexcept { return source_; }
  std::size_t width() const noexcept { return width_; }
  const std::string& codeword(std::size_t digit) const { return codewords_.at(digit); }
  const std::vector<std::string>& codewords() const noexcept { return codewords_; }

  /// Width forced by an alphabet of size k: max(1, ceil(log2(k))).
  static std::size_t width_for(std::size_t alphabet_size);

 private:
  friend SymbolString unrewrite(const SymbolString&, const SubstitutionCode&);

  AlphabetPtr source_;
  std::size_t width_;
  std::vector<std::string> codewords_;
  std::map<std::string, std::uint32_t> decode_;
};

/// Substitution rewriting: each symbol replaced by its codeword, results
/// concatenated. Injective into binary strings; |output| = width * |s|.
SymbolString rewrite(const SymbolString& s, const SubstitutionCode& code);

/// Inverse of rewrite on its image. The input must be a binary string whose
/// length is a multiple of the code width (else FramingError) and whose
/// blocks all decode (else UnmappedCodewordError).
SymbolString unrewrite(const SymbolString& bits, const SubstitutionCode& code);

}  // namespace bijenum
