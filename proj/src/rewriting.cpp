#include "bijenum/rewriting.hpp"

#include <utility>

#include "bijenum/errors.hpp"

namespace bijenum {

std::size_t SubstitutionCode::width_for(std::size_t alphabet_size) {
  std::size_t width = 1;
  while ((std::size_t{1} << width) < alphabet_size) ++width;
  return width;
}

SubstitutionCode SubstitutionCode::make(AlphabetPtr source) {
  const std::size_t k = source->size();
  const std::size_t width = width_for(k);
  std::vector<std::string> codewords;
  codewords.reserve(k);
  for (std::size_t v = 0; v < k; ++v) {
    std::string word(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
      if ((v >> (width - 1 - i)) & 1u) word[i] = '1';
    }
    codewords.push_back(std::move(word));
  }
  return SubstitutionCode(std::move(source), std::move(codewords));
}

SubstitutionCode::SubstitutionCode(AlphabetPtr source, std::vector<std::string> codewords)
    : source_(std::move(source)),
      width_(width_for(source_->size())),
      codewords_(std::move(codewords)) {
  if (codewords_.size() != source_->size()) {
    throw InvalidCodeError("code needs exactly one codeword per source symbol");
  }
  for (std::size_t v = 0; v < codewords_.size(); ++v) {
    const std::string& word = codewords_[v];
    if (word.size() != width_) {
      throw InvalidCodeError("codeword \"" + word + "\" for symbol \"" +
                             source_->symbol(v) + "\" must have width " +
                             std::to_string(width_));
    }
    for (char c : word) {
      if (c != '0' && c != '1') {
        throw InvalidCodeError("codeword \"" + word + "\" contains non-binary character");
      }
    }
    auto [it, inserted] = decode_.emplace(word, static_cast<std::uint32_t>(v));
    if (!inserted) {
      throw InvalidCodeError("duplicate codeword \"" + word + "\"");
    }
  }
}

SymbolString rewrite(const SymbolString& s, const SubstitutionCode& code) {
  if (s.alphabet() != code.source() && !(*s.alphabet() == *code.source())) {
    throw InvalidStringError("string over alphabet \"" + s.alphabet()->display() +
                             "\" does not match code source \"" +
                             code.source()->display() + "\"");
  }
  std::vector<std::uint32_t> bits;
  bits.reserve(s.length() * code.width());
  for (std::uint32_t d : s.digits()) {
    for (char c : code.codeword(d)) {
      bits.push_back(c == '1' ? 1u : 0u);
    }
  }
  return SymbolString(Alphabet::binary(), std::move(bits));
}

SymbolString unrewrite(const SymbolString& bits, const SubstitutionCode& code) {
  if (bits.alphabet() != Alphabet::binary() && !(*bits.alphabet() == *Alphabet::binary())) {
    throw InvalidStringError("unrewrite input must be a binary string");
  }
  const std::size_t width = code.width();
  if (bits.length() % width != 0) {
    throw FramingError("length " + std::to_string(bits.length()) +
                       " is not a multiple of code width " + std::to_string(width));
  }
  std::vector<std::uint32_t> digits;
  digits.reserve(bits.length() / width);
  for (std::size_t start = 0; start < bits.length(); start += width) {
    std::string block(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
      if (bits.digit(start + i)) block[i] = '1';
    }
    auto it = code.decode_.find(block);
    if (it == code.decode_.end()) {
      throw UnmappedCodewordError("block \"" + block + "\" at position " +
                                  std::to_string(start) + " maps to no symbol");
    }
    digits.push_back(it->second);
  }
  return SymbolString(code.source(), std::move(digits));
}

}  // namespace bijenum
