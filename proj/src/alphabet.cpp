#include "bijenum/alphabet.hpp"

#include <utility>

#include "bijenum/errors.hpp"

namespace bijenum {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw InvalidAlphabetError("alphabet must contain at least one symbol");
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const std::string& sym = symbols_[i];
    if (sym.empty()) {
      throw InvalidAlphabetError("alphabet symbol at index " + std::to_string(i) +
                                 " is empty");
    }
    auto [it, inserted] = index_.emplace(sym, i);
    if (!inserted) {
      throw InvalidAlphabetError("duplicate alphabet symbol \"" + sym + "\"");
    }
    if (sym.size() != 1) single_character_ = false;
  }
}

AlphabetPtr Alphabet::make(std::vector<std::string> symbols) {
  return std::make_shared<const Alphabet>(std::move(symbols));
}

AlphabetPtr Alphabet::from_characters(std::string_view characters) {
  std::vector<std::string> symbols;
  symbols.reserve(characters.size());
  for (char c : characters) symbols.emplace_back(1, c);
  return make(std::move(symbols));
}

const AlphabetPtr& Alphabet::binary() {
  static const AlphabetPtr instance = from_characters("01");
  return instance;
}

const AlphabetPtr& Alphabet::decimal() {
  static const AlphabetPtr instance = from_characters("0123456789");
  return instance;
}

std::optional<std::size_t> Alphabet::find(std::string_view symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Alphabet::display() const {
  std::string out;
  for (const auto& sym : symbols_) out += sym;
  return out;
}

SymbolString::SymbolString(AlphabetPtr alphabet, std::vector<std::uint32_t> digits)
    : alphabet_(std::move(alphabet)), digits_(std::move(digits)) {
  if (!alphabet_) throw InvalidStringError("string requires an alphabet");
  for (std::uint32_t d : digits_) {
    if (d >= alphabet_->size()) {
      throw InvalidStringError("digit value " + std::to_string(d) +
                               " out of range for alphabet of size " +
                               std::to_string(alphabet_->size()));
    }
  }
}

SymbolString SymbolString::empty(AlphabetPtr alphabet) {
  return SymbolString(std::move(alphabet), {});
}

SymbolString SymbolString::from_symbols(AlphabetPtr alphabet,
                                        const std::vector<std::string>& symbols) {
  std::vector<std::uint32_t> digits;
  digits.reserve(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    auto digit = alphabet->find(symbols[i]);
    if (!digit) {
      throw InvalidStringError("symbol \"" + symbols[i] + "\" at position " +
                               std::to_string(i) + " is not in alphabet \"" +
                               alphabet->display() + "\"");
    }
    digits.push_back(static_cast<std::uint32_t>(*digit));
  }
  return SymbolString(std::move(alphabet), std::move(digits));
}

SymbolString SymbolString::parse(AlphabetPtr alphabet, std::string_view text) {
  if (!alphabet->single_character()) {
    throw InvalidStringError(
        "text parsing requires a single-character alphabet; use from_symbols");
  }
  std::vector<std::uint32_t> digits;
  digits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto digit = alphabet->find(std::string_view(&text[i], 1));
    if (!digit) {
      throw InvalidStringError("symbol '" + std::string(1, text[i]) +
                               "' at position " + std::to_string(i) +
                               " is not in alphabet \"" + alphabet->display() + "\"");
    }
    digits.push_back(static_cast<std::uint32_t>(*digit));
  }
  return SymbolString(std::move(alphabet), std::move(digits));
}

std::string SymbolString::str() const {
  std::string out;
  for (std::uint32_t d : digits_) out += alphabet_->symbol(d);
  return out;
}

bool operator==(const SymbolString& a, const SymbolString& b) {
  if (a.digits_ != b.digits_) return false;
  return a.alphabet_ == b.alphabet_ || *a.alphabet_ == *b.alphabet_;
}

SymbolString concat(const SymbolString& a, const SymbolString& b) {
  if (a.alphabet() != b.alphabet() && !(*a.alphabet() == *b.alphabet())) {
    throw InvalidStringError("cannot concatenate strings over different alphabets");
  }
  std::vector<std::uint32_t> digits = a.digits();
  digits.insert(digits.end(), b.digits().begin(), b.digits().end());
  return SymbolString(a.alphabet(), std::move(digits));
}

std::ostream& operator<<(std::ostream& os, const SymbolString& s) {
  return os << '"' << s.str() << '"';
}

}  // namespace bijenum
