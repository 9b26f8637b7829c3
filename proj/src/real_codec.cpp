#include "bijenum/real_codec.hpp"

#include <utility>

#include "bijenum/errors.hpp"
#include "bijenum/numeration.hpp"
#include "bijenum/pairing.hpp"

namespace bijenum {

namespace {

bool is_decimal_digit(char c) { return c >= '0' && c <= '9'; }

void require_decimal(const SymbolString& part, const char* which) {
  if (part.alphabet() != Alphabet::decimal() &&
      !(*part.alphabet() == *Alphabet::decimal())) {
    throw InvalidStringError(std::string(which) +
                             " part must be a string over the decimal alphabet");
  }
}

}  // namespace

DecimalRepr::DecimalRepr(Sign sign, SymbolString int_part, SymbolString frac_part)
    : sign_(sign), int_part_(std::move(int_part)), frac_part_(std::move(frac_part)) {
  require_decimal(int_part_, "integer");
  require_decimal(frac_part_, "fraction");
}

DecimalRepr DecimalRepr::from_parts(Sign sign, std::string_view int_digits,
                                    std::string_view frac_digits) {
  return DecimalRepr(sign, SymbolString::parse(Alphabet::decimal(), int_digits),
                     SymbolString::parse(Alphabet::decimal(), frac_digits));
}

DecimalRepr parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  Sign sign = Sign::plus;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    sign = text[pos] == '+' ? Sign::plus : Sign::minus;
    ++pos;
  }

  std::vector<std::uint32_t> int_digits;
  while (pos < text.size() && is_decimal_digit(text[pos])) {
    int_digits.push_back(static_cast<std::uint32_t>(text[pos] - '0'));
    ++pos;
  }

  if (pos == text.size()) throw ParseError(pos, "missing '.'");
  if (text[pos] != '.') {
    if (text[pos] == '+' || text[pos] == '-') {
      throw ParseError(pos, "sign must be leading");
    }
    throw ParseError(pos, std::string("illegal character '") + text[pos] + "'");
  }
  ++pos;

  std::vector<std::uint32_t> frac_digits;
  while (pos < text.size() && is_decimal_digit(text[pos])) {
    frac_digits.push_back(static_cast<std::uint32_t>(text[pos] - '0'));
    ++pos;
  }

  if (pos != text.size()) {
    if (text[pos] == '.') throw ParseError(pos, "multiple '.'");
    if (text[pos] == '+' || text[pos] == '-') {
      throw ParseError(pos, "sign must be leading");
    }
    throw ParseError(pos, std::string("illegal character '") + text[pos] + "'");
  }

  return DecimalRepr(sign, SymbolString(Alphabet::decimal(), std::move(int_digits)),
                     SymbolString(Alphabet::decimal(), std::move(frac_digits)));
}

std::string render(const DecimalRepr& d) {
  std::string out;
  out += d.sign() == Sign::plus ? '+' : '-';
  out += d.int_part().str();
  out += '.';
  out += d.frac_part().str();
  return out;
}

Nat encode_real(const DecimalRepr& d) {
  const Nat sign_bit = d.sign() == Sign::plus ? 0 : 1;
  return pair(sign_bit, pair(shortlex_index(d.int_part()), shortlex_index(d.frac_part())));
}

DecimalRepr decode_real(const Nat& n) {
  auto [sign_bit, parts] = unpair(n);
  if (sign_bit >= 2) {
    throw NotInImageError("sign component " + sign_bit.str() +
                          " is not 0 or 1; " + n.str() + " is not an encoded representation");
  }
  auto [int_index, frac_index] = unpair(parts);
  return DecimalRepr(sign_bit == 0 ? Sign::plus : Sign::minus,
                     shortlex_string(int_index, Alphabet::decimal()),
                     shortlex_string(frac_index, Alphabet::decimal()));
}

std::ostream& operator<<(std::ostream& os, const DecimalRepr& d) {
  return os << render(d);
}

}  // namespace bijenum
