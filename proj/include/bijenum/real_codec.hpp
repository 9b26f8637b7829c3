#pragma once

#include <string>
#include <string_view>

#include "bijenum/alphabet.hpp"
#include "bijenum/bignum.hpp"

namespace bijenum {

enum class Sign { plus, minus };

/// A decimal representation: sign, integer-part digits, fraction-part
/// digits. This is a string-level value, not a number — "1.5" and "1.50"
/// are distinct representations, and either digit run may be empty.
class DecimalRepr {
 public:
  /// Both parts must be strings over the decimal alphabet.
  DecimalRepr(Sign sign, SymbolString int_part, SymbolString frac_part);

  /// Convenience: parts given as plain digit text.
  static DecimalRepr from_parts(Sign sign, std::string_view int_digits,
                                std::string_view frac_digits);

  Sign sign() const noexcept { return sign_; }
  const SymbolString& int_part() const noexcept { return int_part_; }
  const SymbolString& frac_part() const noexcept { return frac_part_; }

  friend bool operator==(const DecimalRepr& a, const DecimalRepr& b) {
    return a.sign_ == b.sign_ && a.int_part_ == b.int_part_ &&
           a.frac_part_ == b.frac_part_;
  }
  friend bool operator!=(const DecimalRepr& a, const DecimalRepr& b) { return !(a == b); }

 private:
  Sign sign_;
  SymbolString int_part_;
  SymbolString frac_part_;
};

/// Grammar: [sign] digits* "." digits* with sign in {+,-}; an absent sign
/// parses as plus; exactly one dot; both digit runs may be empty.
/// Violations raise ParseError naming the byte position.
DecimalRepr parse_decimal(std::string_view text);

/// Canonical text: explicit sign, int digits, ".", frac digits.
/// parse_decimal(render(d)) == d.
std::string render(const DecimalRepr& d);

/// pair(sign_bit, pair(shortlex_index(int_part), shortlex_index(frac_part)))
/// with sign_bit 0 for plus, 1 for minus. Injective on representations.
Nat encode_real(const DecimalRepr& d);

/// Exact inverse of encode_real on its image; a sign component >= 2
/// raises NotInImageError.
DecimalRepr decode_real(const Nat& n);

std::ostream& operator<<(std::ostream& os, const DecimalRepr& d);

}  // namespace bijenum
