#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bijenum/alphabet.hpp"

namespace bijenum {

/// A lazily queried table of bits, (row, col) -> bit. Finite tables store
/// their rows; unbounded tables wrap a deterministic function. Reads past
/// the end of a stored row pad with 0; reads past the last row of a finite
/// table are out of range.
class Enumeration {
 public:
  using BitFn = std::function<bool(std::size_t row, std::size_t col)>;

  /// Finite table from binary rows. Rows must be non-ragged and use only
  /// the characters 0 and 1; violations name the offending 1-based line.
  static Enumeration from_rows(std::vector<std::string> rows);

  /// Unbounded table backed by a deterministic function.
  static Enumeration from_function(BitFn fn);

  /// Text format: one row per line, characters 0/1, all rows the same
  /// length. Errors carry line numbers.
  static Enumeration load(std::istream& in);
  static Enumeration load_file(const std::string& path);

  bool bit_at(std::size_t row, std::size_t col) const;

  /// Row count for finite tables, nullopt for unbounded ones.
  std::optional<std::size_t> row_count() const noexcept;

 private:
  Enumeration() = default;

  std::vector<std::string> rows_;
  BitFn fn_;
  bool finite_ = true;
};

/// The length-n binary string whose j-th bit is the flip of the table's
/// (j, j) bit. Differs from each of the first n rows at the diagonal
/// position by construction.
SymbolString diagonal_prefix(const Enumeration& e, std::size_t n);

/// Evidence that the diagonal string avoids row i: the position i where
/// they disagree, with both bits.
struct DiagonalWitness {
  std::size_t row;
  std::size_t position;
  bool row_bit;
  bool diagonal_bit;
};

/// One witness per row i < n; every witness has row_bit != diagonal_bit.
std::vector<DiagonalWitness> verify_diagonal(const Enumeration& e, std::size_t n);

/// A partial injection from labelled sources into binary strings, grown one
/// diagonal-fresh assignment at a time. The process never completes: any
/// state can be extended again.
class InjectionState {
 public:
  InjectionState() = default;

  std::size_t steps() const noexcept { return assignments_.size(); }
  bool completed() const noexcept { return completed_; }
  const std::vector<std::pair<std::string, SymbolString>>& assignments() const noexcept {
    return assignments_;
  }
  bool has_label(const std::string& label) const {
    return labels_.count(label) != 0;
  }

 private:
  friend InjectionState extend_injection(InjectionState state, std::string next_label);

  std::vector<std::pair<std::string, SymbolString>> assignments_;
  std::unordered_set<std::string> labels_;
  bool completed_ = false;  // never set
};

/// One step of the iterative extension: with n assignments made, the fresh
/// string has length n+1, bit j the flip of assignment j's bit j (0-padded
/// past its end), and final bit 1 (the flip of the pad bit). Re-offering an
/// assigned label raises DuplicateSourceError.
InjectionState extend_injection(InjectionState state, std::string next_label);

/// Applies extend_injection `steps` times, drawing labels in order.
/// Fewer labels than steps raises InsufficientInputError.
InjectionState run_extension(std::span<const std::string> labels, std::size_t steps);

}  // namespace bijenum
