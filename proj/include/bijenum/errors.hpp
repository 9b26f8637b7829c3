#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bijenum {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A symbol does not belong to the expected alphabet, or two values built
/// over different alphabets were combined.
class InvalidStringError : public Error {
 public:
  using Error::Error;
};

/// Alphabet construction rejected its symbol list (empty, or duplicates).
class InvalidAlphabetError : public Error {
 public:
  using Error::Error;
};

/// Substitution code construction rejected its table.
class InvalidCodeError : public Error {
 public:
  using Error::Error;
};

/// Input length is not a multiple of the code width.
class FramingError : public Error {
 public:
  using Error::Error;
};

/// A fixed-width block decodes to no symbol of the source alphabet.
class UnmappedCodewordError : public Error {
 public:
  using Error::Error;
};

/// Text failed to parse; carries the byte position of the offending spot.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The integer is not in the image of the encoder being inverted.
class NotInImageError : public Error {
 public:
  using Error::Error;
};

/// An index exceeds a finite table.
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// A source label was offered to an injection that already assigned it.
class DuplicateSourceError : public Error {
 public:
  using Error::Error;
};

/// A label stream ran out before the requested number of steps.
class InsufficientInputError : public Error {
 public:
  using Error::Error;
};

/// A bit-table file violated the format; carries the 1-based line number.
class TableLoadError : public Error {
 public:
  TableLoadError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace bijenum
