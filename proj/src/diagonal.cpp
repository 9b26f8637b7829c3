#include "bijenum/diagonal.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <utility>

#include "bijenum/errors.hpp"

namespace bijenum {

namespace {

// Pad rule: positions past the end of a finite string read as 0.
bool padded_bit(const std::string& row, std::size_t col) {
  return col < row.size() && row[col] == '1';
}

bool padded_bit(const SymbolString& s, std::size_t pos) {
  return pos < s.length() && s.digit(pos) == 1;
}

}  // namespace

Enumeration Enumeration::from_rows(std::vector<std::string> rows) {
  std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (char c : rows[i]) {
      if (c != '0' && c != '1') {
        throw TableLoadError(i + 1, std::string("invalid character '") + c + "'");
      }
    }
    if (rows[i].size() != width) {
      throw TableLoadError(i + 1, "row length " + std::to_string(rows[i].size()) +
                                      " differs from first row length " +
                                      std::to_string(width));
    }
  }
  Enumeration e;
  e.rows_ = std::move(rows);
  e.finite_ = true;
  return e;
}

Enumeration Enumeration::from_function(BitFn fn) {
  Enumeration e;
  e.fn_ = std::move(fn);
  e.finite_ = false;
  return e;
}

Enumeration Enumeration::load(std::istream& in) {
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    rows.push_back(line);
  }
  return from_rows(std::move(rows));
}

Enumeration Enumeration::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open table file \"" + path + "\"");
  return load(in);
}

bool Enumeration::bit_at(std::size_t row, std::size_t col) const {
  if (!finite_) return fn_(row, col);
  if (row >= rows_.size()) {
    throw OutOfRangeError("row " + std::to_string(row) + " exceeds table of " +
                          std::to_string(rows_.size()) + " rows");
  }
  return padded_bit(rows_[row], col);
}

std::optional<std::size_t> Enumeration::row_count() const noexcept {
  if (!finite_) return std::nullopt;
  return rows_.size();
}

SymbolString diagonal_prefix(const Enumeration& e, std::size_t n) {
  if (auto rows = e.row_count(); rows && n > *rows) {
    throw OutOfRangeError("diagonal length " + std::to_string(n) +
                          " exceeds table of " + std::to_string(*rows) + " rows");
  }
  std::vector<std::uint32_t> bits;
  bits.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    bits.push_back(e.bit_at(j, j) ? 0u : 1u);
  }
  return SymbolString(Alphabet::binary(), std::move(bits));
}

std::vector<DiagonalWitness> verify_diagonal(const Enumeration& e, std::size_t n) {
  const SymbolString d = diagonal_prefix(e, n);
  std::vector<DiagonalWitness> witnesses;
  witnesses.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    witnesses.push_back(DiagonalWitness{i, i, e.bit_at(i, i), d.digit(i) == 1});
  }
  return witnesses;
}

InjectionState extend_injection(InjectionState state, std::string next_label) {
  if (state.labels_.count(next_label)) {
    throw DuplicateSourceError("label \"" + next_label + "\" is already assigned");
  }
  const std::size_t n = state.assignments_.size();
  std::vector<std::uint32_t> bits(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    bits[j] = padded_bit(state.assignments_[j].second, j) ? 0u : 1u;
  }
  bits[n] = 1u;  // flip of the pad bit 0
  state.labels_.insert(next_label);
  state.assignments_.emplace_back(std::move(next_label),
                                  SymbolString(Alphabet::binary(), std::move(bits)));
  return state;
}

InjectionState run_extension(std::span<const std::string> labels, std::size_t steps) {
  if (labels.size() < steps) {
    throw InsufficientInputError("label stream yields " + std::to_string(labels.size()) +
                                 " labels, " + std::to_string(steps) + " steps requested");
  }
  InjectionState state;
  for (std::size_t i = 0; i < steps; ++i) {
    state = extend_injection(std::move(state), labels[i]);
  }
  return state;
}

}  // namespace bijenum
