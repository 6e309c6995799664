#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isoword {

enum class errc {
  invalid_alphabet,
  unknown_symbol,
  length_mismatch,
  code_out_of_range,
  empty_word,
  position_out_of_range,
  index_mismatch,
  unsupported_alphabet_size,
  budget_exceeded,
  not_f_free,
};

/// Name of an error code, e.g. "EmptyWord".
const char* to_string(errc code) noexcept;

/// Base exception for every failure raised by the library.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// A character of the input text is not part of the declared alphabet.
class unknown_symbol_error : public error {
 public:
  unknown_symbol_error(std::size_t position, char symbol);

  std::size_t position() const noexcept { return position_; }
  char symbol() const noexcept { return symbol_; }

 private:
  std::size_t position_;
  char symbol_;
};

}  // namespace isoword
