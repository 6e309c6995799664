#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace isoword {

/// Dense symbol code. Alphabets hold at most 256 symbols so a code fits a byte.
using Code = std::uint8_t;

inline constexpr unsigned max_alphabet_size = 256;

/// An ordered set of distinct characters; the symbol at position i has code i.
class Alphabet {
 public:
  /// Throws error(errc::invalid_alphabet) on duplicates, an empty string or
  /// more than 256 symbols.
  explicit Alphabet(std::string_view symbols);

  /// The first `d` decimal digits, "01" for d = 2, "0123" for d = 4.
  static Alphabet digits(unsigned d);

  unsigned size() const noexcept { return static_cast<unsigned>(symbols_.size()); }
  const std::string& symbols() const noexcept { return symbols_; }

  std::optional<Code> code_of(char c) const noexcept;
  char symbol(Code code) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> lookup_{};
};

/// A finite word u[0] ... u[n-1] over Z_d, stored as dense codes.
class Word {
 public:
  Word() = default;

  /// Validates that every code is below `alphabet_size`.
  Word(std::vector<Code> codes, unsigned alphabet_size);

  std::size_t size() const noexcept { return codes_.size(); }
  bool empty() const noexcept { return codes_.empty(); }
  unsigned alphabet_size() const noexcept { return alphabet_size_; }

  Code operator[](std::size_t i) const noexcept { return codes_[i]; }
  std::span<const Code> codes() const noexcept { return codes_; }

  /// u[pos .. pos+len) as a word over the same alphabet.
  Word slice(std::size_t pos, std::size_t len) const;
  Word reversed() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Code> codes_;
  unsigned alphabet_size_ = 1;
};

/// Maps each character of `text` to its code in `alphabet`.
/// Throws unknown_symbol_error for the first character outside the alphabet.
Word make_word(std::string_view text, const Alphabet& alphabet);

/// Renders `word` back to characters; codes must be below alphabet.size().
std::string spell(const Word& word, const Alphabet& alphabet);

}  // namespace isoword
