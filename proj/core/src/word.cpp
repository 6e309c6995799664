#include "isoword/word.hpp"

#include <algorithm>
#include <string>

#include "isoword/error.hpp"

namespace isoword {

const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_alphabet: return "InvalidAlphabet";
    case errc::unknown_symbol: return "UnknownSymbol";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::code_out_of_range: return "CodeOutOfRange";
    case errc::empty_word: return "EmptyWord";
    case errc::position_out_of_range: return "PositionOutOfRange";
    case errc::index_mismatch: return "IndexMismatch";
    case errc::unsupported_alphabet_size: return "UnsupportedAlphabetSize";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::not_f_free: return "NotFFree";
  }
  return "Unknown";
}

unknown_symbol_error::unknown_symbol_error(std::size_t position, char symbol)
    : error(errc::unknown_symbol,
            "unknown symbol '" + std::string(1, symbol) + "' at position " +
                std::to_string(position)),
      position_(position),
      symbol_(symbol) {}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty() || symbols_.size() > max_alphabet_size)
    throw error(errc::invalid_alphabet,
                "alphabet must hold between 1 and 256 symbols");
  lookup_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto& slot = lookup_[static_cast<unsigned char>(symbols_[i])];
    if (slot >= 0)
      throw error(errc::invalid_alphabet,
                  "duplicate alphabet symbol '" + std::string(1, symbols_[i]) + "'");
    slot = static_cast<std::int16_t>(i);
  }
}

Alphabet Alphabet::digits(unsigned d) {
  if (d == 0 || d > 10)
    throw error(errc::invalid_alphabet, "digit alphabets hold 1 to 10 symbols");
  return Alphabet(std::string_view("0123456789", d));
}

std::optional<Code> Alphabet::code_of(char c) const noexcept {
  const auto slot = lookup_[static_cast<unsigned char>(c)];
  if (slot < 0) return std::nullopt;
  return static_cast<Code>(slot);
}

char Alphabet::symbol(Code code) const {
  if (code >= symbols_.size())
    throw error(errc::code_out_of_range,
                "code " + std::to_string(code) + " outside alphabet of size " +
                    std::to_string(symbols_.size()));
  return symbols_[code];
}

Word::Word(std::vector<Code> codes, unsigned alphabet_size)
    : codes_(std::move(codes)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ == 0 || alphabet_size_ > max_alphabet_size)
    throw error(errc::invalid_alphabet, "alphabet size must be in [1, 256]");
  for (Code c : codes_)
    if (c >= alphabet_size_)
      throw error(errc::code_out_of_range,
                  "code " + std::to_string(c) + " not below alphabet size " +
                      std::to_string(alphabet_size_));
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  if (pos > codes_.size() || len > codes_.size() - pos)
    throw error(errc::position_out_of_range, "slice out of range");
  Word out;
  out.codes_.assign(codes_.begin() + static_cast<std::ptrdiff_t>(pos),
                    codes_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  out.alphabet_size_ = alphabet_size_;
  return out;
}

Word Word::reversed() const {
  Word out = *this;
  std::reverse(out.codes_.begin(), out.codes_.end());
  return out;
}

Word make_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Code> codes;
  codes.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto code = alphabet.code_of(text[i]);
    if (!code) throw unknown_symbol_error(i, text[i]);
    codes.push_back(*code);
  }
  return Word(std::move(codes), alphabet.size());
}

std::string spell(const Word& word, const Alphabet& alphabet) {
  std::string out;
  out.reserve(word.size());
  for (Code c : word.codes()) out.push_back(alphabet.symbol(c));
  return out;
}

}  // namespace isoword
