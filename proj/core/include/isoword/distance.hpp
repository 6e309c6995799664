#pragma once

#include <cstddef>
#include <span>

#include "isoword/word.hpp"

namespace isoword {

enum class Metric { hamming, lee };

/// "hamming" or "lee".
const char* to_string(Metric metric) noexcept;

/// Number of positions where `u` and `v` differ. Throws errc::length_mismatch.
std::size_t hamming_distance(std::span<const Code> u, std::span<const Code> v);
std::size_t hamming_distance(const Word& u, const Word& v);

/// min(|a-b|, d-|a-b|) on Z_d. Throws errc::code_out_of_range unless a, b < d.
unsigned lee_distance(Code a, Code b, unsigned d);

/// Unchecked letter Lee distance for inner loops; requires a, b < d.
constexpr unsigned lee_distance_unchecked(Code a, Code b, unsigned d) noexcept {
  const unsigned diff = a > b ? unsigned(a - b) : unsigned(b - a);
  return diff < d - diff ? diff : d - diff;
}

/// Coordinate-wise sum of letter Lee distances over Z_d.
std::size_t lee_distance(std::span<const Code> u, std::span<const Code> v,
                         unsigned d);
std::size_t lee_distance(const Word& u, const Word& v, unsigned d);

}  // namespace isoword
