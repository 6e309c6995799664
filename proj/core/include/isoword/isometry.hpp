#pragma once

#include <optional>

#include "isoword/border.hpp"
#include "isoword/distance.hpp"
#include "isoword/word.hpp"

namespace isoword {

struct IsometryVerdict {
  bool isometric = true;
  Metric metric = Metric::hamming;
  /// Longest 2-error (or 2-Lee-error) border; present iff not isometric.
  std::optional<BorderEntry> witness;
};

/// A word is Hamming-isometric iff it has no 2-error border.
/// Throws errc::empty_word.
IsometryVerdict is_hamming_isometric(const Word& f);

/// Lee-isometricity over Z_d for d <= 4. For d <= 3 the Lee and Hamming
/// cubes coincide; for d = 4 a word is Lee-isometric iff it has no
/// 2-Lee-error border. Throws errc::unsupported_alphabet_size for d >= 5,
/// errc::empty_word and errc::code_out_of_range.
IsometryVerdict is_lee_isometric(const Word& f, unsigned d);

}  // namespace isoword
