#include "isoword/isometry.hpp"

#include <string>

#include "isoword/error.hpp"
#include "isoword/lce_index.hpp"

namespace isoword {

namespace {

IsometryVerdict verdict_from(std::optional<BorderEntry> witness, Metric metric) {
  IsometryVerdict v;
  v.metric = metric;
  v.isometric = !witness.has_value();
  v.witness = std::move(witness);
  return v;
}

}  // namespace

IsometryVerdict is_hamming_isometric(const Word& f) {
  if (f.empty()) throw error(errc::empty_word, "isometry of the empty word is undefined");
  const LceIndex index(f);
  return verdict_from(first_k_error_border(index.word(), 2, index), Metric::hamming);
}

IsometryVerdict is_lee_isometric(const Word& f, unsigned d) {
  if (d >= 5)
    throw error(errc::unsupported_alphabet_size,
                "no Lee-isometry characterization for alphabet size " +
                    std::to_string(d));
  if (f.empty()) throw error(errc::empty_word, "isometry of the empty word is undefined");
  for (Code c : f.codes())
    if (c >= d)
      throw error(errc::code_out_of_range,
                  "code " + std::to_string(c) + " not below " + std::to_string(d));

  if (d <= 3) {
    auto v = is_hamming_isometric(f);
    v.metric = Metric::lee;
    return v;
  }
  const LceIndex index(f);
  return verdict_from(first_k_lee_error_border(index.word(), 2, d, index), Metric::lee);
}

}  // namespace isoword
