#include "isoword/distance.hpp"

#include <string>

#include "isoword/error.hpp"

namespace isoword {

const char* to_string(Metric metric) noexcept {
  return metric == Metric::lee ? "lee" : "hamming";
}

namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b)
    throw error(errc::length_mismatch, "words of lengths " + std::to_string(a) +
                                           " and " + std::to_string(b));
}

void require_code(Code c, unsigned d) {
  if (c >= d)
    throw error(errc::code_out_of_range, "code " + std::to_string(c) +
                                             " not below " + std::to_string(d));
}

}  // namespace

std::size_t hamming_distance(std::span<const Code> u, std::span<const Code> v) {
  require_same_length(u.size(), v.size());
  std::size_t dist = 0;
  for (std::size_t i = 0; i < u.size(); ++i) dist += u[i] != v[i];
  return dist;
}

std::size_t hamming_distance(const Word& u, const Word& v) {
  return hamming_distance(u.codes(), v.codes());
}

unsigned lee_distance(Code a, Code b, unsigned d) {
  require_code(a, d);
  require_code(b, d);
  return lee_distance_unchecked(a, b, d);
}

std::size_t lee_distance(std::span<const Code> u, std::span<const Code> v,
                         unsigned d) {
  require_same_length(u.size(), v.size());
  std::size_t dist = 0;
  for (std::size_t i = 0; i < u.size(); ++i) dist += lee_distance(u[i], v[i], d);
  return dist;
}

std::size_t lee_distance(const Word& u, const Word& v, unsigned d) {
  return lee_distance(u.codes(), v.codes(), d);
}

}  // namespace isoword
