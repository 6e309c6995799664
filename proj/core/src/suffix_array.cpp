#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "isoword/error.hpp"
#include "isoword/lce_index.hpp"

namespace isoword {
namespace {

// SA-IS (Nong, Zhang, Chan). `text` ends with a unique smallest symbol 0;
// `sa` receives the suffix array of `text`, including that sentinel suffix.
class InducedSorter {
 public:
  InducedSorter(std::span<const std::int32_t> text, std::span<std::int32_t> sa,
                std::int32_t alphabet_size)
      : text_(text),
        sa_(sa),
        n_(static_cast<std::int32_t>(text.size())),
        stype_(text.size()),
        bucket_(static_cast<std::size_t>(alphabet_size)) {}

  void run() {
    classify();

    // Stage 1: sort LMS substrings by inducing from bucket tails.
    std::fill(sa_.begin(), sa_.end(), -1);
    bucket_ends();
    for (std::int32_t i = 1; i < n_; ++i)
      if (is_lms(i)) sa_[--bucket_[text_[i]]] = i;
    induce_l();
    induce_s();

    // Compact the sorted LMS positions into the front of sa.
    std::int32_t lms_count = 0;
    for (std::int32_t i = 0; i < n_; ++i)
      if (is_lms(sa_[i])) sa_[lms_count++] = sa_[i];
    std::fill(sa_.begin() + lms_count, sa_.end(), -1);

    // Name LMS substrings; equal substrings share a name.
    std::int32_t names = 0;
    std::int32_t prev = -1;
    for (std::int32_t t = 0; t < lms_count; ++t) {
      const std::int32_t pos = sa_[t];
      if (prev < 0 || !same_lms_substring(pos, prev)) {
        ++names;
        prev = pos;
      }
      sa_[lms_count + pos / 2] = names - 1;
    }
    for (std::int32_t i = n_ - 1, j = n_ - 1; i >= lms_count; --i)
      if (sa_[i] >= 0) sa_[j--] = sa_[i];

    // Stage 2: order the reduced string, recursing when names repeat.
    auto reduced = sa_.subspan(static_cast<std::size_t>(n_ - lms_count));
    auto reduced_sa = sa_.first(static_cast<std::size_t>(lms_count));
    if (names < lms_count) {
      std::vector<std::int32_t> copy(reduced.begin(), reduced.end());
      InducedSorter(copy, reduced_sa, names).run();
    } else {
      for (std::int32_t t = 0; t < lms_count; ++t) reduced_sa[reduced[t]] = t;
    }

    // Stage 3: induce the full order from the sorted LMS suffixes.
    for (std::int32_t i = 1, j = 0; i < n_; ++i)
      if (is_lms(i)) reduced[j++] = i;
    for (std::int32_t t = 0; t < lms_count; ++t) reduced_sa[t] = reduced[reduced_sa[t]];
    std::fill(sa_.begin() + lms_count, sa_.end(), -1);
    bucket_ends();
    for (std::int32_t t = lms_count - 1; t >= 0; --t) {
      const std::int32_t pos = sa_[t];
      sa_[t] = -1;
      sa_[--bucket_[text_[pos]]] = pos;
    }
    induce_l();
    induce_s();
  }

 private:
  void classify() {
    stype_[n_ - 1] = true;
    for (std::int32_t i = n_ - 2; i >= 0; --i)
      stype_[i] = text_[i] < text_[i + 1] ||
                  (text_[i] == text_[i + 1] && stype_[i + 1]);
  }

  bool is_lms(std::int32_t i) const {
    return i > 0 && stype_[i] && !stype_[i - 1];
  }

  void bucket_starts() {
    count_symbols();
    std::int32_t sum = 0;
    for (auto& b : bucket_) {
      const std::int32_t c = b;
      b = sum;
      sum += c;
    }
  }

  void bucket_ends() {
    count_symbols();
    std::int32_t sum = 0;
    for (auto& b : bucket_) {
      sum += b;
      b = sum;
    }
  }

  void count_symbols() {
    std::fill(bucket_.begin(), bucket_.end(), 0);
    for (std::int32_t c : text_) ++bucket_[c];
  }

  void induce_l() {
    bucket_starts();
    for (std::int32_t t = 0; t < n_; ++t) {
      const std::int32_t j = sa_[t] - 1;
      if (sa_[t] > 0 && !stype_[j]) sa_[bucket_[text_[j]]++] = j;
    }
  }

  void induce_s() {
    bucket_ends();
    for (std::int32_t t = n_ - 1; t >= 0; --t) {
      const std::int32_t j = sa_[t] - 1;
      if (sa_[t] > 0 && stype_[j]) sa_[--bucket_[text_[j]]] = j;
    }
  }

  // The sentinel is unique, so the scan stops before running off the end.
  bool same_lms_substring(std::int32_t a, std::int32_t b) const {
    for (std::int32_t d = 0;; ++d) {
      if (text_[a + d] != text_[b + d] || stype_[a + d] != stype_[b + d])
        return false;
      if (d > 0 && (is_lms(a + d) || is_lms(b + d)))
        return is_lms(a + d) && is_lms(b + d);
    }
  }

  std::span<const std::int32_t> text_;
  std::span<std::int32_t> sa_;
  std::int32_t n_;
  std::vector<bool> stype_;
  std::vector<std::int32_t> bucket_;
};

}  // namespace

std::vector<std::uint32_t> build_suffix_array(std::span<const Code> codes,
                                              unsigned alphabet_size) {
  const std::size_t n = codes.size();
  if (n == 0) return {};
  if (n >= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()))
    throw error(errc::position_out_of_range, "word too long to index");
  if (n == 1) return {0};

  // Shift codes up by one to make room for the sentinel 0.
  std::vector<std::int32_t> text(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (codes[i] >= alphabet_size)
      throw error(errc::code_out_of_range, "code not below alphabet size");
    text[i] = codes[i] + 1;
  }
  text[n] = 0;

  std::vector<std::int32_t> sa(n + 1);
  InducedSorter(text, sa, static_cast<std::int32_t>(alphabet_size) + 1).run();

  // sa[0] is the sentinel suffix.
  std::vector<std::uint32_t> out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = static_cast<std::uint32_t>(sa[t + 1]);
  return out;
}

std::vector<std::uint32_t> build_lcp_array(std::span<const Code> codes,
                                           std::span<const std::uint32_t> sa,
                                           std::span<const std::uint32_t> rank) {
  const std::size_t n = codes.size();
  if (n < 2) return {};
  std::vector<std::uint32_t> lcp(n - 1);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = rank[i];
    if (r + 1 == n) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[r + 1];
    while (i + h < n && j + h < n && codes[i + h] == codes[j + h]) ++h;
    lcp[r] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

}  // namespace isoword
