#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "isoword/word.hpp"

namespace isoword {

/// Suffix array of `codes` by induced sorting (SA-IS), linear time.
/// No sentinel appears in the output; the shorter of two suffixes that agree
/// up to its end sorts first.
std::vector<std::uint32_t> build_suffix_array(std::span<const Code> codes,
                                              unsigned alphabet_size);

/// Kasai's algorithm. Element t is the LCP of the suffixes at ranks t, t+1.
std::vector<std::uint32_t> build_lcp_array(std::span<const Code> codes,
                                           std::span<const std::uint32_t> sa,
                                           std::span<const std::uint32_t> rank);

/// Sparse table: O(n log n) words, O(1) range minimum.
class SparseTableRmq {
 public:
  SparseTableRmq() = default;
  explicit SparseTableRmq(std::span<const std::uint32_t> values);

  /// min(values[lo..hi]), inclusive; requires lo <= hi < size().
  std::uint32_t min(std::size_t lo, std::size_t hi) const noexcept;
  std::size_t size() const noexcept {
    return levels_.empty() ? 0 : levels_.front().size();
  }

 private:
  std::vector<std::vector<std::uint32_t>> levels_;
};

/// Immutable longest-common-extension index over one word: suffix array,
/// inverse suffix array, LCP array and an RMQ over the LCP array.
///
/// Queries compare two suffixes of the indexed word. Position n denotes the
/// empty suffix and always yields 0.
class LceIndex {
 public:
  /// Throws errc::empty_word for an empty word.
  explicit LceIndex(Word word);

  const Word& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }

  std::span<const std::uint32_t> suffix_array() const noexcept { return sa_; }
  std::span<const std::uint32_t> rank() const noexcept { return rank_; }
  std::span<const std::uint32_t> lcp() const noexcept { return lcp_; }

  /// min(lcp[lo..hi]), inclusive.
  std::uint32_t range_min(std::size_t lo, std::size_t hi) const;

  /// Length of the common prefix of suffixes u_i and u_j.
  /// Throws errc::position_out_of_range when i or j exceeds n.
  std::size_t lce(std::size_t i, std::size_t j) const;

  /// As lce() without the range check.
  std::size_t lce_unchecked(std::size_t i, std::size_t j) const noexcept;

 private:
  Word word_;
  std::vector<std::uint32_t> sa_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::uint32_t> lcp_;
  SparseTableRmq rmq_;
};

/// Builds the index for `u`; throws errc::empty_word when u is empty.
LceIndex build_index(const Word& u);

}  // namespace isoword
