#include "isoword/lce_index.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "isoword/error.hpp"

namespace isoword {

SparseTableRmq::SparseTableRmq(std::span<const std::uint32_t> values) {
  if (values.empty()) return;
  levels_.emplace_back(values.begin(), values.end());
  for (std::size_t width = 2; width <= values.size(); width *= 2) {
    const auto& below = levels_.back();
    const std::size_t half = width / 2;
    std::vector<std::uint32_t> level(values.size() - width + 1);
    for (std::size_t i = 0; i < level.size(); ++i)
      level[i] = std::min(below[i], below[i + half]);
    levels_.push_back(std::move(level));
  }
}

std::uint32_t SparseTableRmq::min(std::size_t lo, std::size_t hi) const noexcept {
  const std::size_t level = std::bit_width(hi - lo + 1) - 1;
  const auto& row = levels_[level];
  return std::min(row[lo], row[hi + 1 - (std::size_t{1} << level)]);
}

LceIndex::LceIndex(Word word) : word_(std::move(word)) {
  if (word_.empty()) throw error(errc::empty_word, "cannot index an empty word");
  sa_ = build_suffix_array(word_.codes(), word_.alphabet_size());
  rank_.resize(sa_.size());
  for (std::size_t t = 0; t < sa_.size(); ++t)
    rank_[sa_[t]] = static_cast<std::uint32_t>(t);
  lcp_ = build_lcp_array(word_.codes(), sa_, rank_);
  rmq_ = SparseTableRmq(lcp_);
}

std::uint32_t LceIndex::range_min(std::size_t lo, std::size_t hi) const {
  if (lo > hi || hi >= lcp_.size())
    throw error(errc::position_out_of_range, "range_min interval out of range");
  return rmq_.min(lo, hi);
}

std::size_t LceIndex::lce(std::size_t i, std::size_t j) const {
  const std::size_t n = word_.size();
  if (i > n || j > n)
    throw error(errc::position_out_of_range,
                "lce position beyond word length " + std::to_string(n));
  return lce_unchecked(i, j);
}

std::size_t LceIndex::lce_unchecked(std::size_t i, std::size_t j) const noexcept {
  const std::size_t n = word_.size();
  if (i == n || j == n) return 0;
  if (i == j) return n - i;
  // Short extensions are resolved by direct comparison, which keeps scans
  // over dissimilar alignments out of the sparse table.
  const auto codes = word_.codes();
  const std::size_t limit = std::min<std::size_t>(n - std::max(i, j), 8);
  std::size_t h = 0;
  while (h < limit && codes[i + h] == codes[j + h]) ++h;
  if (h < limit || h == n - std::max(i, j)) return h;
  auto lo = rank_[i];
  auto hi = rank_[j];
  if (lo > hi) std::swap(lo, hi);
  return rmq_.min(lo, hi - 1);
}

LceIndex build_index(const Word& u) { return LceIndex(u); }

}  // namespace isoword
