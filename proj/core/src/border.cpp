#include "isoword/border.hpp"

#include <algorithm>
#include <string>

#include "isoword/error.hpp"

namespace isoword {

std::vector<std::size_t> BorderReport::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(borders.size());
  for (const auto& b : borders) out.push_back(b.length);
  return out;
}

namespace {

void require_indexed(const Word& u, const LceIndex& index) {
  if (u.empty()) throw error(errc::empty_word, "border detection needs a non-empty word");
  if (&u != &index.word() && u != index.word())
    throw error(errc::index_mismatch, "index was built over a different word");
}

void require_codes_below(const Word& u, unsigned d) {
  for (std::size_t p = 0; p < u.size(); ++p)
    if (u[p] >= d)
      throw error(errc::code_out_of_range,
                  "code " + std::to_string(u[p]) + " at position " +
                      std::to_string(p) + " not below " + std::to_string(d));
}

struct HammingWeight {
  unsigned operator()(Code, Code) const noexcept { return 1; }
};

struct LeeWeight {
  unsigned d;
  unsigned operator()(Code a, Code b) const noexcept {
    return lee_distance_unchecked(a, b, d);
  }
};

// Kangaroo scan shared by both metrics. For alignment i the prefix
// u[0, n-i) is compared with the suffix u_i: extend over the common run with
// one LCE query, stop at the end of the alignment, otherwise charge the
// mismatch weight and jump past it. A mismatch always weighs at least 1, so
// an alignment issues at most k+1 queries.
//
// `on_border(length, positions)` returns false to end the scan early.
template <class Weight, class OnBorder>
void kangaroo_scan(const LceIndex& index, std::size_t k, Weight weight,
                   const ScanOptions& options, OnBorder on_border) {
  const auto u = index.word().codes();
  const std::size_t n = u.size();
  std::vector<std::size_t> positions;
  std::uint64_t total = 0;
  std::uint64_t worst = 0;

  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t length = n - i;
    std::size_t pos = 0;
    std::size_t dist = 0;
    std::uint64_t queries = 0;
    positions.clear();
    bool found = false;
    for (;;) {
      const std::size_t ext = index.lce_unchecked(pos, i + pos);
      ++queries;
      if (options.on_lce) options.on_lce(LceEvent{i, pos, i + pos, ext});
      pos += ext;
      if (pos == length) {
        found = dist == k;
        break;
      }
      dist += weight(u[pos], u[i + pos]);
      if (dist > k) break;
      positions.push_back(pos);
      ++pos;
    }
    total += queries;
    worst = std::max(worst, queries);
    if (found && !on_border(length, positions)) break;
  }

  if (options.stats) {
    options.stats->lce_queries += total;
    options.stats->max_queries_per_index =
        std::max(options.stats->max_queries_per_index, worst);
  }
}

template <class Weight>
std::optional<BorderEntry> first_border(const LceIndex& index, std::size_t k,
                                        Weight weight, const ScanOptions& options) {
  std::optional<BorderEntry> hit;
  kangaroo_scan(index, k, weight, options,
                [&](std::size_t length, const std::vector<std::size_t>& positions) {
                  hit = BorderEntry{length, positions, k};
                  return false;
                });
  return hit;
}

template <class Weight>
BorderReport all_borders(const LceIndex& index, std::size_t k, Metric metric,
                         Weight weight, const ScanOptions& options) {
  BorderReport report{metric, k, {}};
  kangaroo_scan(index, k, weight, options,
                [&](std::size_t length, const std::vector<std::size_t>& positions) {
                  report.borders.push_back(BorderEntry{length, positions, k});
                  return true;
                });
  return report;
}

// Reference scan, deliberately free of the kangaroo machinery: every
// prefix is measured against its suffix with the plain distance functions.
template <class Distance>
BorderReport naive_scan(const Word& u, std::size_t k, Metric metric,
                        Distance distance) {
  if (u.empty()) throw error(errc::empty_word, "border scan needs a non-empty word");
  BorderReport report{metric, k, {}};
  const auto codes = u.codes();
  const std::size_t n = codes.size();
  for (std::size_t length = n - 1; length >= 1; --length) {
    const auto prefix = codes.first(length);
    const auto suffix = codes.last(length);
    const std::size_t dist = distance(prefix, suffix);
    if (dist != k) continue;
    BorderEntry entry{length, {}, dist};
    for (std::size_t p = 0; p < length; ++p)
      if (prefix[p] != suffix[p]) entry.mismatch_positions.push_back(p);
    report.borders.push_back(std::move(entry));
  }
  return report;
}

}  // namespace

bool has_k_error_border(const Word& u, std::size_t k, const LceIndex& index,
                        const ScanOptions& options) {
  return first_k_error_border(u, k, index, options).has_value();
}

std::optional<BorderEntry> first_k_error_border(const Word& u, std::size_t k,
                                                const LceIndex& index,
                                                const ScanOptions& options) {
  require_indexed(u, index);
  return first_border(index, k, HammingWeight{}, options);
}

BorderReport find_k_error_borders(const Word& u, std::size_t k,
                                  const LceIndex& index, const ScanOptions& options) {
  require_indexed(u, index);
  return all_borders(index, k, Metric::hamming, HammingWeight{}, options);
}

bool has_k_lee_error_border(const Word& u, std::size_t k, unsigned d,
                            const LceIndex& index, const ScanOptions& options) {
  return first_k_lee_error_border(u, k, d, index, options).has_value();
}

std::optional<BorderEntry> first_k_lee_error_border(const Word& u, std::size_t k,
                                                    unsigned d, const LceIndex& index,
                                                    const ScanOptions& options) {
  require_indexed(u, index);
  require_codes_below(u, d);
  return first_border(index, k, LeeWeight{d}, options);
}

BorderReport find_k_lee_error_borders(const Word& u, std::size_t k, unsigned d,
                                      const LceIndex& index,
                                      const ScanOptions& options) {
  require_indexed(u, index);
  require_codes_below(u, d);
  return all_borders(index, k, Metric::lee, LeeWeight{d}, options);
}

BorderReport naive_border_scan(const Word& u, std::size_t k) {
  return naive_scan(u, k, Metric::hamming,
                    [](std::span<const Code> a, std::span<const Code> b) {
                      return hamming_distance(a, b);
                    });
}

BorderReport naive_lee_border_scan(const Word& u, std::size_t k, unsigned d) {
  require_codes_below(u, d);
  return naive_scan(u, k, Metric::lee,
                    [d](std::span<const Code> a, std::span<const Code> b) {
                      return lee_distance(a, b, d);
                    });
}

}  // namespace isoword
