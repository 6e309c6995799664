#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "isoword/distance.hpp"
#include "isoword/lce_index.hpp"
#include "isoword/word.hpp"

namespace isoword {

/// A border of length `length` (1 <= length <= n-1): the prefix u[0, length)
/// against the suffix u[n-length, n). Mismatch positions are offsets into
/// the prefix, ascending.
struct BorderEntry {
  std::size_t length = 0;
  std::vector<std::size_t> mismatch_positions;
  std::size_t distance = 0;

  friend bool operator==(const BorderEntry&, const BorderEntry&) = default;
};

/// Every border at exact distance k, longest first.
struct BorderReport {
  Metric metric = Metric::hamming;
  std::size_t k = 0;
  std::vector<BorderEntry> borders;

  bool empty() const noexcept { return borders.empty(); }
  std::vector<std::size_t> lengths() const;

  friend bool operator==(const BorderReport&, const BorderReport&) = default;
};

/// One longest-common-extension query issued by a detector while testing
/// the alignment of suffix u_i against the prefix: lce(a, b) = value.
struct LceEvent {
  std::size_t i;
  std::size_t a;
  std::size_t b;
  std::size_t value;
};

struct ScanStats {
  std::uint64_t lce_queries = 0;
  std::uint64_t max_queries_per_index = 0;
};

/// Instrumentation hooks; both are optional.
struct ScanOptions {
  ScanStats* stats = nullptr;
  std::function<void(const LceEvent&)> on_lce;
};

// Kangaroo detectors. Each alignment i = 1 .. n-1 (border length n-i) jumps
// from mismatch to mismatch with O(1) LCE queries, at most k+1 per alignment.
// All of them throw errc::empty_word for an empty word and
// errc::index_mismatch when `index` was built over a different word.

bool has_k_error_border(const Word& u, std::size_t k, const LceIndex& index,
                        const ScanOptions& options = {});

/// The longest k-error border, if any.
std::optional<BorderEntry> first_k_error_border(const Word& u, std::size_t k,
                                                const LceIndex& index,
                                                const ScanOptions& options = {});

BorderReport find_k_error_borders(const Word& u, std::size_t k,
                                  const LceIndex& index,
                                  const ScanOptions& options = {});

/// Lee variants over Z_d. A single mismatch may add up to floor(d/2).
/// Throw errc::code_out_of_range when a code of u is not below d.
bool has_k_lee_error_border(const Word& u, std::size_t k, unsigned d,
                            const LceIndex& index,
                            const ScanOptions& options = {});

std::optional<BorderEntry> first_k_lee_error_border(
    const Word& u, std::size_t k, unsigned d, const LceIndex& index,
    const ScanOptions& options = {});

BorderReport find_k_lee_error_borders(const Word& u, std::size_t k, unsigned d,
                                      const LceIndex& index,
                                      const ScanOptions& options = {});

// Quadratic reference scans: compare every prefix with the suffix of the
// same length letter by letter.

BorderReport naive_border_scan(const Word& u, std::size_t k);
BorderReport naive_lee_border_scan(const Word& u, std::size_t k, unsigned d);

}  // namespace isoword
