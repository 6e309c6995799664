#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "isoword/distance.hpp"

namespace isoword::cli {

inline constexpr int exit_affirmative = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_error = 2;

/// Runs the `isoword` command line. Returns the process exit code:
/// 0 success or agreement, 1 negative verdict or disagreement, 2 error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Parses "a..b" (or a single "a") into an inclusive range.
std::pair<std::size_t, std::size_t> parse_range(const std::string& text);

struct BenchRow {
  std::size_t n = 0;
  double build_ms = 0;
  double scan_ms = 0;
  double check_ms = 0;
  std::uint64_t lce_queries = 0;
};

/// Times index construction, a full kangaroo scan and a first-hit check on
/// pseudo-random words over Z_d, one per size. Each time is the median of
/// `runs` samples; sizes are interleaved within a run. The word of length n
/// comes from std::mt19937_64 seeded with seed + n.
std::vector<BenchRow> bench_rows(const std::vector<std::size_t>& sizes, std::size_t k,
                                 Metric metric, unsigned d, std::uint64_t seed,
                                 unsigned runs);

}  // namespace isoword::cli
