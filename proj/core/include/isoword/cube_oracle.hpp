#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "isoword/distance.hpp"
#include "isoword/word.hpp"

namespace isoword {

/// Brute-force ground truth over the d-ary n-cube.
///
/// Vertices are the d^n words of length n over Z_d. Two edge semantics are
/// supported and are never inferred from d:
///   Metric::lee      one position changes by +-1 mod d (the cube Q_n^d);
///   Metric::hamming  one position changes to any other letter (the Hamming
///                    graph underlying f-free transformations).
/// In both graphs the shortest-path distance is the matching word metric.

inline constexpr std::uint64_t default_vertex_budget = std::uint64_t{1} << 22;
inline constexpr std::size_t infinite_distance =
    std::numeric_limits<std::size_t>::max();

/// True when `f` occurs as a factor of `u`. Plain scan.
bool contains_factor(std::span<const Code> u, std::span<const Code> f) noexcept;

struct CubeWitness {
  Word u;
  Word v;
  std::size_t host_distance = 0;
  /// infinite_distance when v is unreachable from u inside the subgraph.
  std::size_t subgraph_distance = 0;
};

struct CubeCheckResult {
  bool isometric = true;
  std::size_t n = 0;
  unsigned d = 0;
  Metric metric = Metric::hamming;
  std::size_t vertex_count = 0;
  std::optional<CubeWitness> witness;
};

/// All f-free words of length n over Z_d, lexicographic order.
/// Throws errc::budget_exceeded when d^n > budget, errc::empty_word for an
/// empty f and errc::code_out_of_range when f uses a code >= d.
std::vector<Word> enumerate_f_free(const Word& f, std::size_t n, unsigned d,
                                   std::uint64_t budget = default_vertex_budget);

/// Checks whether the subgraph induced by f-free words is isometric in the
/// host graph. On failure the witness is the lexicographically first pair
/// (u, v) whose subgraph distance exceeds the host distance.
CubeCheckResult check_isometric_embedding(
    const Word& f, std::size_t n, unsigned d, Metric metric,
    std::uint64_t budget = default_vertex_budget);

/// Whether u can reach v along a host shortest path whose words all avoid f.
/// Hamming: each step sets one mismatched position to v's letter.
/// Lee: each step moves one position by +-1 mod d towards v.
/// Throws errc::not_f_free, errc::length_mismatch, errc::code_out_of_range.
bool f_free_transformation_exists(const Word& u, const Word& v, const Word& f,
                                  Metric metric, unsigned d);

/// Sweeps n over [n_first, n_last] and returns the first failing check.
std::optional<CubeCheckResult> first_embedding_failure(
    const Word& f, unsigned d, Metric metric, std::size_t n_first,
    std::size_t n_last, std::uint64_t budget = default_vertex_budget);

}  // namespace isoword
