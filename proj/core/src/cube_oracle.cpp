#include "isoword/cube_oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <string>
#include <unordered_set>

#include "isoword/error.hpp"

namespace isoword {

bool contains_factor(std::span<const Code> u, std::span<const Code> f) noexcept {
  if (f.empty()) return true;
  if (f.size() > u.size()) return false;
  for (std::size_t s = 0; s + f.size() <= u.size(); ++s)
    if (std::equal(f.begin(), f.end(), u.begin() + static_cast<std::ptrdiff_t>(s)))
      return true;
  return false;
}

namespace {

void require_pattern(const Word& f, unsigned d) {
  if (f.empty()) throw error(errc::empty_word, "forbidden factor must be non-empty");
  if (d == 0 || d > max_alphabet_size)
    throw error(errc::invalid_alphabet, "alphabet size must be in [1, 256]");
  for (Code c : f.codes())
    if (c >= d)
      throw error(errc::code_out_of_range,
                  "factor code " + std::to_string(c) + " not below " + std::to_string(d));
}

std::uint64_t vertex_total(std::size_t n, unsigned d, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t p = 0; p < n; ++p) {
    if (total > budget / d)
      throw error(errc::budget_exceeded,
                  std::to_string(d) + "^" + std::to_string(n) +
                      " vertices exceed the budget of " + std::to_string(budget));
    total *= d;
  }
  if (total > budget)
    throw error(errc::budget_exceeded, "vertex count exceeds the budget of " +
                                           std::to_string(budget));
  return total;
}

std::size_t letter_distance(Code a, Code b, unsigned d, Metric metric) {
  if (metric == Metric::hamming) return a != b;
  return lee_distance_unchecked(a, b, d);
}

// The subgraph induced by f-free words. Vertex ids are base-d numbers with
// the first letter most significant, so id order is lexicographic order.
struct FreeSubgraph {
  std::size_t n = 0;
  unsigned d = 0;
  Metric metric = Metric::hamming;
  std::vector<std::uint64_t> ids;
  std::vector<Code> letters;  // ids.size() rows of n letters
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> neighbours;

  std::size_t size() const { return ids.size(); }
  std::span<const Code> word(std::size_t v) const {
    return std::span<const Code>(letters).subspan(v * n, n);
  }
  std::size_t host_distance(std::size_t a, std::size_t b) const {
    const auto x = word(a);
    const auto y = word(b);
    std::size_t dist = 0;
    for (std::size_t p = 0; p < n; ++p) dist += letter_distance(x[p], y[p], d, metric);
    return dist;
  }
};

FreeSubgraph build_subgraph(const Word& f, std::size_t n, unsigned d, Metric metric,
                            std::uint64_t budget) {
  require_pattern(f, d);
  const std::uint64_t total = vertex_total(n, d, budget);

  FreeSubgraph g;
  g.n = n;
  g.d = d;
  g.metric = metric;
  std::vector<std::int64_t> slot(total, -1);
  std::vector<Code> digits(n, 0);
  for (std::uint64_t id = 0; id < total; ++id) {
    if (id > 0) {
      // Increment the base-d counter.
      for (std::size_t p = n; p-- > 0;) {
        if (++digits[p] < d) break;
        digits[p] = 0;
      }
    }
    if (contains_factor(digits, f.codes())) continue;
    slot[id] = static_cast<std::int64_t>(g.ids.size());
    g.ids.push_back(id);
    g.letters.insert(g.letters.end(), digits.begin(), digits.end());
  }

  std::vector<std::uint64_t> place(n, 1);
  for (std::size_t p = n; p-- > 1;) place[p - 1] = place[p] * d;

  g.offsets.reserve(g.size() + 1);
  g.offsets.push_back(0);
  std::vector<Code> targets;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto w = g.word(v);
    for (std::size_t p = 0; p < n; ++p) {
      const Code c = w[p];
      targets.clear();
      if (metric == Metric::lee) {
        if (d >= 2) targets.push_back(static_cast<Code>((c + 1) % d));
        if (d >= 3) targets.push_back(static_cast<Code>((c + d - 1) % d));
      } else {
        for (unsigned b = 0; b < d; ++b)
          if (b != c) targets.push_back(static_cast<Code>(b));
      }
      for (Code b : targets) {
        const std::uint64_t id = g.ids[v] - c * place[p] + b * place[p];
        if (slot[id] >= 0) g.neighbours.push_back(static_cast<std::uint32_t>(slot[id]));
      }
    }
    g.offsets.push_back(static_cast<std::uint32_t>(g.neighbours.size()));
  }
  return g;
}

// Subgraph distances from one source by plain BFS.
std::vector<std::size_t> bfs(const FreeSubgraph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.size(), infinite_distance);
  std::deque<std::uint32_t> queue;
  dist[source] = 0;
  queue.push_back(static_cast<std::uint32_t>(source));
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
      const auto w = g.neighbours[e];
      if (dist[w] == infinite_distance) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Sources are processed in blocks of 256, one bit per source, with a
// level-synchronous BFS shared by the whole block. Subgraph distances never
// undercut host distances, so the block is isometric exactly when every pair
// is reached and the distance sums agree.
constexpr std::size_t block_words = 4;
constexpr std::size_t block_sources = 64 * block_words;
using Lanes = std::array<std::uint64_t, block_words>;

class BlockChecker {
 public:
  explicit BlockChecker(const FreeSubgraph& g)
      : g_(g), visited_(g.size()), frontier_(g.size()), next_(g.size()) {
    // host_sum_[v] = sum of host distances from v to every subgraph vertex,
    // computed per coordinate from letter counts.
    std::vector<std::size_t> count(g.n * g.d, 0);
    for (std::size_t v = 0; v < g.size(); ++v) {
      const auto w = g.word(v);
      for (std::size_t p = 0; p < g.n; ++p) ++count[p * g.d + w[p]];
    }
    std::vector<std::size_t> per_letter(g.n * g.d, 0);
    for (std::size_t p = 0; p < g.n; ++p)
      for (unsigned a = 0; a < g.d; ++a)
        for (unsigned b = 0; b < g.d; ++b)
          per_letter[p * g.d + a] += count[p * g.d + b] *
                                     letter_distance(static_cast<Code>(a),
                                                     static_cast<Code>(b), g.d, g.metric);
    host_sum_.resize(g.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v) {
      const auto w = g.word(v);
      for (std::size_t p = 0; p < g.n; ++p) host_sum_[v] += per_letter[p * g.d + w[p]];
    }
  }

  bool block_is_isometric(std::size_t first, std::size_t last) {
    std::fill(visited_.begin(), visited_.end(), Lanes{});
    std::fill(frontier_.begin(), frontier_.end(), Lanes{});
    std::size_t expected = 0;
    for (std::size_t s = first; s < last; ++s) {
      const std::size_t bit = s - first;
      frontier_[s][bit / 64] |= std::uint64_t{1} << (bit % 64);
      visited_[s] = frontier_[s];
      expected += host_sum_[s];
    }

    std::size_t reached = last - first;
    std::size_t sum = 0;
    for (std::size_t level = 1;; ++level) {
      bool grew = false;
      for (std::size_t v = 0; v < g_.size(); ++v) {
        Lanes acc{};
        for (auto e = g_.offsets[v]; e < g_.offsets[v + 1]; ++e) {
          const auto& f = frontier_[g_.neighbours[e]];
          for (std::size_t t = 0; t < block_words; ++t) acc[t] |= f[t];
        }
        std::size_t fresh = 0;
        for (std::size_t t = 0; t < block_words; ++t) {
          acc[t] &= ~visited_[v][t];
          fresh += static_cast<std::size_t>(std::popcount(acc[t]));
        }
        next_[v] = acc;
        if (fresh) {
          grew = true;
          reached += fresh;
          sum += level * fresh;
        }
      }
      if (!grew) break;
      for (std::size_t v = 0; v < g_.size(); ++v)
        for (std::size_t t = 0; t < block_words; ++t) visited_[v][t] |= next_[v][t];
      std::swap(frontier_, next_);
      if (sum > expected) return false;
    }
    return reached == (last - first) * g_.size() && sum == expected;
  }

 private:
  const FreeSubgraph& g_;
  std::vector<std::size_t> host_sum_;
  std::vector<Lanes> visited_;
  std::vector<Lanes> frontier_;
  std::vector<Lanes> next_;
};

Word to_word(std::span<const Code> letters, unsigned d) {
  return Word(std::vector<Code>(letters.begin(), letters.end()), d);
}

void require_word(const Word& w, std::size_t n, unsigned d) {
  if (w.size() != n)
    throw error(errc::length_mismatch, "words of different lengths");
  for (Code c : w.codes())
    if (c >= d)
      throw error(errc::code_out_of_range,
                  "code " + std::to_string(c) + " not below " + std::to_string(d));
}

// Whether some occurrence of f overlaps position p of w. Callers know w was
// f-free before p changed.
bool factor_through(std::span<const Code> w, std::span<const Code> f, std::size_t p) {
  const std::size_t m = f.size();
  if (m > w.size()) return false;
  const std::size_t lo = p + 1 >= m ? p + 1 - m : 0;
  const std::size_t hi = std::min(p, w.size() - m);
  for (std::size_t s = lo; s <= hi; ++s)
    if (std::equal(f.begin(), f.end(), w.begin() + static_cast<std::ptrdiff_t>(s)))
      return true;
  return false;
}

bool hamming_transformation(const Word& u, const Word& v, const Word& f) {
  std::vector<std::size_t> mismatches;
  for (std::size_t p = 0; p < u.size(); ++p)
    if (u[p] != v[p]) mismatches.push_back(p);
  const std::size_t m = mismatches.size();
  if (m > 26)
    throw error(errc::budget_exceeded, "too many mismatches for a subset search");

  // reachable[mask]: the word with exactly the positions in mask switched to
  // v is f-free and reachable from u by single f-free switches.
  std::vector<bool> reachable(std::size_t{1} << m, false);
  reachable[0] = true;
  std::vector<Code> w(u.codes().begin(), u.codes().end());
  for (std::size_t mask = 0; mask < reachable.size(); ++mask) {
    if (!reachable[mask]) continue;
    for (std::size_t t = 0; t < m; ++t) w[mismatches[t]] = (mask >> t & 1) ? v[mismatches[t]] : u[mismatches[t]];
    for (std::size_t t = 0; t < m; ++t) {
      if (mask >> t & 1) continue;
      const std::size_t p = mismatches[t];
      w[p] = v[p];
      if (!factor_through(w, f.codes(), p)) reachable[mask | (std::size_t{1} << t)] = true;
      w[p] = u[p];
    }
  }
  return reachable.back();
}

bool lee_transformation(const Word& u, const Word& v, const Word& f, unsigned d) {
  const std::size_t n = u.size();
  const auto target = v.codes();
  std::string start(u.codes().begin(), u.codes().end());
  const std::string goal(target.begin(), target.end());
  std::unordered_set<std::string> seen{start};
  std::deque<std::string> queue{start};
  while (!queue.empty()) {
    std::string w = std::move(queue.front());
    queue.pop_front();
    if (w == goal) return true;
    for (std::size_t p = 0; p < n; ++p) {
      const unsigned a = static_cast<Code>(w[p]);
      const unsigned b = target[p];
      if (a == b) continue;
      const unsigned forward = (b + d - a) % d;
      const unsigned backward = d - forward;
      const Code saved = static_cast<Code>(w[p]);
      for (int step : {1, -1}) {
        // Only moves along a shortest path towards v.
        if (step == 1 && forward > backward) continue;
        if (step == -1 && backward > forward) continue;
        w[p] = static_cast<char>((a + d + static_cast<unsigned>(step)) % d);
        const std::span<const Code> view(reinterpret_cast<const Code*>(w.data()), n);
        if (!factor_through(view, f.codes(), p) && seen.insert(w).second)
          queue.push_back(w);
      }
      w[p] = static_cast<char>(saved);
    }
  }
  return false;
}

}  // namespace

std::vector<Word> enumerate_f_free(const Word& f, std::size_t n, unsigned d,
                                   std::uint64_t budget) {
  require_pattern(f, d);
  const std::uint64_t total = vertex_total(n, d, budget);
  std::vector<Word> out;
  std::vector<Code> digits(n, 0);
  for (std::uint64_t id = 0; id < total; ++id) {
    if (id > 0) {
      for (std::size_t p = n; p-- > 0;) {
        if (++digits[p] < d) break;
        digits[p] = 0;
      }
    }
    if (!contains_factor(digits, f.codes())) out.emplace_back(digits, d);
  }
  return out;
}

CubeCheckResult check_isometric_embedding(const Word& f, std::size_t n, unsigned d,
                                          Metric metric, std::uint64_t budget) {
  const FreeSubgraph g = build_subgraph(f, n, d, metric, budget);
  CubeCheckResult result;
  result.n = n;
  result.d = d;
  result.metric = metric;
  result.vertex_count = g.size();

  BlockChecker checker(g);
  for (std::size_t first = 0; first < g.size(); first += block_sources) {
    const std::size_t last = std::min(g.size(), first + block_sources);
    if (checker.block_is_isometric(first, last)) continue;

    for (std::size_t s = first; s < last; ++s) {
      const auto dist = bfs(g, s);
      for (std::size_t t = 0; t < g.size(); ++t) {
        const std::size_t host = g.host_distance(s, t);
        if (dist[t] == host) continue;
        result.isometric = false;
        result.witness = CubeWitness{to_word(g.word(s), d), to_word(g.word(t), d),
                                     host, dist[t]};
        return result;
      }
    }
  }
  return result;
}

bool f_free_transformation_exists(const Word& u, const Word& v, const Word& f,
                                  Metric metric, unsigned d) {
  require_pattern(f, d);
  require_word(u, u.size(), d);
  require_word(v, u.size(), d);
  if (contains_factor(u.codes(), f.codes()) || contains_factor(v.codes(), f.codes()))
    throw error(errc::not_f_free, "endpoints of a transformation must avoid the factor");
  if (u == v || u.codes().size() == 0) return true;
  return metric == Metric::hamming ? hamming_transformation(u, v, f)
                                   : lee_transformation(u, v, f, d);
}

std::optional<CubeCheckResult> first_embedding_failure(const Word& f, unsigned d,
                                                       Metric metric,
                                                       std::size_t n_first,
                                                       std::size_t n_last,
                                                       std::uint64_t budget) {
  for (std::size_t n = n_first; n <= n_last; ++n) {
    auto result = check_isometric_embedding(f, n, d, metric, budget);
    if (!result.isometric) return result;
  }
  return std::nullopt;
}

}  // namespace isoword
