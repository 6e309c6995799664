// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Tolerances and thresholds are fixed here.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "isoword/isoword.hpp"
#include "oracles.hpp"

namespace {

using namespace isoword;
using testing::for_each_word_up_to;

constexpr double max_check_seconds_at_2_20 = 5.0;
constexpr double min_doubling_ratio = 1.6;
constexpr double max_doubling_ratio = 2.6;
constexpr unsigned timing_runs = 5;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void fail(const std::string& why) {
    if (out_.pass) out_.detail = why;
    out_.pass = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  void note(const std::string& text) {
    if (out_.pass) out_.detail = text;
  }
  Outcome outcome() const { return out_; }

 private:
  Outcome out_;
};

Word bin(std::string_view s) { return make_word(s, Alphabet("01")); }
Word z4(std::string_view s) { return make_word(s, Alphabet("0123")); }

Outcome reference_fixtures() {
  Check c;
  const Word w1 = bin("1010011");
  c.expect(has_k_error_border(w1, 2, LceIndex(w1)), "1010011 lacks a 2-error border");
  for (const char* s : {"11", "1111"}) {
    const Word w = bin(s);
    c.expect(!has_k_error_border(w, 2, LceIndex(w)), std::string(s) + " has a 2-error border");
  }

  const Word w2 = bin("101011");
  const LceIndex index(w2);
  std::vector<std::size_t> at_three;
  ScanOptions options;
  options.on_lce = [&](const LceEvent& e) {
    if (e.i == 3) at_three.push_back(e.value);
  };
  const auto hit = first_k_error_border(w2, 2, index, options);
  c.expect(hit && hit->length == 3, "101011: expected the 2-error border of length 3");
  c.expect(at_three == std::vector<std::size_t>{0, 0, 1}, "101011: lce trace at i=3 is not 0, 0, 1");

  const Word f = z4("0301");
  c.expect(has_k_lee_error_border(f, 2, 4, LceIndex(f)), "0301 lacks a 2-Lee-error border");
  c.expect(!is_lee_isometric(f, 4).isometric, "0301 reported Lee-isometric");
  c.note("1010011, 11, 1111, 101011 trace (0,0,1 at i=3), 0301 over Z_4");
  return c.outcome();
}

Outcome hamming_oracle_equivalence() {
  Check c;
  std::size_t words = 0;
  for_each_word_up_to(12, 2, [&](const Word& w) {
    ++words;
    const LceIndex index(w);
    for (std::size_t k = 0; k <= 3; ++k)
      if (find_k_error_borders(w, k, index) != naive_border_scan(w, k))
        c.fail("mismatch on a binary word of length " + std::to_string(w.size()));
  });
  c.note(std::to_string(words) + " binary words x k in {0,1,2,3}");
  return c.outcome();
}

Outcome lee_oracle_equivalence() {
  Check c;
  std::size_t words = 0;
  for_each_word_up_to(7, 4, [&](const Word& w) {
    ++words;
    const LceIndex index(w);
    for (std::size_t k = 0; k <= 3; ++k)
      if (find_k_lee_error_borders(w, k, 4, index) != naive_lee_border_scan(w, k, 4))
        c.fail("mismatch on a Z_4 word of length " + std::to_string(w.size()));
  });
  c.note(std::to_string(words) + " Z_4 words x k in {0,1,2,3}");
  return c.outcome();
}

// Isometric verdicts must survive every n in [|f|, |f|+span]; an embedding
// failure anywhere in that range must come with a non-isometric verdict;
// non-isometric verdicts must be matched by a failure at some n <= |f|+wide.
Outcome characterization(unsigned d, Metric metric, std::size_t max_len, std::size_t span,
                         std::size_t wide) {
  Check c;
  std::size_t words = 0, negative = 0, latest_failure_offset = 0;
  for_each_word_up_to(max_len, d, [&](const Word& f) {
    ++words;
    const bool isometric = metric == Metric::lee ? is_lee_isometric(f, d).isometric
                                                 : is_hamming_isometric(f).isometric;
    const std::size_t m = f.size();
    std::optional<std::size_t> failure;
    for (std::size_t n = m; n <= m + span && !failure; ++n)
      if (!check_isometric_embedding(f, n, d, metric).isometric) failure = n;
    if (isometric) {
      if (failure)
        c.fail("f of length " + std::to_string(m) + " isometric by characterization, "
               "embedding fails at n=" + std::to_string(*failure));
      return;
    }
    ++negative;
    if (!failure)
      if (auto r = first_embedding_failure(f, d, metric, m + span + 1, m + wide)) failure = r->n;
    if (!failure) {
      c.fail("non-isometric f of length " + std::to_string(m) +
             " without embedding failure up to n=" + std::to_string(m + wide));
      return;
    }
    latest_failure_offset = std::max(latest_failure_offset, *failure - m);
  });
  c.note(std::to_string(words) + " words, " + std::to_string(negative) +
         " non-isometric, every failure by n = |f|+" + std::to_string(latest_failure_offset));
  return c.outcome();
}

Outcome cube_example() {
  Check c;
  const Word f = z4("0301");
  const auto r = check_isometric_embedding(f, 6, 4, Metric::lee);
  c.expect(!r.isometric, "Q_6^4(0301) reported isometric");
  c.expect(!f_free_transformation_exists(z4("030001"), z4("030201"), f, Metric::lee, 4),
           "found an f-free path of length 2 from 030001 to 030201");
  if (r.witness)
    c.note("witness " + spell(r.witness->u, Alphabet("0123")) + " / " +
           spell(r.witness->v, Alphabet("0123")) + ", host " +
           std::to_string(r.witness->host_distance) + ", subgraph " +
           std::to_string(r.witness->subgraph_distance));
  return c.outcome();
}

Outcome query_budget() {
  Check c;
  std::size_t inputs = 0;
  const auto probe = [&](const Word& w) {
    ++inputs;
    const LceIndex index(w);
    const std::size_t n = w.size();
    for (std::size_t k = 0; k <= 3; ++k) {
      ScanStats ham, lee;
      find_k_error_borders(w, k, index, {&ham, {}});
      has_k_error_border(w, k, index, {&ham, {}});
      if (w.alphabet_size() <= 4) find_k_lee_error_borders(w, k, 4, index, {&lee, {}});
      // Two Hamming scans share `ham`, hence the factor 2.
      if (ham.lce_queries > 2 * (k + 1) * (n - 1) || ham.max_queries_per_index > k + 1 ||
          lee.lce_queries > (k + 1) * (n - 1) || lee.max_queries_per_index > k + 1)
        c.fail("query budget exceeded at n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }
  };
  for_each_word_up_to(12, 2, probe);
  for_each_word_up_to(6, 4, probe);
  std::mt19937_64 rng(2026);
  for (int t = 0; t < 200; ++t) probe(testing::random_word(rng, 1 + rng() % 5000, 2 + rng() % 3));
  c.note(std::to_string(inputs) + " inputs, per-index queries <= k+1, total <= (k+1)(n-1)");
  return c.outcome();
}

Outcome linear_scaling() {
  Check c;
  std::vector<std::size_t> sizes;
  for (std::size_t e = 16; e <= 20; ++e) sizes.push_back(std::size_t{1} << e);
  const auto rows = cli::bench_rows(sizes, 2, Metric::hamming, 2, 0x5eed, timing_runs);

  std::ostringstream ratios;
  ratios.precision(2);
  ratios << std::fixed;
  for (std::size_t t = 1; t < rows.size(); ++t) {
    const double r = rows[t].scan_ms / rows[t - 1].scan_ms;
    ratios << (t > 1 ? " " : "") << r;
    if (r < min_doubling_ratio || r > max_doubling_ratio) {
      std::ostringstream why;
      why << "scan time ratio " << r << " from n=" << rows[t - 1].n << " to " << rows[t].n
          << " outside [" << min_doubling_ratio << ", " << max_doubling_ratio << "]";
      c.fail(why.str());
    }
  }
  const auto& last = rows.back();
  const double total_s = last.check_ms / 1000.0;
  if (total_s >= max_check_seconds_at_2_20)
    c.fail("check at n=2^20 took " + std::to_string(total_s) + " s");
  std::ostringstream note;
  note.precision(3);
  note << std::fixed << "n=2^20: check (index + scan) " << total_s << " s; scan doubling ratios "
       << ratios.str();
  c.note(note.str());
  return c.outcome();
}

Outcome lce_correctness() {
  Check c;
  for_each_word_up_to(12, 2, [&](const Word& w) {
    const LceIndex index(w);
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < w.size(); ++j)
        if (index.lce(i, j) != testing::naive_lce(w, i, j))
          c.fail("binary word of length " + std::to_string(w.size()));
  });
  std::mt19937_64 rng(1000);
  for (int t = 0; t < 1000; ++t) {
    const Word w = testing::random_word(rng, 200, 4);
    const LceIndex index(w);
    for (std::size_t i = 0; i < 200; ++i)
      for (std::size_t j = 0; j < 200; ++j)
        if (index.lce(i, j) != testing::naive_lce(w, i, j)) c.fail("random Z_4 word");
  }
  c.note("all binary words up to length 12; 1000 random length-200 words over 4 letters");
  return c.outcome();
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"reference fixtures", reference_fixtures},
      {"oracle equivalence (Hamming)", hamming_oracle_equivalence},
      {"oracle equivalence (Lee)", lee_oracle_equivalence},
      {"characterization (Hamming, binary |f|<=5)",
       [] { return characterization(2, Metric::hamming, 5, 4, 6); }},
      {"characterization (Lee, Z_4 |f|<=4)",
       [] { return characterization(4, Metric::lee, 4, 3, 6); }},
      {"cube example 0301", cube_example},
      {"complexity (a): lce query budget", query_budget},
      {"complexity (b): n=2^20 time and doubling ratios", linear_scaling},
      {"lce correctness", lce_correctness},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criterion.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", criterion.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
