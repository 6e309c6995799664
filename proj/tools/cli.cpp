#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "isoword/isoword.hpp"

namespace isoword::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string word;
  std::optional<std::string> alphabet;
  std::optional<unsigned> d;
  std::string metric = "hamming";
  std::size_t k = 2;
  std::optional<std::string> n_range;
  std::size_t maxlen = 4;
  std::uint64_t budget = default_vertex_budget;
  std::uint64_t seed = 0x5eed;
  unsigned runs = 5;
  bool json = false;
};

class usage_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  Alphabet alphabet;
  unsigned d;
  Metric metric;
};

Context resolve(const Options& o) {
  Metric metric;
  if (o.metric == "hamming") {
    metric = Metric::hamming;
  } else if (o.metric == "lee") {
    metric = Metric::lee;
  } else {
    throw usage_error("--metric must be hamming or lee");
  }
  // Without --alphabet the symbols are the first d digits, d defaulting to 2.
  Alphabet alphabet = o.alphabet ? Alphabet(*o.alphabet)
                                 : Alphabet::digits(o.d.value_or(2));
  const unsigned d = o.d.value_or(alphabet.size());
  if (d < alphabet.size())
    throw usage_error("--d " + std::to_string(d) + " is smaller than the alphabet (" +
                      std::to_string(alphabet.size()) + " symbols)");
  return {std::move(alphabet), d, metric};
}

Word parse_word(const std::string& text, const Context& ctx) {
  const Word w = make_word(text, ctx.alphabet);
  return Word(std::vector<Code>(w.codes().begin(), w.codes().end()), ctx.d);
}

json border_json(const BorderEntry& b) {
  return json{{"length", b.length}, {"positions", b.mismatch_positions},
              {"distance", b.distance}};
}

void print_border(std::ostream& out, const Word& w, const Alphabet& a,
                  const BorderEntry& b) {
  const Word padded(std::vector<Code>(w.codes().begin(), w.codes().end()),
                    std::max<unsigned>(w.alphabet_size(), a.size()));
  out << "  length " << b.length << ", distance " << b.distance << ", positions [";
  for (std::size_t t = 0; t < b.mismatch_positions.size(); ++t)
    out << (t ? ", " : "") << b.mismatch_positions[t];
  out << "]\n";
  out << "    prefix " << spell(padded.slice(0, b.length), a) << "\n";
  out << "    suffix " << spell(padded.slice(w.size() - b.length, b.length), a) << "\n";
}

IsometryVerdict decide(const Word& w, const Context& ctx) {
  return ctx.metric == Metric::lee ? is_lee_isometric(w, ctx.d)
                                   : is_hamming_isometric(w);
}

int cmd_check(const Options& o, std::ostream& out) {
  const Context ctx = resolve(o);
  const Word w = parse_word(o.word, ctx);
  const IsometryVerdict v = decide(w, ctx);

  if (o.json) {
    json j{{"word", o.word}, {"metric", to_string(ctx.metric)},
           {"isometric", v.isometric}};
    if (v.witness) j["witness"] = border_json(*v.witness);
    out << j.dump() << "\n";
  } else {
    out << o.word << ": " << (v.isometric ? "isometric" : "not isometric") << " ("
        << to_string(ctx.metric) << ")\n";
    if (v.witness) {
      out << "witness 2-" << (ctx.metric == Metric::lee ? "Lee-" : "")
          << "error border:\n";
      print_border(out, w, ctx.alphabet, *v.witness);
    }
  }
  return v.isometric ? exit_affirmative : exit_negative;
}

int cmd_border(const Options& o, std::ostream& out) {
  const Context ctx = resolve(o);
  if (ctx.metric == Metric::lee && ctx.d > 8)
    throw usage_error("--metric lee supports d <= 8 for border");
  const Word w = parse_word(o.word, ctx);
  const LceIndex index(w);
  const BorderReport report = ctx.metric == Metric::lee
                                  ? find_k_lee_error_borders(index.word(), o.k, ctx.d, index)
                                  : find_k_error_borders(index.word(), o.k, index);
  if (o.json) {
    json borders = json::array();
    for (const auto& b : report.borders) borders.push_back(border_json(b));
    out << json{{"word", o.word}, {"k", o.k}, {"metric", to_string(ctx.metric)},
                {"borders", borders}}
               .dump()
        << "\n";
  } else {
    out << o.word << ": " << report.borders.size() << " border(s) at "
        << to_string(ctx.metric) << " distance " << o.k << "\n";
    for (const auto& b : report.borders) print_border(out, w, ctx.alphabet, b);
  }
  return exit_affirmative;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const Context ctx = resolve(o);
  std::uint64_t total = 0;
  std::uint64_t layer = 1;
  for (std::size_t len = 1; len <= o.maxlen; ++len) {
    if (layer > o.budget / ctx.alphabet.size())
      throw error(errc::budget_exceeded, "enumeration exceeds the budget");
    layer *= ctx.alphabet.size();
    total += layer;
  }
  if (total > o.budget) throw error(errc::budget_exceeded, "enumeration exceeds the budget");

  json counts = json::array();
  json words = json::array();
  const unsigned a = ctx.alphabet.size();
  for (std::size_t len = 1; len <= o.maxlen; ++len) {
    std::vector<Code> codes(len, 0);
    std::size_t count = 0;
    for (;;) {
      const Word w(codes, ctx.d);
      if (!decide(w, ctx).isometric) {
        ++count;
        words.push_back(spell(Word(codes, a), ctx.alphabet));
      }
      std::size_t p = len;
      while (p > 0 && ++codes[p - 1] == a) codes[--p] = 0;
      if (p == 0) break;
    }
    counts.push_back(json{{"length", len}, {"count", count}});
  }

  if (o.json) {
    out << json{{"alphabet", ctx.alphabet.symbols()}, {"metric", to_string(ctx.metric)},
                {"d", ctx.d}, {"maxlen", o.maxlen}, {"counts", counts}, {"words", words}}
               .dump()
        << "\n";
  } else {
    out << "non-isometric words (" << to_string(ctx.metric) << ", alphabet "
        << ctx.alphabet.symbols() << ")\n";
    for (const auto& c : counts)
      out << "  length " << c["length"].get<std::size_t>() << ": "
          << c["count"].get<std::size_t>() << "\n";
    for (const auto& w : words) out << w.get<std::string>() << "\n";
  }
  return exit_affirmative;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Context ctx = resolve(o);
  if (ctx.metric == Metric::lee && ctx.d > 8)
    throw usage_error("--metric lee supports d <= 8 for verify");
  const Word w = parse_word(o.word, ctx);

  // The characterization exists for Hamming on any alphabet and for Lee when
  // d <= 4; beyond that only the oracle verdicts are reported.
  std::optional<IsometryVerdict> verdict;
  if (ctx.metric == Metric::hamming || ctx.d <= 4) verdict = decide(w, ctx);

  const auto [n_first, n_last] =
      o.n_range ? parse_range(*o.n_range)
                : std::pair{w.size(), w.size() + (ctx.metric == Metric::lee ? 3 : 4)};

  json results = json::array();
  std::optional<std::size_t> failure_at;
  if (!o.json)
    out << o.word << " (" << to_string(ctx.metric) << ", d = " << ctx.d << ")\n";
  for (std::size_t n = n_first; n <= n_last; ++n) {
    const CubeCheckResult r = check_isometric_embedding(w, n, ctx.d, ctx.metric, o.budget);
    json row{{"n", n}, {"isometric", r.isometric}};
    if (r.witness) {
      const auto& x = *r.witness;
      row["witness"] = json{
          {"u", spell(x.u, ctx.alphabet)},
          {"v", spell(x.v, ctx.alphabet)},
          {"host_distance", x.host_distance},
          {"subgraph_distance", x.subgraph_distance == infinite_distance
                                    ? json(nullptr)
                                    : json(x.subgraph_distance)}};
    }
    if (!r.isometric && !failure_at) failure_at = n;
    if (!o.json) {
      out << "  n = " << n << ": " << (r.isometric ? "isometric" : "not isometric");
      if (r.witness) {
        out << "  u = " << spell(r.witness->u, ctx.alphabet)
            << ", v = " << spell(r.witness->v, ctx.alphabet) << ", host "
            << r.witness->host_distance << ", subgraph ";
        if (r.witness->subgraph_distance == infinite_distance)
          out << "unreachable";
        else
          out << r.witness->subgraph_distance;
      }
      out << "\n";
    }
    results.push_back(std::move(row));
  }

  // An isometric verdict is contradicted by any failure; a non-isometric one
  // is never contradicted by a sweep that finds none.
  std::optional<bool> agrees;
  if (verdict) agrees = !(verdict->isometric && failure_at);

  if (o.json) {
    json j{{"word", o.word}, {"metric", to_string(ctx.metric)}, {"results", results},
           {"failure_found", failure_at.has_value()}};
    j["agrees"] = agrees ? json(*agrees) : json(nullptr);
    j["characterization_isometric"] = verdict ? json(verdict->isometric) : json(nullptr);
    out << j.dump() << "\n";
  } else {
    if (verdict)
      out << "characterization: " << (verdict->isometric ? "isometric" : "not isometric")
          << "\n";
    else
      out << "characterization: none for this metric and alphabet size\n";
    if (failure_at)
      out << "first embedding failure at n = " << *failure_at << "\n";
    else
      out << "no failure found up to n = " << n_last << "\n";
    if (agrees) out << (*agrees ? "agrees" : "DISAGREES") << "\n";
  }
  return agrees.value_or(true) ? exit_affirmative : exit_negative;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const Context ctx = resolve(o);
  const auto [lo, hi] = o.n_range ? parse_range(*o.n_range) : std::pair<std::size_t, std::size_t>{16, 20};
  if (hi > 30) throw usage_error("bench sizes are log2 exponents, at most 30");
  if (o.runs == 0) throw usage_error("--runs must be positive");

  std::vector<std::size_t> sizes;
  for (std::size_t e = lo; e <= hi; ++e) sizes.push_back(std::size_t{1} << e);
  const auto rows = bench_rows(sizes, o.k, ctx.metric, ctx.d, o.seed, o.runs);

  if (o.json) {
    json jr = json::array();
    for (const auto& r : rows)
      jr.push_back(json{{"n", r.n}, {"build_ms", r.build_ms}, {"scan_ms", r.scan_ms},
                        {"check_ms", r.check_ms}, {"lce_queries", r.lce_queries}});
    out << json{{"seed", o.seed}, {"k", o.k}, {"metric", to_string(ctx.metric)},
                {"rows", jr}}
               .dump()
        << "\n";
  } else {
    out << "seed " << o.seed << ", k = " << o.k << ", " << to_string(ctx.metric)
        << ", d = " << ctx.d << ", median of " << o.runs << " runs\n";
    out << std::setw(10) << "n" << std::setw(12) << "build_ms" << std::setw(12)
        << "scan_ms" << std::setw(12) << "check_ms" << std::setw(14) << "lce_queries"
        << std::setw(8) << "ratio" << "\n";
    out << std::fixed << std::setprecision(3);
    for (std::size_t t = 0; t < rows.size(); ++t) {
      const auto& r = rows[t];
      out << std::setw(10) << r.n << std::setw(12) << r.build_ms << std::setw(12)
          << r.scan_ms << std::setw(12) << r.check_ms << std::setw(14) << r.lce_queries;
      if (t > 0 && rows[t - 1].scan_ms > 0)
        out << std::setw(8) << r.scan_ms / rows[t - 1].scan_ms;
      out << "\n";
    }
  }
  return exit_affirmative;
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  return xs.size() % 2 ? xs[m] : (xs[m - 1] + xs[m]) / 2;
}

}  // namespace

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const std::size_t v = std::stoull(text, &used);
      if (used != text.size()) throw usage_error("");
      return {v, v};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const std::size_t lo = std::stoull(a, &used);
    if (used != a.size()) throw usage_error("");
    const std::size_t hi = std::stoull(b, &used);
    if (used != b.size() || hi < lo) throw usage_error("");
    return {lo, hi};
  } catch (const std::logic_error&) {
  } catch (const usage_error&) {
  }
  throw usage_error("expected a range a..b, got '" + text + "'");
}

namespace {

struct BenchInput {
  Word word;
  LceIndex index;
  BenchRow row;
  std::vector<double> build, scan, check;
};

}  // namespace

std::vector<BenchRow> bench_rows(const std::vector<std::size_t>& sizes, std::size_t k,
                                 Metric metric, unsigned d, std::uint64_t seed,
                                 unsigned runs) {
  using clock = std::chrono::steady_clock;
  const auto ms = [](clock::duration dt) {
    return std::chrono::duration<double, std::milli>(dt).count();
  };
  // Each sample repeats an operation until min_sample has elapsed and records
  // the mean, so short scans are not dominated by timer and scheduler noise.
  constexpr auto min_sample = std::chrono::milliseconds(100);
  const auto timed = [&](auto&& op) {
    std::size_t reps = 0;
    const auto t0 = clock::now();
    auto elapsed = clock::duration::zero();
    do {
      op();
      ++reps;
      elapsed = clock::now() - t0;
    } while (elapsed < min_sample);
    return ms(elapsed) / static_cast<double>(reps);
  };

  std::vector<BenchInput> inputs;
  inputs.reserve(sizes.size());
  for (std::size_t n : sizes) {
    std::mt19937_64 rng(seed + n);
    std::uniform_int_distribution<unsigned> letter(0, d - 1);
    std::vector<Code> codes(n);
    for (auto& c : codes) c = static_cast<Code>(letter(rng));
    Word word(std::move(codes), d);
    LceIndex index(word);
    inputs.push_back(BenchInput{std::move(word), std::move(index), {}, {}, {}, {}});
    inputs.back().row.n = n;
  }

  // Sizes are interleaved within each run so that machine-wide slowdowns hit
  // every size alike.
  for (unsigned r = 0; r < runs; ++r) {
    for (auto& in : inputs) {
      in.build.push_back(timed([&] { LceIndex fresh(in.word); }));
      in.scan.push_back(timed([&] {
        ScanStats stats;
        if (metric == Metric::lee)
          find_k_lee_error_borders(in.index.word(), k, d, in.index, {&stats, {}});
        else
          find_k_error_borders(in.index.word(), k, in.index, {&stats, {}});
        in.row.lce_queries = stats.lce_queries;
      }));
      in.check.push_back(timed([&] {
        if (metric == Metric::lee && d <= 4)
          is_lee_isometric(in.word, d);
        else
          is_hamming_isometric(in.word);
      }));
    }
  }

  std::vector<BenchRow> rows;
  for (auto& in : inputs) {
    in.row.build_ms = median(in.build);
    in.row.scan_ms = median(in.scan);
    in.row.check_ms = median(in.check);
    rows.push_back(in.row);
  }
  return rows;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide Hamming- and Lee-isometricity of words", "isoword"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--alphabet", o.alphabet,
                    "Symbols in code order (default: the first d digits, d = 2)");
    sub->add_option("--d", o.d, "Alphabet size d of Z_d (default: alphabet length)")
        ->check(CLI::Range(1u, max_alphabet_size));
    sub->add_option("--metric", o.metric, "hamming or lee")
        ->check(CLI::IsMember({"hamming", "lee"}));
    sub->add_flag("--json", o.json, "Emit JSON");
  };

  auto* check = app.add_subcommand("check", "Decide whether a word is isometric");
  check->add_option("word", o.word, "The word")->required();
  add_common(check);

  auto* border = app.add_subcommand("border", "List all borders at exact distance k");
  border->add_option("word", o.word, "The word")->required();
  border->add_option("--k", o.k, "Target distance")->required();
  add_common(border);

  auto* enumerate = app.add_subcommand("enumerate", "List non-isometric words up to a length");
  enumerate->add_option("--maxlen", o.maxlen, "Longest word length")->required();
  enumerate->add_option("--budget", o.budget, "Maximum number of words examined");
  add_common(enumerate);

  auto* verify = app.add_subcommand("verify", "Cross-check against the n-cube oracle");
  verify->add_option("word", o.word, "The forbidden factor f")->required();
  verify->add_option("--n", o.n_range, "Vertex word lengths a..b");
  verify->add_option("--budget", o.budget, "Vertex budget per cube");
  add_common(verify);

  auto* bench = app.add_subcommand("bench", "Time index construction and scans");
  bench->add_option("--n", o.n_range, "log2 word sizes a..b (default 16..20)");
  bench->add_option("--k", o.k, "Target distance (default 2)");
  bench->add_option("--seed", o.seed, "Random seed");
  bench->add_option("--runs", o.runs, "Repetitions per size; times are medians");
  add_common(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_affirmative : exit_error;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*border) return cmd_border(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*bench) return cmd_bench(o, out);
  } catch (const unknown_symbol_error& e) {
    err << "error: UnknownSymbol: " << e.what() << "\n";
    return exit_error;
  } catch (const error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_error;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}

}  // namespace isoword::cli
