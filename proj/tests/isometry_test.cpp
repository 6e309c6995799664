#include <gtest/gtest.h>

#include "isoword/cube_oracle.hpp"
#include "isoword/distance.hpp"
#include "isoword/error.hpp"
#include "isoword/isometry.hpp"
#include "oracles.hpp"

namespace isoword {
namespace {

using testing::for_each_word_up_to;
using testing::word;

Word z4(std::string_view text) { return word(text, "0123"); }

void expect_witness_at_distance_two(const Word& f, const IsometryVerdict& v, unsigned d) {
  if (v.isometric) {
    EXPECT_FALSE(v.witness.has_value());
    return;
  }
  ASSERT_TRUE(v.witness.has_value());
  const auto len = v.witness->length;
  const Word prefix = f.slice(0, len);
  const Word suffix = f.slice(f.size() - len, len);
  const auto dist = v.metric == Metric::lee ? lee_distance(prefix, suffix, d)
                                            : hamming_distance(prefix, suffix);
  EXPECT_EQ(dist, 2u);
}

TEST(HammingIsometryTest, KnownExamples) {
  EXPECT_TRUE(is_hamming_isometric(word("11")).isometric);
  for (int n = 1; n <= 20; ++n)
    EXPECT_TRUE(is_hamming_isometric(word(std::string(n, '1'))).isometric);

  const auto v = is_hamming_isometric(word("1010011"));
  EXPECT_FALSE(v.isometric);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->length, 4u);  // longest of the borders {4, 3}
  expect_witness_at_distance_two(word("1010011"), v, 2);

  EXPECT_FALSE(is_hamming_isometric(word("1100")).isometric);
}

TEST(HammingIsometryTest, SingleLetterWordsAreIsometric) {
  for (char c : std::string("0123")) {
    EXPECT_TRUE(is_hamming_isometric(word(std::string(1, c), "0123")).isometric);
    EXPECT_TRUE(is_lee_isometric(word(std::string(1, c), "0123"), 4).isometric);
  }
}

TEST(HammingIsometryTest, EmptyWord) {
  try {
    is_hamming_isometric(word(""));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::empty_word);
  }
  EXPECT_THROW(is_lee_isometric(word(""), 4), error);
}

TEST(HammingIsometryTest, ReversalInvariance) {
  for_each_word_up_to(12, 2, [](const Word& f) {
    ASSERT_EQ(is_hamming_isometric(f).isometric, is_hamming_isometric(f.reversed()).isometric);
  });
  for_each_word_up_to(7, 3, [](const Word& f) {
    ASSERT_EQ(is_hamming_isometric(f).isometric, is_hamming_isometric(f.reversed()).isometric);
  });
}

TEST(HammingIsometryTest, WitnessIsAtDistanceTwo) {
  for_each_word_up_to(10, 3, [](const Word& f) {
    if (f.size() > 7) return;
    expect_witness_at_distance_two(f, is_hamming_isometric(f), 3);
    expect_witness_at_distance_two(f, is_lee_isometric(Word(std::vector<Code>(f.codes().begin(), f.codes().end()), 4), 4), 4);
  });
}

TEST(LeeIsometryTest, KnownExamples) {
  const auto v = is_lee_isometric(z4("0301"), 4);
  EXPECT_FALSE(v.isometric);
  EXPECT_EQ(v.metric, Metric::lee);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->length, 2u);

  EXPECT_TRUE(is_lee_isometric(word("11"), 2).isometric);
}

TEST(LeeIsometryTest, UnsupportedAlphabetSize) {
  try {
    is_lee_isometric(z4("0301"), 5);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::unsupported_alphabet_size);
  }
  EXPECT_THROW(is_lee_isometric(z4("0301"), 3), error);  // code 3 not in Z_3
}

TEST(LeeIsometryTest, SmallAlphabetsCoincideWithHamming) {
  for_each_word_up_to(12, 2, [](const Word& f) {
    const auto lee = is_lee_isometric(f, 2);
    const auto ham = is_hamming_isometric(f);
    ASSERT_EQ(lee.isometric, ham.isometric);
    ASSERT_EQ(lee.witness, ham.witness);
  });
  for_each_word_up_to(7, 3, [](const Word& f) {
    ASSERT_EQ(is_lee_isometric(f, 3).isometric, is_hamming_isometric(f).isometric);
  });
}

// The characterizations against the n-cube ground truth. An isometric verdict
// must hold at every n of the sweep; a failure at any n must come with a
// non-isometric verdict; every non-isometric verdict must fail somewhere in
// the wider range.
void expect_agreement(const Word& f, unsigned d, Metric metric, bool isometric,
                      std::size_t span, std::size_t wide_span) {
  const std::size_t m = f.size();
  for (std::size_t n = m; n <= m + span; ++n) {
    const auto r = check_isometric_embedding(f, n, d, metric);
    if (!r.isometric) {
      ASSERT_FALSE(isometric) << "embedding fails at n=" << n;
      return;
    }
  }
  ASSERT_TRUE(isometric || first_embedding_failure(f, d, metric, m + span + 1, m + wide_span))
      << "no embedding failure up to n=" << m + wide_span;
}

TEST(CharacterizationTest, BinaryHammingUpTo7) {
  for_each_word_up_to(7, 2, [](const Word& f) {
    expect_agreement(f, 2, Metric::hamming, is_hamming_isometric(f).isometric, 4, 6);
  });
}

TEST(CharacterizationTest, TernaryHammingAndLeeUpTo3) {
  for_each_word_up_to(3, 3, [](const Word& f) {
    const bool iso = is_hamming_isometric(f).isometric;
    expect_agreement(f, 3, Metric::hamming, iso, 3, 4);
    expect_agreement(f, 3, Metric::lee, is_lee_isometric(f, 3).isometric, 3, 4);
  });
}

TEST(CharacterizationTest, LeeZ4UpTo3) {
  for_each_word_up_to(3, 4, [](const Word& f) {
    expect_agreement(f, 4, Metric::lee, is_lee_isometric(f, 4).isometric, 3, 3);
  });
}

}  // namespace
}  // namespace isoword
