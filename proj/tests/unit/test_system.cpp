#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mfa/error.hpp"
#include "mfa/system.hpp"
#include "mfa/word.hpp"
#include "oracles.hpp"

namespace mfa {
namespace {

ErrorKind kind_of(const RawSystem& raw) {
  try {
    validate_system(raw);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::Io;
}

TEST(ValidateSystem, SymmetricIsDegenerate) {
  const auto sys = validate_system({{0.5, 0.5}, {0.5, 0.5}, std::nullopt});
  EXPECT_TRUE(sys.degenerate());
  EXPECT_FALSE(sys.has_geometry());
}

TEST(ValidateSystem, ExampleSystemIsValid) {
  const auto sys = oracle::s1();
  EXPECT_FALSE(sys.degenerate());
  EXPECT_TRUE(sys.has_geometry());
}

TEST(ValidateSystem, Errors) {
  EXPECT_EQ(kind_of({{0.3, 0.3}, {0.5, 0.5}, std::nullopt}), ErrorKind::WeightSum);
  EXPECT_EQ(kind_of({{0.5, 0.5}, {0.5, 1.0}, std::nullopt}), ErrorKind::Range);
  EXPECT_EQ(kind_of({{1.0, 0.0}, {0.5, 0.5}, std::nullopt}), ErrorKind::Range);
  EXPECT_EQ(kind_of({{0.5, 0.5}, {0.5}, std::nullopt}), ErrorKind::Arity);
  EXPECT_EQ(kind_of({{1.0}, {0.5}, std::nullopt}), ErrorKind::Arity);
  EXPECT_EQ(kind_of({{0.5, 0.5}, {0.5, 0.5}, std::vector<double>{0.0, 0.4}}), ErrorKind::Overlap);
  EXPECT_EQ(kind_of({{0.5, 0.5}, {0.5, 0.5}, std::vector<double>{0.0, 0.6}}), ErrorKind::Range);
  EXPECT_EQ(kind_of({{0.5, 0.5}, {0.5, 0.5}, std::vector<double>{0.0}}), ErrorKind::Arity);
}

TEST(ValidateSystem, WeightSumToleranceIsTight) {
  EXPECT_NO_THROW(validate_system({{0.5, 0.5 + 5e-13}, {0.5, 0.5}, std::nullopt}));
  EXPECT_EQ(kind_of({{0.5, 0.5 + 1e-11}, {0.5, 0.5}, std::nullopt}), ErrorKind::WeightSum);
}

TEST(ValidateSystem, TouchingEndpointsAllowed) {
  EXPECT_NO_THROW(validate_system({{0.25, 0.75}, {0.25, 0.75}, std::vector<double>{0.75, 0.0}}));
}

TEST(ValidateSystem, Idempotent) {
  std::mt19937_64 gen(3);
  for (int i = 0; i < 50; ++i) {
    const auto sys = oracle::random_system(gen, 2 + i % 3, i % 2 == 0);
    const auto again = validate_system(sys.raw());
    EXPECT_EQ(system_fingerprint(sys), system_fingerprint(again));
    EXPECT_EQ(sys.degenerate(), again.degenerate());
  }
}

TEST(WordStats, Examples) {
  const auto sys = oracle::s1();
  const auto a = word_stats(sys, parse_word("11"));
  EXPECT_NEAR(a.p(), 1.0 / 9.0, 1e-15);
  EXPECT_NEAR(a.r(), 0.25, 1e-15);
  EXPECT_NEAR(a.ratio, std::log(1.0 / 9.0) / std::log(0.25), 1e-14);
  EXPECT_NEAR(a.ratio, 1.58496, 1e-5);
  EXPECT_NEAR(word_stats(sys, parse_word("22")).ratio, 0.58496, 1e-5);
  EXPECT_NEAR(word_stats(sys, parse_word("12")).ratio, 1.08496, 1e-5);
}

TEST(WordStats, EmptyWord) {
  try {
    word_stats(oracle::s1(), Word{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyWord);
  }
}

TEST(WordStats, LongWordsStayFinite) {
  const auto sys = oracle::s1();
  const Word w = eventually_periodic({}, parse_word("1"), 100000);
  const auto st = word_stats(sys, w);
  EXPECT_TRUE(std::isfinite(st.log_p));
  EXPECT_NEAR(st.ratio, std::log(3.0) / std::log(2.0), 1e-10);
}

TEST(WordStats, RatioWithinAlphaBoundsAndMultiplicative) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 2 + trial % 3;
    const auto sys = oracle::random_system(gen, m);
    const auto [lo, hi] = alpha_bounds(sys);
    std::uniform_int_distribution<int> sym(0, static_cast<int>(m) - 1);
    std::uniform_int_distribution<int> len(1, 40);
    Word a, b;
    for (int k = len(gen); k > 0; --k) a.push_back(static_cast<Symbol>(sym(gen)));
    for (int k = len(gen); k > 0; --k) b.push_back(static_cast<Symbol>(sym(gen)));
    const auto sa = word_stats(sys, a);
    const auto sb = word_stats(sys, b);
    const auto sab = word_stats(sys, concat(a, b));
    EXPECT_GE(sa.ratio, lo - 1e-12);
    EXPECT_LE(sa.ratio, hi + 1e-12);
    EXPECT_NEAR(sab.log_p, sa.log_p + sb.log_p, 1e-12);
    EXPECT_NEAR(sab.log_r, sa.log_r + sb.log_r, 1e-12);
  }
}

TEST(AlphaBounds, Examples) {
  const auto b = alpha_bounds(oracle::s1());
  EXPECT_NEAR(b.min, std::log(2.0 / 3.0) / std::log(0.5), 1e-15);
  EXPECT_NEAR(b.max, std::log(1.0 / 3.0) / std::log(0.5), 1e-15);

  const auto d = alpha_bounds(validate_system({{0.5, 0.5}, {0.5, 0.5}, std::nullopt}));
  EXPECT_DOUBLE_EQ(d.min, 1.0);
  EXPECT_DOUBLE_EQ(d.max, 1.0);

  const auto e = alpha_bounds(validate_system({{0.25, 0.75}, {0.25, 0.5}, std::nullopt}));
  EXPECT_NEAR(e.min, 0.41504, 1e-5);
  EXPECT_NEAR(e.max, 1.0, 1e-15);
}

TEST(Words, ParseAndFormat) {
  EXPECT_EQ(parse_word("121"), (Word{0, 1, 0}));
  EXPECT_EQ(parse_word("1,12,3"), (Word{0, 11, 2}));
  EXPECT_EQ(format_word(Word{0, 1, 0}, 2), "121");
  EXPECT_EQ(format_word(Word{0, 11, 2}, 12), "1,12,3");
  EXPECT_THROW(parse_word("1a"), Error);
  EXPECT_THROW(parse_word("0"), Error);
  EXPECT_EQ(eventually_periodic(parse_word("2"), parse_word("12"), 6), parse_word("212121"));
}

}  // namespace
}  // namespace mfa
