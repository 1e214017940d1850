#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "yf/pathcount.hpp"

namespace {

using yf::Integer;
using yf::Rational;
using yf::Word;

Word w(const char* s) { return yf::parse_cli(s); }

TEST(PathCount, SmallCases) {
  EXPECT_EQ(yf::oracle::enumerate_paths(Word{}, w("21")), 2);
  EXPECT_EQ(yf::d_paths_dp(Word{}, w("21")), 2);
  EXPECT_EQ(yf::d_paths_dp(w("212"), w("212")), 1);
  EXPECT_EQ(yf::d_paths_dp(w("21"), w("2")), 0);
  EXPECT_EQ(yf::d_paths_dp(w("2"), w("111")), 0);
}

TEST(PathCount, FormulaExamples) {
  EXPECT_EQ(yf::oracle::enumerate_paths(Word{}, w("21221")), 56);
  EXPECT_EQ(yf::d_paths_formula(Word{}, w("21221")), 56);
  EXPECT_EQ(yf::d_paths_formula(Word{}, w("12")), yf::oracle::enumerate_paths(Word{}, w("12")));
  EXPECT_EQ(yf::d_paths_formula(Word{}, w("12")), 1);
  EXPECT_EQ(yf::d_paths_formula(w("21"), w("21221")), yf::oracle::enumerate_paths(w("21"), w("21221")));
  EXPECT_THROW(yf::d_paths_formula(w("21"), w("2")), std::invalid_argument);
}

TEST(PathCount, FromEmpty) {
  EXPECT_EQ(yf::d_from_empty(Word{}), 1);
  EXPECT_EQ(yf::d_from_empty(w("221")), 8);
  EXPECT_EQ(yf::oracle::enumerate_paths(Word{}, w("221")), 8);
  EXPECT_EQ(yf::d_from_empty(Word::ones(9)), 1);
}

TEST(PathCount, Plancherel) {
  EXPECT_EQ(yf::plancherel(0, Word{}), 1);
  EXPECT_EQ(yf::plancherel(3, w("21")), Rational(2, 3));
  Rational total = 0;
  for (const auto& v : yf::enumerate_level(3).words) total += yf::plancherel(3, v);
  EXPECT_EQ(total, 1);
  EXPECT_THROW(yf::plancherel(4, w("21")), std::invalid_argument);
}

TEST(PathCountProperty, DynamicProgramMatchesEnumeration) {
  for (std::size_t ny = 0; ny <= 9; ++ny)
    for (const auto& y : yf::enumerate_level(ny).words) {
      yf::oracle::UpPathCounter paths_to_y(y);
      const auto below = yf::down_path_counts(y);
      for (std::size_t nx = 0; nx <= ny; ++nx)
        for (const auto& x : yf::enumerate_level(nx).words) {
          const auto it = below[nx].find(x);
          const Integer dp = it == below[nx].end() ? Integer(0) : it->second;
          EXPECT_EQ(dp, paths_to_y(x)) << x << " -> " << y;
          EXPECT_EQ(yf::d_paths_dp(x, y), dp);
        }
    }
}

TEST(PathCountProperty, FormulaMatchesOracleOnRandomPairs) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t ny = std::uniform_int_distribution<std::size_t>(0, 14)(rng);
    const std::size_t nx = std::uniform_int_distribution<std::size_t>(0, ny)(rng);
    const Word y = yf::oracle::random_word(rng, ny);
    // Bias x towards words below y by walking down from y.
    Word x = y;
    while (x.rank() > nx) {
      const auto downs = yf::down_neighbors(x);
      x = downs[std::uniform_int_distribution<std::size_t>(0, downs.size() - 1)(rng)];
    }
    yf::oracle::UpPathCounter paths(y);
    EXPECT_EQ(yf::d_paths_formula(x, y), paths(x)) << x << " -> " << y;
    const Word other = yf::oracle::random_word(rng, nx);
    EXPECT_EQ(yf::d_paths_formula(other, y), paths(other)) << other << " -> " << y;
  }
}

TEST(PathCountProperty, FromEmptyMatchesDynamicProgram) {
  const auto levels = yf::enumerate_levels(12);
  const auto counts = yf::paths_from_root(levels);
  for (std::size_t n = 0; n <= 12; ++n)
    for (std::size_t i = 0; i < levels[n].words.size(); ++i) {
      EXPECT_EQ(yf::d_from_empty(levels[n].words[i]), counts[n][i]);
      if (n <= 10) { EXPECT_EQ(yf::d_paths_dp(Word{}, levels[n].words[i]), counts[n][i]); }
    }
}

TEST(PathCountProperty, SquaresSumToFactorial) {
  const auto levels = yf::enumerate_levels(13);
  const auto counts = yf::paths_from_root(levels);
  for (std::size_t n = 0; n <= 13; ++n) {
    Integer total = 0;
    for (const auto& c : counts[n]) total += c * c;
    EXPECT_EQ(total, yf::factorial(n)) << "n=" << n;
  }
}

TEST(PathCountProperty, RootCountFactorsAlongSplits) {
  const auto levels = yf::enumerate_levels(11);
  const auto counts = yf::paths_from_root(levels);
  yf::LevelCounts root;
  for (std::size_t n = 0; n <= 11; ++n)
    for (std::size_t i = 0; i < levels[n].words.size(); ++i) root.emplace(levels[n].words[i], counts[n][i]);
  for (std::size_t n = 0; n <= 11; ++n)
    for (const auto& x : levels[n].words)
      for (std::size_t a = 0; a <= x.length(); ++a) {
        const Word tail = x.suffix(a);
        const Word head = x.prefix(a);
        EXPECT_EQ(root.at(x), root.at(tail) * root.at(head + Word::ones(tail.rank()))) << x << " a=" << a;
      }
}

}  // namespace
