#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "reference_data.hpp"
#include "yf/harmonic.hpp"

namespace {

using yf::Rational;
using yf::Word;

Word w(const char* s) { return yf::parse_cli(s); }
Rational r(const std::string& s) { return yf::parse_rational(s); }

TEST(F, WordOfRankEight) {
  const Word x = w("21221");
  for (std::size_t y = 0; y < yf::reference::f_21221_base.size(); ++y)
    EXPECT_EQ(yf::f<Rational>(x, y, 0), r(yf::reference::f_21221_base[y])) << "y=" << y;
  EXPECT_EQ(yf::f<Rational>(x, 0, 0), Rational(1, 720));
  EXPECT_EQ(yf::f<Rational>(x, 5, 0), Rational(-1, 120));
  EXPECT_EQ(yf::f<Rational>(x, 2, 0), 0);
}

TEST(F, SmallTables) {
  for (const auto& table : yf::reference::f_tables) {
    const Word x = w(table.word.c_str());
    ASSERT_EQ(table.rows.size(), x.length() + 1) << table.word;
    for (std::size_t z = 0; z < table.rows.size(); ++z) {
      ASSERT_EQ(table.rows[z].size(), x.rank() + 1);
      for (std::size_t y = 0; y <= x.rank(); ++y)
        EXPECT_EQ(yf::f<Rational>(x, y, z), r(table.rows[z][y])) << table.word << " y=" << y << " z=" << z;
    }
  }
  EXPECT_EQ(yf::f<Rational>(w("2"), 2, 1), Rational(-1, 2));
  EXPECT_EQ(yf::f<Rational>(w("1111"), 4, 3), Rational(-5, 8));
  EXPECT_EQ(yf::f<Rational>(Word{}, 0, 0), 1);
}

TEST(F, Preconditions) {
  EXPECT_THROW(yf::f<Rational>(w("12"), 4, 0), std::out_of_range);
  EXPECT_THROW(yf::f<Rational>(w("12"), 0, 3), std::out_of_range);
}

TEST(F, MemoAgreesWithDirectRecursion) {
  yf::FTable<Rational> memo;
  for (std::size_t n = 0; n <= 9; ++n)
    for (const auto& x : yf::enumerate_level(n).words)
      for (std::size_t z = 0; z <= x.length(); ++z) EXPECT_EQ(memo.row(x, z), yf::f_row<Rational>(x, z));
  EXPECT_GT(memo.size(), 0u);
  EXPECT_EQ(memo(w("1111"), 4, 3), Rational(-5, 8));
}

TEST(F, DoubleTracksExact) {
  for (std::size_t n = 0; n <= 10; ++n)
    for (const auto& x : yf::enumerate_level(n).words)
      for (std::size_t z = 0; z <= x.length(); ++z) {
        const auto exact = yf::f_row<Rational>(x, z);
        const auto approx = yf::f_row<double>(x, z);
        for (std::size_t y = 0; y <= n; ++y) EXPECT_NEAR(approx[y], exact[y].get_d(), 1e-12);
      }
}

TEST(F, ConcurrentCallsAgree) {
  const auto words = yf::enumerate_level(12).words;
  std::vector<std::vector<Rational>> serial;
  for (const auto& x : words) serial.push_back(yf::f_row<Rational>(x, x.length() / 2));
  std::vector<std::vector<Rational>> a(words.size()), b(words.size());
  auto fill = [&](std::vector<std::vector<Rational>>& out) {
    for (std::size_t i = 0; i < words.size(); ++i) out[i] = yf::f_row<Rational>(words[i], words[i].length() / 2);
  };
  std::thread t1(fill, std::ref(a));
  std::thread t2(fill, std::ref(b));
  t1.join();
  t2.join();
  EXPECT_EQ(a, serial);
  EXPECT_EQ(b, serial);
}

TEST(G, Values) {
  EXPECT_EQ(yf::g(w("21221"), 1), 2);
  EXPECT_EQ(yf::g(w("21221"), 3), 7);
  EXPECT_EQ(yf::g(w("12"), 1), 1);
  EXPECT_THROW(yf::g(w("12"), 2), std::out_of_range);
  EXPECT_THROW(yf::g(w("12"), 0), std::out_of_range);
  EXPECT_TRUE(yf::g_all(w("111")).empty());
}

TEST(G, RunLengthOracle) {
  for (std::size_t n = 0; n <= 14; ++n)
    for (const auto& x : yf::enumerate_level(n).words) EXPECT_EQ(yf::g_all(x), yf::oracle::g_runs(x)) << x;
}

TEST(Q, Values) {
  EXPECT_EQ(yf::q<Rational>(Word{}), 1);
  EXPECT_EQ(yf::q<Rational>(w("122")), Rational(1, 40));
  EXPECT_EQ(yf::q<Rational>(w("21")), Rational(1, 3));
  EXPECT_EQ(yf::q<Rational>(w("122")), yf::oracle::q_direct(w("122")));
}

TEST(QProperty, MatchesDefinitionAndBaseRow) {
  for (std::size_t n = 0; n <= 12; ++n)
    for (const auto& x : yf::enumerate_level(n).words) {
      EXPECT_EQ(yf::q<Rational>(x), yf::oracle::q_direct(x)) << x;
      EXPECT_EQ(yf::q<Rational>(x), yf::f<Rational>(x, 0, 0)) << x;
      EXPECT_NEAR(yf::q<double>(x), yf::q<Rational>(x).get_d(), 1e-15);
      if (!x.empty()) { EXPECT_EQ(yf::q<Rational>(x.suffix(x.length() - 1)), Rational(long(n)) * yf::q<Rational>(x)); }
    }
}

TEST(DBeta, Polynomials) {
  EXPECT_EQ(yf::d_beta(Word{}).coefficients(), std::vector<Rational>{1});
  EXPECT_EQ(yf::d_beta(w("1")).coefficients(), (std::vector<Rational>{1, -1}));
  EXPECT_EQ(yf::d_beta(w("2")).coefficients(), (std::vector<Rational>{Rational(1, 2), 0, Rational(-1, 2)}));
  EXPECT_EQ(yf::d_beta(w("2")).to_csv(), "1/2,0,-1/2");
  EXPECT_EQ(yf::d_beta_eval<Rational>(w("2"), Rational(1, 2)), Rational(3, 8));
  EXPECT_THROW(yf::d_beta_eval<Rational>(w("2"), Rational(0)), std::invalid_argument);
  EXPECT_THROW(yf::d_beta_eval<Rational>(w("2"), Rational(3, 2)), std::invalid_argument);
}

TEST(DBetaProperty, DivisibilityAndBound) {
  std::mt19937 rng(3);
  for (std::size_t n = 0; n <= 12; ++n)
    for (const auto& x : yf::enumerate_level(n).words) {
      const auto poly = yf::d_beta(x);
      const auto quotient = poly.divide_by_one_minus_beta(x.length());
      ASSERT_TRUE(quotient) << x;
      EXPECT_NE(quotient->eval(Rational(1)), 0) << x;
      EXPECT_FALSE(poly.divide_by_one_minus_beta(x.length() + 1)) << x;
      const Rational beta = yf::oracle::random_beta(rng);
      EXPECT_LE(poly.eval(beta),
                yf::q<Rational>(x) * yf::power(Rational(1) - beta * beta, static_cast<unsigned>(x.length())))
          << x << " beta=" << beta;
      if (x.empty()) continue;
      Rational total = 0;
      for (const auto& c : poly.coefficients()) total += c;
      EXPECT_EQ(total, 0) << x;
    }
}

TEST(Pi, Values) {
  EXPECT_EQ(yf::pi<Rational>(w("12")), 1);
  EXPECT_EQ(yf::pi<Rational>(w("21")), Rational(1, 2));
  EXPECT_EQ(yf::pi<Rational>(w("221")), Rational(3, 8));
  EXPECT_EQ(yf::pi_k<Rational>(w("221"), 2), Rational(1, 2));
  EXPECT_THROW(yf::pi_k<Rational>(w("221"), 1), std::invalid_argument);
}

TEST(Pi, Split) {
  const Word v = w("21221");
  const auto parts = yf::pi_split(v, 3);
  ASSERT_TRUE(parts);
  EXPECT_EQ(parts->head_part * parts->tail_part, yf::pi<Rational>(v));
  const auto zero = yf::pi_split(v, 0);
  ASSERT_TRUE(zero);
  EXPECT_EQ(zero->head_part, yf::pi<Rational>(v));
  EXPECT_EQ(zero->tail_part, 1);
  EXPECT_FALSE(yf::pi_split(v, 2));
}

TEST(PiProperty, SplitFactorsRandomWords) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Word v = yf::oracle::random_word(rng, std::uniform_int_distribution<std::size_t>(0, 22)(rng));
    for (std::size_t y = 0; y <= v.rank(); ++y)
      if (const auto parts = yf::pi_split(v, y)) { EXPECT_EQ(parts->head_part * parts->tail_part, yf::pi<Rational>(v)); }
  }
}

TEST(Polynomial, DivisionByOneMinusBeta) {
  // (1 - b)^2 (2 + b) = 2 - 3b + b^3
  const yf::BetaPolynomial p({2, -3, 0, 1});
  const auto q = p.divide_by_one_minus_beta(2);
  ASSERT_TRUE(q);
  EXPECT_EQ(q->coefficients(), (std::vector<Rational>{2, 1}));
  EXPECT_FALSE(p.divide_by_one_minus_beta(3));
  EXPECT_EQ(yf::BetaPolynomial({0, 0}).degree(), -1);
  EXPECT_EQ(yf::BetaPolynomial().to_csv(), "0");
}

}  // namespace
