#pragma once

// Independent reference implementations used only by tests. They avoid the
// library's own recursions: path counts come from explicit path enumeration
// along up-covers, down-covers from inverting up-covers over a whole level.

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "yf/rational.hpp"
#include "yf/word.hpp"

namespace yf::oracle {

/// Every word of rank n, by brute force over all {1,2} strings of length
/// ceil(n/2)..n, sorted lexicographically.
inline std::vector<Word> brute_level(std::size_t n) {
  std::vector<Word> out;
  for (std::size_t len = (n + 1) / 2; len <= n; ++len) {
    const std::size_t twos = n - len;
    std::string s(len, '1');
    std::fill(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(twos), '2');
    std::sort(s.begin(), s.end());
    do out.push_back(Word::parse(s));
    while (std::next_permutation(s.begin(), s.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Down-covers of y found by scanning the previous level for words whose
/// up-covers contain y.
inline std::vector<Word> inverted_down(const Word& y) {
  std::vector<Word> out;
  if (y.rank() == 0) return out;
  for (const Word& x : brute_level(y.rank() - 1)) {
    const auto ups = up_neighbors(x);
    if (std::find(ups.begin(), ups.end(), y) != ups.end()) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of saturated chains from x up to y, by depth-first enumeration.
inline Integer enumerate_paths(const Word& x, const Word& y) {
  if (x.rank() > y.rank()) return 0;
  if (x.rank() == y.rank()) return x == y ? 1 : 0;
  Integer total = 0;
  for (const Word& up : up_neighbors(x)) total += enumerate_paths(up, y);
  return total;
}

/// Memoized variant for larger ranks; counts chains from every word up to y.
class UpPathCounter {
 public:
  explicit UpPathCounter(Word target) : target_(std::move(target)) {}

  Integer operator()(const Word& x) {
    if (x.rank() >= target_.rank()) return x == target_ ? 1 : 0;
    if (auto it = cache_.find(x); it != cache_.end()) return it->second;
    Integer total = 0;
    for (const Word& up : up_neighbors(x)) total += (*this)(up);
    cache_.emplace(x, total);
    return total;
  }

 private:
  Word target_;
  std::map<Word, Integer> cache_;
};

/// 1 / prod of suffix ranks, straight from the definition.
inline Rational q_direct(const Word& x) {
  Integer den = 1;
  for (std::size_t i = 1; i <= x.length(); ++i) den *= static_cast<long>(x.suffix(i).rank());
  return Rational(Integer(1), den);
}

/// g(x, j) from the run lengths of ones between twos, counted from the right.
inline std::vector<long> g_runs(const Word& x) {
  std::vector<long> runs;
  long run = 0;
  for (std::size_t i = x.length(); i-- > 0;) {
    if (x[i] == 1) {
      ++run;
    } else {
      runs.push_back(run);
      run = 0;
    }
  }
  std::vector<long> g;
  long acc = 0;
  for (std::size_t j = 1; j <= runs.size(); ++j) {
    acc += runs[j - 1];
    g.push_back(acc + 2 * static_cast<long>(j) - 1);
  }
  return g;
}

/// Uniform random word of the given rank (fixed seed supplied by caller).
inline Word random_word(std::mt19937& rng, std::size_t rank) {
  std::string s;
  std::size_t left = rank;
  while (left > 0) {
    const bool two = left >= 2 && std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    s.push_back(two ? '2' : '1');
    left -= two ? 2 : 1;
  }
  return Word::parse(s);
}

inline Rational random_beta(std::mt19937& rng) {
  const long den = std::uniform_int_distribution<long>(2, 12)(rng);
  const long num = std::uniform_int_distribution<long>(1, den)(rng);
  Rational b(num, den);
  b.canonicalize();
  return b;
}

}  // namespace yf::oracle
