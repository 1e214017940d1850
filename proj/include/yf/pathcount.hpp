#pragma once

// Counting saturated descending paths d(x, y): a level-by-level dynamic
// program over down-covers (the oracle) and the closed formula in f and g.

#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "yf/harmonic.hpp"
#include "yf/rational.hpp"
#include "yf/word.hpp"

namespace yf {

using LevelCounts = std::unordered_map<Word, Integer>;

/// d(x, y) for every x below y, indexed by rank(x). Entry [rank(y)] is {y: 1}.
inline std::vector<LevelCounts> down_path_counts(const Word& y) {
  std::vector<LevelCounts> levels(y.rank() + 1);
  levels[y.rank()].emplace(y, 1);
  for (std::size_t r = y.rank(); r > 0; --r)
    for (const auto& [word, count] : levels[r])
      for (const auto& lower : down_neighbors(word)) levels[r - 1][lower] += count;
  return levels;
}

/// Path count by dynamic programming; only the current frontier is kept.
inline Integer d_paths_dp(const Word& x, const Word& y) {
  if (y.rank() < x.rank()) return 0;
  LevelCounts frontier{{y, Integer(1)}};
  for (std::size_t r = y.rank(); r > x.rank(); --r) {
    LevelCounts next;
    for (const auto& [word, count] : frontier)
      for (const auto& lower : down_neighbors(word)) next[lower] += count;
    frontier = std::move(next);
  }
  const auto it = frontier.find(x);
  return it == frontier.end() ? Integer(0) : it->second;
}

/// d(eps, v) for every v of rank <= max_rank, computed upward by summing
/// over down-covers. Result [n] is aligned with enumerate_level(n).
inline std::vector<std::vector<Integer>> paths_from_root(const std::vector<Level>& levels) {
  std::vector<std::vector<Integer>> out(levels.size());
  LevelCounts previous;
  for (std::size_t n = 0; n < levels.size(); ++n) {
    LevelCounts current;
    for (const auto& v : levels[n].words) {
      Integer c = n == 0 ? Integer(1) : Integer(0);
      for (const auto& lower : down_neighbors(v)) c += previous.at(lower);
      out[n].push_back(c);
      current.emplace(v, c);
    }
    previous = std::move(current);
  }
  return out;
}

/// sum_{i=0}^{|x|} f(x, i, h(x,y)) prod_j (g(y,j) - i). Requires rank(y) >= rank(x).
template <class Memo = FTable<Rational>>
Integer d_paths_formula(const Word& x, const Word& y, Memo* memo = nullptr) {
  if (y.rank() < x.rank()) throw std::invalid_argument("d_paths_formula: rank(y) < rank(x)");
  const std::size_t h = common_suffix_len(x, y);
  const std::vector<Rational> row = memo ? memo->row(x, h) : f_row<Rational>(x, h);
  const std::vector<long> gs = g_all(y);
  Rational total = 0;
  for (std::size_t i = 0; i <= x.rank(); ++i) {
    if (row[i] == 0) continue;
    Integer prod = 1;
    for (long gj : gs) prod *= gj - static_cast<long>(i);
    total += row[i] * prod;
  }
  if (!is_integer(total)) throw std::logic_error("d_paths_formula: non-integer path count " + to_string(total));
  return total.get_num();
}

/// d(eps, y) = prod_j g(y, j).
inline Integer d_from_empty(const Word& y) {
  Integer p = 1;
  for (long gj : g_all(y)) p *= gj;
  return p;
}

template <class T = Rational>
T d_from_empty_as(const Word& y) {
  T p(1);
  for (long gj : g_all(y)) p *= T(gj);
  return p;
}

/// Plancherel weight d(eps, v)^2 / n! of v in YF_n.
inline Rational plancherel(std::size_t n, const Word& v) {
  if (v.rank() != n) throw std::invalid_argument("plancherel: rank(v) != n");
  const Integer d = d_from_empty(v);
  Rational w(d * d, factorial(n));
  w.canonicalize();
  return w;
}

}  // namespace yf
