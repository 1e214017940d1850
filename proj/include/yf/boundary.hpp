#pragma once

// Infinite words of the form 1^inf * core, the boundary kernels d'_beta and
// the central measures mu_{w,beta} they induce on each level.

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "yf/harmonic.hpp"
#include "yf/parallel.hpp"
#include "yf/pathcount.hpp"
#include "yf/rational.hpp"
#include "yf/word.hpp"

namespace yf {

/// w = ...111 core. The core never starts with 1: leading ones are absorbed
/// into the infinite tail, so equal infinite words have equal cores.
class TailOnesWord {
 public:
  TailOnesWord() = default;
  explicit TailOnesWord(const Word& core) {
    std::size_t lead = 0;
    while (lead < core.length() && core[lead] == 1) ++lead;
    core_ = core.suffix(core.length() - lead);
  }

  /// "eps" or a digit string; leading ones are stripped.
  static TailOnesWord parse_cli(std::string_view text) { return TailOnesWord(yf::parse_cli(text)); }

  const Word& core() const noexcept { return core_; }
  std::size_t twos() const noexcept { return core_.twos(); }

  /// i-th digit counting from the right, starting at 0.
  int digit_from_right(std::size_t i) const noexcept {
    return i < core_.length() ? core_[core_.length() - 1 - i] : 1;
  }

  friend bool operator==(const TailOnesWord&, const TailOnesWord&) = default;
  friend std::ostream& operator<<(std::ostream& os, const TailOnesWord& w) { return os << w.core_; }

 private:
  Word core_;
};

inline std::vector<long> g_all(const TailOnesWord& w) { return g_all(w.core()); }

template <class T = Rational>
T pi(const TailOnesWord& w) {
  return pi_from_g<T>(g_all(w), 1);
}

/// Last m digits of w.
inline Word suffix_of_infinite(const TailOnesWord& w, std::size_t m) {
  const Word& core = w.core();
  if (m <= core.length()) return core.suffix(m);
  return Word::ones(m - core.length()) + core;
}

struct SuffixMatch {
  std::size_t h = 0;       // digits in the longest common suffix
  std::size_t h_rank = 0;  // their sum
};

inline SuffixMatch h_infinite(const Word& x, const TailOnesWord& w) {
  SuffixMatch m;
  while (m.h < x.length() && x[x.length() - 1 - m.h] == w.digit_from_right(m.h)) {
    m.h_rank += static_cast<std::size_t>(w.digit_from_right(m.h));
    ++m.h;
  }
  return m;
}

/// Evaluates d'_beta(x, w) and mu_{w,beta}(v) for a fixed (w, beta). The
/// per-i weights beta^i prod_j (g(w,j) - i) / g(w,j) are tabulated once up to
/// max_rank; afterwards the kernel is immutable and safe to share.
template <class T = Rational>
class BoundaryKernel {
 public:
  BoundaryKernel(TailOnesWord w, const Rational& beta, std::size_t max_rank) : w_(std::move(w)), beta_(beta) {
    check_beta(beta);
    const std::vector<long> gs = g_all(w_);
    const T b = ScalarOps<T>::from(beta);
    T beta_pow(1);
    weights_.reserve(max_rank + 1);
    for (std::size_t i = 0; i <= max_rank; ++i) {
      T wgt = beta_pow;
      for (long gj : gs) {
        wgt *= T(gj - static_cast<long>(i));
        wgt /= T(gj);
      }
      weights_.push_back(wgt);
      beta_pow *= b;
    }
  }

  const TailOnesWord& w() const noexcept { return w_; }
  const Rational& beta() const noexcept { return beta_; }
  std::size_t max_rank() const noexcept { return weights_.size() - 1; }

  /// sum_i beta^i f(x, i, h(x,w)) prod_j (g(w,j) - i) / g(w,j)
  T d_prime(const Word& x) const {
    if (x.rank() > max_rank()) throw std::out_of_range("BoundaryKernel: word rank above tabulated range");
    const std::vector<T> row = f_row<T>(x, h_infinite(x, w_).h);
    T acc(0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 0) continue;
      acc += row[i] * weights_[i];
    }
    return acc;
  }

  T mu(const Word& v) const {
    T m = d_from_empty_as<T>(v);
    m *= d_prime(v);
    return m;
  }

 private:
  TailOnesWord w_;
  Rational beta_;
  std::vector<T> weights_;
};

template <class T = Rational>
T d_beta_prime(const Word& x, const TailOnesWord& w, const Rational& beta) {
  return BoundaryKernel<T>(w, beta, x.rank()).d_prime(x);
}

template <class T = Rational>
T d1_prime(const Word& x, const TailOnesWord& w) {
  return d_beta_prime<T>(x, w, Rational(1));
}

/// mu_{w,beta}(v) = d(eps, v) * d'_beta(v, w)
template <class T = Rational>
T mu(const TailOnesWord& w, const Rational& beta, const Word& v) {
  return BoundaryKernel<T>(w, beta, v.rank()).mu(v);
}

/// d(eps, v) d(v, w_m) / d(eps, w_m) for a finite approximant w_m, with the
/// path counts taken from the dynamic program.
inline Rational mu_prelimit(const Word& wm, const Word& v) {
  Rational r(d_paths_dp(Word{}, v) * d_paths_dp(v, wm), d_paths_dp(Word{}, wm));
  r.canonicalize();
  return r;
}

struct LevelDistribution {
  std::size_t n = 0;
  TailOnesWord w;
  Rational beta;
  std::vector<Word> words;      // level order
  std::vector<Rational> masses; // aligned with words

  Rational mass(const Word& v) const {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i] == v) return masses[i];
    throw std::out_of_range("LevelDistribution: word not on this level");
  }
};

/// mu_{w,beta} over YF_n. Throws std::logic_error unless every mass is
/// nonnegative and the masses sum to exactly 1.
inline LevelDistribution level_distribution(const TailOnesWord& w, const Rational& beta, std::size_t n,
                                            unsigned jobs = 1) {
  LevelDistribution dist{n, w, beta, enumerate_level(n).words, {}};
  const BoundaryKernel<Rational> kernel(w, beta, n);
  dist.masses.resize(dist.words.size());
  parallel_for(dist.words.size(), jobs, [&](std::size_t i) { dist.masses[i] = kernel.mu(dist.words[i]); });
  Rational total = 0;
  for (const auto& m : dist.masses) {
    if (m < 0) throw std::logic_error("level_distribution: negative mass " + to_string(m));
    total += m;
  }
  if (total != 1) throw std::logic_error("level_distribution: masses sum to " + to_string(total));
  return dist;
}

}  // namespace yf
