#pragma once

// Scalar functions on words: the two-parameter family f(x, y, z), the
// cover-position sequence g, the weight q, the polynomial d_beta and the
// products pi / pi_k.
//
// Everything numeric is templated on the scalar type so the exact path
// (Rational) and the non-authoritative floating-point path (double) share one
// implementation.

#include <atomic>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "yf/polynomial.hpp"
#include "yf/rational.hpp"
#include "yf/word.hpp"

namespace yf {

#ifdef YF_ENABLE_MUTATION_HOOK
namespace testing {
/// When set, f(x, 0, 0) is perturbed for every non-empty x. Test builds only.
inline std::atomic<bool> corrupt_f{false};
}  // namespace testing
#endif

inline void check_beta(const Rational& beta) {
  if (beta <= 0 || beta > 1) throw std::invalid_argument("beta must lie in (0, 1], got " + to_string(beta));
}

/// Row z = 0 of f: entry y is nonzero exactly when x has a suffix of rank y,
/// and is then the reciprocal of the product of the suffix's running sums
/// (negated, read rightward from the cut) times the prefix's running sums
/// (read leftward from the cut).
template <class T = Rational>
std::vector<T> f_base_row(const Word& x) {
  const std::size_t n = x.length();
  std::vector<T> row(x.rank() + 1, T(0));
  std::size_t suffix_rank = x.rank();
  for (std::size_t cut = 0; cut <= n; ++cut) {
    if (cut > 0) suffix_rank -= static_cast<std::size_t>(x[cut - 1]);
    if constexpr (ScalarOps<T>::exact) {
      Integer den = 1;
      long s = 0;
      for (std::size_t k = cut; k < n; ++k) {
        s += x[k];
        den *= -s;
      }
      s = 0;
      for (std::size_t k = cut; k-- > 0;) {
        s += x[k];
        den *= s;
      }
      row[suffix_rank] = Rational(Integer(1), den);
      row[suffix_rank].canonicalize();
    } else {
      double den = 1;
      double s = 0;
      for (std::size_t k = cut; k < n; ++k) {
        s += x[k];
        den *= -s;
      }
      s = 0;
      for (std::size_t k = cut; k-- > 0;) {
        s += x[k];
        den *= s;
      }
      row[suffix_rank] = 1.0 / den;
    }
  }
#ifdef YF_ENABLE_MUTATION_HOOK
  if (testing::corrupt_f.load() && !x.empty()) row[0] += T(1) / T(1000);
#endif
  return row;
}

template <class T>
class FTable;

namespace detail {

template <class T>
std::vector<T> f_row_impl(const Word& x, std::size_t z, FTable<T>* memo);

template <class T>
std::vector<T> f_row_lookup(const Word& x, std::size_t z, FTable<T>* memo);

}  // namespace detail

/// Memo of f rows keyed on (x, z); a row holds f(x, y, z) for y = 0..rank(x).
/// Not synchronized: give each thread its own table.
template <class T = Rational>
class FTable {
 public:
  const std::vector<T>& row(const Word& x, std::size_t z) {
    std::string key = x.str();
    key += '/';
    key += std::to_string(z);
    if (auto it = rows_.find(key); it != rows_.end()) return it->second;
    auto value = detail::f_row_impl<T>(x, z, this);
    return rows_.emplace(std::move(key), std::move(value)).first->second;
  }

  T operator()(const Word& x, std::size_t y, std::size_t z) {
    if (y > x.rank()) throw std::out_of_range("f: y exceeds rank(x)");
    return row(x, z)[y];
  }

  std::size_t size() const noexcept { return rows_.size(); }
  void clear() { rows_.clear(); }

 private:
  std::unordered_map<std::string, std::vector<T>> rows_;
};

namespace detail {

template <class T>
std::vector<T> f_row_lookup(const Word& x, std::size_t z, FTable<T>* memo) {
  return memo ? memo->row(x, z) : f_row_impl<T>(x, z, nullptr);
}

template <class T>
std::vector<T> f_row_impl(const Word& x, std::size_t z, FTable<T>* memo) {
  if (z > x.length()) throw std::out_of_range("f: z exceeds length(x)");
  if (z == 0) return f_base_row<T>(x);
  const std::size_t r = x.rank();
  Word head = x;
  head.pop_back();
  if (x.back() == 1) {
    // f(x'1, 0, z) = f(x'1, 0, 0);  f(x'1, y, z) = f(x'1, y, 0) + f(x', y-1, z-1)
    std::vector<T> row = f_base_row<T>(x);
    const std::vector<T> sub = f_row_lookup<T>(head, z - 1, memo);
    for (std::size_t y = 1; y <= r; ++y) row[y] += sub[y - 1];
    return row;
  }
  // f(x'2, y, z) = f(x'11, y, z+1) / (1 - y), and 0 at y = 1.
  head.push_back(1);
  head.push_back(1);
  const std::vector<T> sub = f_row_lookup<T>(head, z + 1, memo);
  std::vector<T> row(r + 1, T(0));
  for (std::size_t y = 0; y <= r; ++y) {
    if (y == 1) continue;
    row[y] = sub[y];
    row[y] /= T(1 - static_cast<long>(y));
  }
  return row;
}

}  // namespace detail

/// f(x, y, z) for every y, evaluated without a shared memo. The recursion is
/// a single chain, so this is what the per-word hot loops use.
template <class T = Rational>
std::vector<T> f_row(const Word& x, std::size_t z) {
  return detail::f_row_impl<T>(x, z, nullptr);
}

/// Single value of f. Preconditions: y <= rank(x), z <= length(x).
template <class T = Rational>
T f(const Word& x, std::size_t y, std::size_t z) {
  if (y > x.rank()) throw std::out_of_range("f: y exceeds rank(x)");
  return f_row<T>(x, z)[y];
}

/// g(x, 1..twos(x)): for the j-th 2 from the right, the rank of the suffix
/// ending at that 2, minus one.
inline std::vector<long> g_all(const Word& x) {
  std::vector<long> g;
  g.reserve(x.twos());
  long acc = 0;
  for (std::size_t i = x.length(); i-- > 0;) {
    acc += x[i];
    if (x[i] == 2) g.push_back(acc - 1);
  }
  // Cross-check against the run-length form: beta_0 + ... + beta_{j-1} + 2j - 1.
  long ones_so_far = 0;
  std::size_t j = 0;
  for (std::size_t i = x.length(); i-- > 0;) {
    if (x[i] == 1) {
      ++ones_so_far;
      continue;
    }
    ++j;
    if (g[j - 1] != ones_so_far + 2 * static_cast<long>(j) - 1)
      throw std::logic_error("g: suffix-rank and run-length forms disagree on " + x.str());
  }
  return g;
}

inline long g(const Word& x, std::size_t j) {
  if (j < 1 || j > x.twos()) throw std::out_of_range("g: index outside 1..twos(x)");
  return g_all(x)[j - 1];
}

/// 1 / prod_{i=1..length} rank(suffix(x, i)).
template <class T = Rational>
T q(const Word& x) {
  if constexpr (ScalarOps<T>::exact) {
    Integer den = 1;
    long s = 0;
    for (std::size_t i = x.length(); i-- > 0;) {
      s += x[i];
      den *= s;
    }
    return Rational(Integer(1), den);
  } else {
    double den = 1;
    double s = 0;
    for (std::size_t i = x.length(); i-- > 0;) {
      s += x[i];
      den *= s;
    }
    return 1.0 / den;
  }
}

/// d_beta(x) = sum_i beta^i f(x, i, 0) as a polynomial in beta.
inline BetaPolynomial d_beta(const Word& x) { return BetaPolynomial(f_base_row<Rational>(x)); }

template <class T = Rational>
T d_beta_eval(const Word& x, const Rational& beta) {
  check_beta(beta);
  const std::vector<T> row = f_base_row<T>(x);
  const T b = ScalarOps<T>::from(beta);
  T acc(0);
  for (std::size_t i = row.size(); i-- > 0;) {
    acc *= b;
    acc += row[i];
  }
  return acc;
}

/// prod over g > k of (g - k) / g. k = 1 gives pi.
template <class T = Rational>
T pi_from_g(const std::vector<long>& gs, long k = 1) {
  T p(1);
  for (long gv : gs) {
    if (gv <= k) continue;
    p *= T(gv - k);
    p /= T(gv);
  }
  return p;
}

template <class T = Rational>
T pi(const Word& x) {
  return pi_from_g<T>(g_all(x), 1);
}

template <class T = Rational>
T pi_k(const Word& x, long k) {
  if (k < 2) throw std::invalid_argument("pi_k: k must be at least 2");
  return pi_from_g<T>(g_all(x), k);
}

struct PiSplit {
  Rational head_part;  // pi(head * 1^y)
  Rational tail_part;  // pi(tail)
};

/// pi(v) factored along the cut of rank y, when the cut exists.
inline std::optional<PiSplit> pi_split(const Word& v, std::size_t y) {
  const auto split = split_by_rank(v, y);
  if (!split) return std::nullopt;
  return PiSplit{pi(split->head + Word::ones(y)), pi(split->tail)};
}

}  // namespace yf
