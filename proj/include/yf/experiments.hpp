#pragma once

// Concentration sets and tail sweeps in suffix and pi modes,
// plus the exhaustive identity suite.

#include <cstddef>
#include <cstdio>
#include <deque>
#include <exception>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "yf/boundary.hpp"
#include "yf/harmonic.hpp"
#include "yf/magic.hpp"
#include "yf/parallel.hpp"
#include "yf/pathcount.hpp"
#include "yf/polynomial.hpp"
#include "yf/rational.hpp"
#include "yf/word.hpp"

namespace yf {

struct WordPartition {
  std::vector<Word> inside;   // Q or R
  std::vector<Word> outside;  // the complement on the level
};

inline bool in_q_set(const Word& v, const TailOnesWord& w, std::size_t l) { return h_infinite(v, w).h_rank >= l; }

/// Open interval (pi(w)(beta - eps), pi(w)(beta + eps)).
struct PiWindow {
  Rational low;
  Rational high;

  PiWindow(const TailOnesWord& w, const Rational& beta, const Rational& eps)
      : low(pi<Rational>(w) * (beta - eps)), high(pi<Rational>(w) * (beta + eps)) {}

  bool contains(const Word& v) const {
    const Rational p = pi<Rational>(v);
    return low < p && p < high;
  }
};

inline WordPartition q_sets(const TailOnesWord& w, std::size_t n, std::size_t l) {
  WordPartition part;
  for (auto& v : enumerate_level(n).words) (in_q_set(v, w, l) ? part.inside : part.outside).push_back(std::move(v));
  return part;
}

inline WordPartition r_sets(const TailOnesWord& w, const Rational& beta, std::size_t n, const Rational& eps) {
  check_beta(beta);
  if (eps <= 0) throw std::invalid_argument("r_sets: eps must be positive");
  const PiWindow window(w, beta, eps);
  WordPartition part;
  for (auto& v : enumerate_level(n).words) (window.contains(v) ? part.inside : part.outside).push_back(std::move(v));
  return part;
}

enum class ConcentrationMode { suffix, pi };

inline std::string to_string(ConcentrationMode mode) { return mode == ConcentrationMode::suffix ? "suffix" : "pi"; }

struct ConcentrationParams {
  ConcentrationMode mode = ConcentrationMode::suffix;
  TailOnesWord w;
  Rational beta = 1;
  std::size_t l = 0;  // suffix mode
  Rational eps = 0;   // pi mode

  /// True when v belongs to the concentration set (Q or R).
  bool concentrated(const Word& v) const {
    if (mode == ConcentrationMode::suffix) return in_q_set(v, w, l);
    return PiWindow(w, beta, eps).contains(v);
  }

  std::string parameter_text() const { return mode == ConcentrationMode::suffix ? std::to_string(l) : yf::to_string(eps); }
};

namespace detail {

inline std::string scalar_text(const Rational& r) { return to_string(r); }

inline std::string scalar_text(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

}  // namespace detail

/// mu_{w,beta} over YF_n in scalar type T, aligned with enumerate_level(n).
/// The exact path goes through level_distribution and its sum-to-one check.
template <class T = Rational>
std::vector<T> level_masses(const TailOnesWord& w, const Rational& beta, std::size_t n,
                            const std::vector<Word>& words, unsigned jobs = 1) {
  if constexpr (ScalarOps<T>::exact) {
    return level_distribution(w, beta, n, jobs).masses;
  } else {
    const BoundaryKernel<T> kernel(w, beta, n);
    std::vector<T> masses(words.size());
    parallel_for(words.size(), jobs, [&](std::size_t i) { masses[i] = kernel.mu(words[i]); });
    return masses;
  }
}

template <class T>
struct ConcentrationRow {
  std::size_t n = 0;
  T tail{};  // mass outside the concentration set
  T head{};  // mass inside it
};

template <class T = Rational>
struct ConcentrationReport {
  ConcentrationParams params;
  std::vector<ConcentrationRow<T>> rows;

  static constexpr bool exact = ScalarOps<T>::exact;

  const ConcentrationRow<T>& at(std::size_t n) const {
    for (const auto& r : rows)
      if (r.n == n) return r;
    throw std::out_of_range("ConcentrationReport: n not in sweep");
  }

  std::string csv() const {
    std::ostringstream os;
    os << "mode,w,beta,parameter,n,tail,head,exact\n";
    for (const auto& r : rows)
      os << to_string(params.mode) << ',' << render_cli(params.w.core()) << ',' << yf::to_string(params.beta) << ','
         << params.parameter_text() << ',' << r.n << ',' << detail::scalar_text(r.tail) << ','
         << detail::scalar_text(r.head) << ',' << (exact ? "yes" : "no") << '\n';
    return os.str();
  }
};

/// Tail mass of a level split by the concentration predicate.
template <class T>
ConcentrationRow<T> partition_masses(const ConcentrationParams& params, std::size_t n, const std::vector<Word>& words,
                                     const std::vector<T>& masses) {
  ConcentrationRow<T> row{n, T(0), T(0)};
  for (std::size_t i = 0; i < words.size(); ++i) (params.concentrated(words[i]) ? row.head : row.tail) += masses[i];
  if constexpr (ScalarOps<T>::exact) {
    if (row.head + row.tail != 1) throw std::logic_error("concentration: masses do not sum to 1");
  }
  return row;
}

template <class T = Rational>
ConcentrationReport<T> concentration_sweep(const ConcentrationParams& params, const std::vector<std::size_t>& ns,
                                           unsigned jobs = 1) {
  check_beta(params.beta);
  if (ns.empty()) throw std::invalid_argument("concentration_sweep: empty n list");
  for (std::size_t i = 1; i < ns.size(); ++i)
    if (ns[i] <= ns[i - 1]) throw std::invalid_argument("concentration_sweep: n list must be ascending");
  if (params.mode == ConcentrationMode::pi && params.eps <= 0)
    throw std::invalid_argument("concentration_sweep: eps must be positive");
  ConcentrationReport<T> report{params, {}};
  for (std::size_t n : ns) {
    const std::vector<Word> words = enumerate_level(n).words;
    const std::vector<T> masses = level_masses<T>(params.w, params.beta, n, words, jobs);
    report.rows.push_back(partition_masses(params, n, words, masses));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Identity suite

struct IdentityResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_counterexample;

  bool passed() const noexcept { return failures == 0; }
};

class IdentityReport {
 public:
  IdentityResult& add(std::string name) {
    results_.push_back(IdentityResult{std::move(name), 0, 0, {}});
    return results_.back();
  }

  const std::deque<IdentityResult>& results() const noexcept { return results_; }

  const IdentityResult& at(const std::string& name) const {
    for (const auto& r : results_)
      if (r.name == name) return r;
    throw std::out_of_range("IdentityReport: no identity named " + name);
  }

  bool all_passed() const noexcept {
    for (const auto& r : results_)
      if (!r.passed()) return false;
    return true;
  }

  std::string csv() const {
    std::ostringstream os;
    os << "identity,instances,failures,status,first_counterexample\n";
    for (const auto& r : results_)
      os << r.name << ',' << r.instances << ',' << r.failures << ',' << (r.passed() ? "pass" : "FAIL") << ",\""
         << r.first_counterexample << "\"\n";
    return os.str();
  }

  std::string summary() const {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& r : results_) {
      os << (r.passed() ? "pass " : "FAIL ") << r.name << " (" << r.instances << " instances";
      if (!r.passed()) {
        ++failed;
        os << ", " << r.failures << " failures; first: " << r.first_counterexample;
      }
      os << ")\n";
    }
    os << (failed == 0 ? "all identities hold\n" : std::to_string(failed) + " identities failed\n");
    return os.str();
  }

 private:
  std::deque<IdentityResult> results_;  // stable references across add()
};

struct IdentityGrid {
  std::size_t max_rank = 6;
  std::vector<Rational> betas{Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  std::vector<TailOnesWord> w_list{TailOnesWord{}, TailOnesWord(Word::parse("2")), TailOnesWord(Word::parse("22")),
                                   TailOnesWord(Word::parse("212"))};
};

namespace detail {

/// Counts one instance; `check` returns an empty string on success and a
/// witness description otherwise. Exceptions count as failures.
inline void record(IdentityResult& result, const std::function<std::string()>& check) {
  ++result.instances;
  std::string witness;
  try {
    witness = check();
  } catch (const std::exception& e) {
    witness = std::string("exception: ") + e.what();
  }
  if (witness.empty()) return;
  if (result.failures++ == 0) result.first_counterexample = witness;
}

inline std::string mismatch(const std::string& where, const Rational& lhs, const Rational& rhs) {
  if (lhs == rhs) return {};
  return where + ": " + to_string(lhs) + " != " + to_string(rhs);
}

inline std::string violated(bool holds, const std::string& where, const Rational& lhs, const Rational& rhs) {
  if (holds) return {};
  return where + ": " + to_string(lhs) + " vs " + to_string(rhs);
}

inline std::string at_word(const Word& x) { return "x=" + render_cli(x); }

/// sum_{j<=i} f(x, j, 0) C(len - 1 + i - j, len - 1), the coefficients of
/// d_beta(x) / (1 - beta)^len.
inline Rational binomial_partial(const std::vector<Rational>& base, long len, long i, long top_shift, long bottom) {
  Rational s = 0;
  for (long j = 0; j <= i && j < static_cast<long>(base.size()); ++j) {
    if (base[static_cast<std::size_t>(j)] == 0) continue;
    s += base[static_cast<std::size_t>(j)] * Rational(binomial(len + top_shift + i - j, bottom));
  }
  return s;
}

}  // namespace detail

/// Runs every identity and inequality exhaustively over words of rank
/// <= max_rank and over the beta / w grids. Failures become report entries.
inline IdentityReport identity_suite(const IdentityGrid& grid) {
  using detail::at_word;
  using detail::mismatch;
  using detail::record;
  using detail::violated;

  const std::size_t R = grid.max_rank;
  for (const auto& b : grid.betas) check_beta(b);
  const std::vector<Level> levels = enumerate_levels(R);
  const std::vector<std::vector<Integer>> root_counts = paths_from_root(levels);
  LevelCounts from_root;
  for (std::size_t n = 0; n <= R; ++n)
    for (std::size_t i = 0; i < levels[n].words.size(); ++i) from_root.emplace(levels[n].words[i], root_counts[n][i]);

  IdentityReport report;

  {
    auto& r = report.add("evtuh5");
    for (std::size_t n = 1; n <= R; ++n)
      for (const auto& x : levels[n].words)
        record(r, [&] {
          Rational s = 0;
          for (const auto& v : f_base_row<Rational>(x)) s += v;
          return mismatch(at_word(x) + " row sum", s, 0);
        });
  }
  {
    auto& r = report.add("evtuh7");
    for (std::size_t n = 0; n < R; ++n)
      for (const auto& x : levels[n].words)
        for (int alpha : {1, 2}) {
          if (n + static_cast<std::size_t>(alpha) > R) continue;
          Word ax = Word::parse(std::to_string(alpha)) + x;
          for (std::size_t z = 0; z <= x.length(); ++z) {
            const auto lower = f_row<Rational>(x, z);
            const auto upper = f_row<Rational>(ax, z);
            for (std::size_t y = 0; y <= n; ++y)
              record(r, [&] {
                return mismatch(at_word(ax) + " y=" + std::to_string(y) + " z=" + std::to_string(z), lower[y],
                                upper[y] * Rational(static_cast<long>(ax.rank()) - static_cast<long>(y)));
              });
          }
        }
  }
  {
    auto& r = report.add("evtuh11");
    for (std::size_t n = 0; n < R; ++n)
      for (const auto& x : levels[n].words) {
        const Word x1 = x + Word::ones(1);
        const auto top = f_base_row<Rational>(x1);
        const auto low = f_base_row<Rational>(x);
        for (std::size_t y = 1; y <= x1.rank(); ++y)
          record(r, [&] {
            return mismatch(at_word(x1) + " y=" + std::to_string(y), -Rational(static_cast<long>(y)) * top[y],
                            low[y - 1]);
          });
      }
  }
  {
    auto& r = report.add("evtuh12");
    for (std::size_t n = 0; n + 2 <= R; ++n)
      for (const auto& x : levels[n].words) {
        const auto ones = f_base_row<Rational>(x + Word::ones(2));
        const auto two = f_base_row<Rational>(x + Word::parse("2"));
        for (std::size_t y = 0; y <= n + 2; ++y)
          record(r, [&] {
            return mismatch(at_word(x + Word::parse("2")) + " y=" + std::to_string(y),
                            Rational(1 - static_cast<long>(y)) * ones[y], two[y]);
          });
      }
  }
  {
    auto& r91 = report.add("evtuh91");
    auto& r92 = report.add("evtuh92");
    auto& r93 = report.add("evtuh93");
    for (std::size_t n = 0; n < R; ++n)
      for (const auto& x : levels[n].words) {
        if (n + 2 <= R) {
          const Word tx = Word::parse("2") + x;
          const auto a = f_row<Rational>(tx, x.length());
          const auto b = f_row<Rational>(tx, tx.length());
          for (std::size_t y = 0; y <= tx.rank(); ++y)
            record(r91, [&] { return mismatch(at_word(tx) + " y=" + std::to_string(y), a[y], b[y]); });
          for (std::size_t z = 0; z <= tx.length(); ++z)
            record(r93, [&] {
              return mismatch(at_word(tx) + " z=" + std::to_string(z), f<Rational>(tx, n + 1, z), 0);
            });
        }
        const Word ox = Word::ones(1) + x;
        const auto a = f_row<Rational>(ox, x.length());
        const auto b = f_row<Rational>(ox, ox.length());
        for (std::size_t y = 0; y <= x.rank(); ++y)
          record(r92, [&] { return mismatch(at_word(ox) + " y=" + std::to_string(y), a[y], b[y]); });
      }
  }
  {
    auto& rq = report.add("q-recurrence");
    auto& ro = report.add("odnoitozhe");
    for (std::size_t n = 0; n <= R; ++n)
      for (const auto& x : levels[n].words) {
        record(ro, [&] { return mismatch(at_word(x), q<Rational>(x), f<Rational>(x, 0, 0)); });
        if (x.empty()) continue;
        record(rq, [&] {
          return mismatch(at_word(x), q<Rational>(x.suffix(x.length() - 1)),
                          Rational(static_cast<long>(x.rank())) * q<Rational>(x));
        });
      }
  }
  {
    auto& rd = report.add("delitsa");
    auto& rb2 = report.add("binomische2");
    auto& rb1 = report.add("binomische1");
    auto& rs = report.add("schyot");
    auto& rbin = report.add("binom1");
    auto& rm = report.add("mamka2");
    for (std::size_t n = 0; n <= R; ++n)
      for (const auto& x : levels[n].words) {
        const BetaPolynomial poly = d_beta(x);
        const auto base = f_base_row<Rational>(x);
        const long len = static_cast<long>(x.length());
        const long rank = static_cast<long>(x.rank());
        record(rd, [&]() -> std::string {
          const auto quotient = poly.divide_by_one_minus_beta(x.length());
          if (!quotient) return at_word(x) + ": not divisible by (1-beta)^" + std::to_string(len);
          if (quotient->eval(Rational(1)) == 0) return at_word(x) + ": quotient vanishes at beta=1";
          return {};
        });
        for (const auto& beta : grid.betas)
          record(rm, [&] {
            const Rational lhs = poly.eval(beta);
            const Rational rhs = q<Rational>(x) * power(Rational(1) - beta * beta, static_cast<unsigned>(len));
            return violated(lhs <= rhs, at_word(x) + " beta=" + to_string(beta), lhs, rhs);
          });
        if (len < 1) continue;
        record(rb2, [&]() -> std::string {
          const auto quotient = poly.divide_by_one_minus_beta(x.length());
          if (!quotient) return at_word(x) + ": no exact quotient";
          std::vector<Rational> expected;
          for (long i = 0; i <= rank - len; ++i) expected.push_back(detail::binomial_partial(base, len, i, -1, len - 1));
          if (*quotient != BetaPolynomial(expected))
            return at_word(x) + ": quotient " + quotient->to_csv() + " != " + BetaPolynomial(expected).to_csv();
          return {};
        });
        for (long i = rank - len + 1; i <= rank; ++i)
          record(rb1, [&] {
            return mismatch(at_word(x) + " i=" + std::to_string(i), detail::binomial_partial(base, len, i, -1, len - 1),
                            0);
          });
        for (long i = 0; i <= len; ++i)
          record(rbin, [&] {
            const Rational lhs = detail::binomial_partial(base, len, i, -1, len - 1);
            const Rational rhs = q<Rational>(x) * Rational(binomial(len, i));
            return violated(lhs <= rhs, at_word(x) + " i=" + std::to_string(i), lhs, rhs);
          });
        if (len < 2) continue;
        for (long i = 1; i <= rank; ++i)
          record(rs, [&] {
            const Rational lhs = detail::binomial_partial(base, len, i, -1, len - 1) * Rational(rank - i);
            // C(len - 2 + i - j, len - 1) summed to i - 1 is the shifted partial at i - 1.
            Rational rhs = detail::binomial_partial(base, len, i - 1, -1, len - 1) * Rational(rank - i - len + 1);
            for (long j = 0; j <= i && j <= rank; ++j)
              rhs += Rational(rank - j) * base[static_cast<std::size_t>(j)] * Rational(binomial(len - 2 + i - j, len - 2));
            return mismatch(at_word(x) + " i=" + std::to_string(i), lhs, rhs);
          });
      }
  }
  {
    auto& rt = report.add("path-formula");
    auto& rc = report.add("root-paths");
    auto& rp = report.add("plancherel");
    for (std::size_t n = 0; n <= R; ++n) {
      Integer squares = 0;
      for (const auto& y : levels[n].words) {
        const auto below = down_path_counts(y);
        for (std::size_t m = 0; m <= n; ++m)
          for (const auto& x : levels[m].words)
            record(rt, [&] {
              const auto it = below[m].find(x);
              const Integer dp = it == below[m].end() ? Integer(0) : it->second;
              const Integer formula = d_paths_formula(x, y);
              if (dp == formula) return std::string{};
              return "x=" + render_cli(x) + " y=" + render_cli(y) + ": " + to_string(formula) + " != " + to_string(dp);
            });
        const Integer dp_root = below[0].count(Word{}) ? below[0].at(Word{}) : Integer(0);
        record(rc, [&] { return mismatch("y=" + render_cli(y), Rational(d_from_empty(y)), Rational(dp_root)); });
        squares += dp_root * dp_root;
      }
      record(rp, [&] { return mismatch("n=" + std::to_string(n), Rational(squares), Rational(factorial(n))); });
    }
  }
  {
    auto& r = report.add("razbivaem");
    for (std::size_t n = 0; n <= R; ++n)
      for (const auto& x : levels[n].words)
        for (std::size_t a = 0; a <= x.length(); ++a)
          record(r, [&] {
            const Word tail = x.suffix(a);
            const Word head = x.prefix(a);
            return mismatch(at_word(x) + " a=" + std::to_string(a), Rational(from_root.at(x)),
                            Rational(from_root.at(tail) * from_root.at(head + Word::ones(tail.rank()))));
          });
  }
  {
    auto& r = report.add("meexy");
    for (std::size_t n = 0; n <= R; ++n)
      for (const auto& v : levels[n].words)
        for (std::size_t y = 0; y <= n; ++y) {
          const auto parts = pi_split(v, y);
          if (!parts) continue;
          record(r, [&] {
            return mismatch(at_word(v) + " y=" + std::to_string(y), parts->head_part * parts->tail_part,
                            pi<Rational>(v));
          });
        }
  }
  {
    auto& rk = report.add("kusok");
    auto& rl = report.add("limitstrih");
    auto& rg = report.add("granatakerambita");
    auto& rneo = report.add("neo");
    for (const auto& w : grid.w_list) {
      const BoundaryKernel<Rational> one(w, Rational(1), R);
      for (std::size_t n = 0; n <= R; ++n)
        for (const auto& x : levels[n].words) {
          const Rational d1 = one.d_prime(x);
          const std::string where = at_word(x) + " w=" + render_cli(w.core());
          record(rneo, [&] { return violated(d1 >= 0, where, d1, 0); });
          const std::size_t m = std::max(w.core().length(), x.length());
          for (std::size_t mm : {m, m + 3}) {
            const Word wm = suffix_of_infinite(w, mm);
            record(rl, [&] {
              Rational ratio(d_paths_dp(x, wm), d_paths_dp(Word{}, wm));
              ratio.canonicalize();
              return mismatch(where + " m=" + std::to_string(mm), ratio, d1);
            });
            record(rg, [&] {
              return mismatch(where + " m=" + std::to_string(mm), mu_prelimit(wm, x), Rational(from_root.at(x)) * d1);
            });
          }
          for (const auto& beta : grid.betas)
            record(rk, [&] {
              Rational rhs = 0;
              for (std::size_t i = 0; i <= x.length(); ++i) {
                const Word tail = x.suffix(i);
                rhs += power(beta, static_cast<unsigned>(tail.rank())) * d_beta_eval<Rational>(x.prefix(i), beta) *
                       one.d_prime(tail);
              }
              return mismatch(where + " beta=" + to_string(beta), d_beta_prime<Rational>(x, w, beta), rhs);
            });
        }
    }
  }
  {
    auto& rmera = report.add("mera1");
    auto& rneotr = report.add("neotr");
    auto& rzabe = report.add("zabe");
    auto& rsum = report.add("sum");
    auto& rstolb = report.add("stolb");
    auto& rleh = report.add("lehamed");
    auto& rleh1 = report.add("lehamed1");
    auto& rzero = report.add("zero-pattern");
    for (const auto& w : grid.w_list)
      for (const auto& beta : grid.betas) {
        const BoundaryKernel<Rational> kernel(w, beta, R);
        const BoundaryKernel<Rational> one(w, Rational(1), R);
        const std::string tag = " w=" + render_cli(w.core()) + " beta=" + to_string(beta);
        for (std::size_t n = 0; n <= R; ++n) {
          const MagicTable table = build_table(w, beta, n);
          Rational total_mass = 0;
          for (std::size_t row = 0; row < table.words.size(); ++row) {
            const Word& v = table.words[row];
            const Rational m = kernel.mu(v);
            total_mass += m;
            record(rneotr, [&] { return violated(m >= 0, at_word(v) + tag, m, 0); });
            const Rational rs = row_sum(table, row);
            record(rzabe, [&] { return violated(m <= rs, at_word(v) + tag, m, rs); });
            for (std::size_t y = 0; y <= n; ++y)
              record(rzero, [&]() -> std::string {
                const auto split = split_by_rank(v, y);
                const Rational& cell = table.cells[row][y];
                const std::string where = at_word(v) + " y=" + std::to_string(y) + tag;
                if (!split) return cell == 0 ? std::string{} : where + ": nonzero cell without a split";
                if (!symbolic_entry(v, y)) return where + ": split without a symbolic cell";
                if (cell < 0) return where + ": negative cell";
                // With beta < 1 the only way a split cell vanishes is d'_1(tail, w) = 0.
                if (beta < 1 && (cell == 0) != (one.d_prime(split->tail) == 0)) return where + ": zero pattern";
                return {};
              });
          }
          record(rmera, [&] { return mismatch("n=" + std::to_string(n) + tag, total_mass, 1); });
          Rational total = 0;
          Rational bound_total = 0;
          for (std::size_t y = 0; y <= n; ++y) {
            Rational col = 0;
            for (const auto& row : table.cells) col += row[y];
            total += col;
            const std::string where = "n=" + std::to_string(n) + " y=" + std::to_string(y) + tag;
            record(rsum, [&] { return mismatch(where, col, column_sum_closed_form(n, y, beta)); });
            const Rational bound = stolb_bound(n, y, beta);
            bound_total += bound;
            record(rstolb, [&] { return violated(col <= bound, where, col, bound); });
          }
          const Rational limit = Rational(1) + Rational(1) / beta;
          record(rleh, [&] {
            return violated(bound_total <= limit, "n=" + std::to_string(n) + tag, bound_total, limit);
          });
          record(rleh1, [&] { return violated(total <= limit, "n=" + std::to_string(n) + tag, total, limit); });
        }
      }
  }
  {
    auto& r = report.add("dostalo");
    for (std::size_t n = 0; n <= R; ++n)
      for (std::size_t y = 0; y <= n; ++y)
        record(r, [&] {
          return mismatch("n=" + std::to_string(n) + " y=" + std::to_string(y), dostalo_sum(n, y),
                          dostalo_product(n, y));
        });
  }
  return report;
}

}  // namespace yf
