#pragma once

// Magic tables T_{w,beta,n}(v, y): a dense nonnegative matrix over
// YF_n x {0..n} whose rows dominate mu_{w,beta} and whose column sums have
// closed forms.

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "yf/boundary.hpp"
#include "yf/harmonic.hpp"
#include "yf/parallel.hpp"
#include "yf/pathcount.hpp"
#include "yf/rational.hpp"
#include "yf/word.hpp"

namespace yf {

/// A nonzero cell written as coefficient * d'_1(argument, w) * beta^beta_exp
/// * (1 - beta^2)^one_minus_beta_sq_exp.
struct SymbolicCell {
  Rational coefficient;  // d(eps, v) * q(head)
  Word argument;         // tail of the split
  std::size_t beta_exp = 0;
  std::size_t one_minus_beta_sq_exp = 0;

  friend bool operator==(const SymbolicCell&, const SymbolicCell&) = default;
};

/// Symbolic form of T(v, y), or nullopt when v has no suffix of rank y.
inline std::optional<SymbolicCell> symbolic_entry(const Word& v, std::size_t y) {
  const auto split = split_by_rank(v, y);
  if (!split) return std::nullopt;
  Rational coeff = q<Rational>(split->head);
  coeff *= Rational(d_from_empty(v));
  return SymbolicCell{coeff, split->tail, y, split->head.length()};
}

namespace detail {

inline Rational one_minus_beta_sq(const Rational& beta) { return Rational(1) - beta * beta; }

inline Rational evaluate_cell(const SymbolicCell& cell, const Rational& d1, const Rational& beta) {
  Rational value = cell.coefficient * d1;
  value *= power(beta, static_cast<unsigned>(cell.beta_exp));
  value *= power(one_minus_beta_sq(beta), static_cast<unsigned>(cell.one_minus_beta_sq_exp));
  return value;
}

}  // namespace detail

/// T_{w,beta,n}(v, y) for a single cell.
inline Rational magic_entry(const TailOnesWord& w, const Rational& beta, std::size_t n, const Word& v,
                            std::size_t y) {
  check_beta(beta);
  if (v.rank() != n) throw std::invalid_argument("magic_entry: rank(v) != n");
  if (y > n) throw std::out_of_range("magic_entry: y exceeds n");
  const auto cell = symbolic_entry(v, y);
  if (!cell) return 0;
  return detail::evaluate_cell(*cell, d1_prime<Rational>(cell->argument, w), beta);
}

struct MagicTable {
  TailOnesWord w;
  Rational beta;
  std::size_t n = 0;
  std::vector<Word> words;                   // level order
  std::vector<std::vector<Rational>> cells;  // cells[row][y], y = 0..n

  const Rational& entry(std::size_t row, std::size_t y) const { return cells.at(row).at(y); }
};

inline MagicTable build_table(const TailOnesWord& w, const Rational& beta, std::size_t n, unsigned jobs = 1) {
  check_beta(beta);
  MagicTable table{w, beta, n, enumerate_level(n).words, {}};
  table.cells.assign(table.words.size(), std::vector<Rational>(n + 1, Rational(0)));
  const BoundaryKernel<Rational> kernel(w, Rational(1), n);
  parallel_for(table.words.size(), jobs, [&](std::size_t row) {
    const Word& v = table.words[row];
    for (std::size_t y = 0; y <= n; ++y)
      if (const auto cell = symbolic_entry(v, y))
        table.cells[row][y] = detail::evaluate_cell(*cell, kernel.d_prime(cell->argument), beta);
  });
  return table;
}

/// sum over x' in YF_{n-y} of q(x') d(eps, x' 1^y) beta^y (1 - beta^2)^{#x'}
inline Rational column_sum_closed_form(std::size_t n, std::size_t y, const Rational& beta) {
  if (y > n) throw std::out_of_range("column_sum_closed_form: y exceeds n");
  const Rational omb = detail::one_minus_beta_sq(beta);
  Rational total = 0;
  for (const Word& head : enumerate_level(n - y).words) {
    Rational term = q<Rational>(head);
    term *= Rational(d_from_empty(head + Word::ones(y)));
    term *= power(omb, static_cast<unsigned>(head.length()));
    total += term;
  }
  return total * power(beta, static_cast<unsigned>(y));
}

/// sum over x' in YF_{n-y} of q(x') d(eps, x' 1^y), by enumeration.
inline Rational dostalo_sum(std::size_t n, std::size_t y) {
  if (y > n) throw std::out_of_range("dostalo_sum: y exceeds n");
  Rational total = 0;
  for (const Word& head : enumerate_level(n - y).words)
    total += q<Rational>(head) * Rational(d_from_empty(head + Word::ones(y)));
  return total;
}

/// prod_{i=1}^{floor((n-y)/2)} (2i + y) / (2i)
inline Rational dostalo_product(std::size_t n, std::size_t y) {
  if (y > n) throw std::out_of_range("dostalo_product: y exceeds n");
  Rational p = 1;
  for (std::size_t i = 1; i <= (n - y) / 2; ++i) {
    p *= Rational(static_cast<long>(2 * i + y));
    p /= Rational(static_cast<long>(2 * i));
  }
  return p;
}

/// Upper bound for a column sum: dostalo_product * beta^y * (1 - beta^2)^{floor((n-y)/2)}.
inline Rational stolb_bound(std::size_t n, std::size_t y, const Rational& beta) {
  Rational b = dostalo_product(n, y);
  b *= power(beta, static_cast<unsigned>(y));
  b *= power(detail::one_minus_beta_sq(beta), static_cast<unsigned>((n - y) / 2));
  return b;
}

/// Sum of column y. Throws std::logic_error if it disagrees with the closed form.
inline Rational column_sum(const MagicTable& table, std::size_t y) {
  if (y > table.n) throw std::out_of_range("column_sum: y exceeds n");
  Rational total = 0;
  for (const auto& row : table.cells) total += row[y];
  const Rational expected = column_sum_closed_form(table.n, y, table.beta);
  if (total != expected)
    throw std::logic_error("column_sum: " + to_string(total) + " != closed form " + to_string(expected));
  return total;
}

inline Rational row_sum(const MagicTable& table, std::size_t row) {
  Rational total = 0;
  for (const auto& c : table.cells.at(row)) total += c;
  return total;
}

/// Sum of all cells. Throws std::logic_error if it exceeds 1 + 1/beta.
inline Rational table_total(const MagicTable& table) {
  Rational total = 0;
  for (std::size_t y = 0; y <= table.n; ++y) total += column_sum(table, y);
  const Rational bound = Rational(1) + Rational(1) / table.beta;
  if (total > bound) throw std::logic_error("table_total: " + to_string(total) + " exceeds " + to_string(bound));
  return total;
}

/// Dense CSV: "word,y=0,...,y=n" then one row per word in level order.
inline std::string magic_csv(const MagicTable& table) {
  std::ostringstream os;
  os << "word";
  for (std::size_t y = 0; y <= table.n; ++y) os << ",y=" << y;
  os << '\n';
  for (std::size_t r = 0; r < table.words.size(); ++r) {
    os << render_cli(table.words[r]);
    for (const auto& c : table.cells[r]) os << ',' << to_string(c);
    os << '\n';
  }
  return os.str();
}

/// Long-format CSV of the nonzero symbolic cells of YF_n.
inline std::string magic_symbolic_csv(std::size_t n) {
  std::ostringstream os;
  os << "word,y,coefficient,d1_argument,beta_exp,one_minus_beta_sq_exp\n";
  for (const Word& v : enumerate_level(n).words)
    for (std::size_t y = 0; y <= n; ++y)
      if (const auto cell = symbolic_entry(v, y))
        os << render_cli(v) << ',' << y << ',' << to_string(cell->coefficient) << ','
           << render_cli(cell->argument) << ',' << cell->beta_exp << ',' << cell->one_minus_beta_sq_exp << '\n';
  return os.str();
}

}  // namespace yf
