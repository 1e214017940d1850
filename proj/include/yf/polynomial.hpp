#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yf/rational.hpp"

namespace yf {

/// Polynomial in beta with exact coefficients c_0 + c_1 beta + ...; trailing
/// zeros are always trimmed, so the zero polynomial has no coefficients.
class BetaPolynomial {
 public:
  BetaPolynomial() = default;
  explicit BetaPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  template <class T = Rational>
  T eval(const T& beta) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= beta;
      acc += ScalarOps<T>::from(*it);
    }
    return acc;
  }

  /// Exact quotient by (1 - beta)^times, or nullopt if the division leaves a remainder.
  std::optional<BetaPolynomial> divide_by_one_minus_beta(std::size_t times) const {
    std::vector<Rational> c = coeffs_;
    for (std::size_t t = 0; t < times; ++t) {
      if (c.empty()) return BetaPolynomial{};
      // Synthetic division by (beta - 1), then negate.
      std::vector<Rational> q(c.size() - 1);
      Rational carry = 0;
      for (std::size_t i = c.size(); i-- > 1;) {
        carry += c[i];
        q[i - 1] = carry;
      }
      if (carry + c[0] != 0) return std::nullopt;
      for (auto& v : q) v = -v;
      c = std::move(q);
    }
    return BetaPolynomial{std::move(c)};
  }

  friend bool operator==(const BetaPolynomial&, const BetaPolynomial&) = default;

  /// "c0,c1,..." with exact entries; "0" for the zero polynomial.
  std::string to_csv() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ',';
      s += to_string(coeffs_[i]);
    }
    return s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace yf
