#pragma once

// Exact Laurent polynomials in one variable v (v^2 = q) with
// arbitrary-precision integer coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace affhecke {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LaurentInt {
 public:
  LaurentInt() = default;
  LaurentInt(long long constant);  // NOLINT: integers embed as constants
  LaurentInt(Integer constant);    // NOLINT

  static LaurentInt monomial(Integer coeff, int exponent);
  static LaurentInt v_power(int k) { return monomial(1, k); }
  static LaurentInt q_power(int k) { return monomial(1, 2 * k); }
  /// v + v^{-1}, the value of C'_s C'_s / C'_s.
  static LaurentInt v_plus_vinv();

  bool is_zero() const { return coeffs_.empty(); }
  explicit operator bool() const { return !is_zero(); }

  // Lowest and highest exponents; zero polynomial has neither.
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const;

  Integer coeff(int exponent) const;

  /// Calls fn(exponent, coefficient) for each nonzero term, ascending.
  void for_each_term(const std::function<void(int, const Integer&)>& fn) const;

  LaurentInt& operator+=(const LaurentInt& other);
  LaurentInt& operator-=(const LaurentInt& other);
  LaurentInt& operator*=(const LaurentInt& other);
  LaurentInt operator-() const;

  friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
  friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);
  friend bool operator==(const LaurentInt& a, const LaurentInt& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Adds c * v^shift * other; the hot path of every expansion loop.
  void add_scaled(const LaurentInt& other, const Integer& c, int shift = 0);

  /// Multiplication by v^k.
  LaurentInt shifted(int k) const;

  /// v -> v^{-1}.
  LaurentInt bar() const;
  bool is_bar_invariant() const { return bar() == *this; }

  /// Highest v-exponent and its coefficient. Throws on zero.
  std::pair<int, Integer> leading() const;

  /// Exact evaluation at v = v0, v0 != 0.
  Rational specialize(const Rational& v0) const;

  /// +-v^k
  bool is_unit() const;
  bool is_constant() const { return is_zero() || (coeffs_.size() == 1 && low_ == 0); }

  /// Exact quotient a / b in Z[v, v^-1], or nothing when b does not divide a.
  friend bool try_divide(const LaurentInt& a, const LaurentInt& b, LaurentInt& out);

  /// Canonical text: descending exponents, "v^2 - 3*v^-1", "0" for zero.
  std::string str() const;
  static LaurentInt parse(std::string_view text);

  /// Text in q for KL polynomials: ascending, "1+q+2*q^2". Requires even
  /// nonnegative exponents.
  std::string q_str() const;

  std::size_t hash() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Integer> coeffs_;  // coeffs_[i] is the coefficient of v^(low_+i)
};

std::ostream& operator<<(std::ostream& os, const LaurentInt& a);

}  // namespace affhecke
