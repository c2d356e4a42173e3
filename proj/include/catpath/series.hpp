#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "catpath/exact.hpp"

namespace catpath {

/// Truncated formal power series in one variable with exact rational
/// coefficients. A series of order N carries the coefficients of x^0..x^N.
/// Binary operations produce results of order min(orders); asking for a
/// coefficient beyond the truncation order is a domain error, never a
/// silent zero. Values are immutable in all arithmetic (pure operations).
class Series1 {
 public:
  explicit Series1(std::int64_t order);
  explicit Series1(std::vector<Rat> coeffs);  // order = coeffs.size() - 1

  static Series1 constant(Rat value, std::int64_t order);
  static Series1 one(std::int64_t order) { return constant(Rat(1), order); }
  static Series1 monomial(std::int64_t power, std::int64_t order);  // x^power

  std::int64_t order() const {
    return static_cast<std::int64_t>(c_.size()) - 1;
  }
  const Rat& coeff(std::int64_t n) const;
  void set_coeff(std::int64_t n, Rat value);

  Series1 operator+(const Series1& o) const;
  Series1 operator-(const Series1& o) const;
  Series1 operator-() const;
  Series1 operator*(const Series1& o) const;
  /// Formal quotient; the divisor needs a nonzero constant term.
  Series1 operator/(const Series1& o) const;
  Series1 operator*(const Rat& s) const;

  bool operator==(const Series1& o) const { return c_ == o.c_; }

  /// Restriction to a smaller order.
  Series1 truncated(std::int64_t order) const;

 private:
  std::vector<Rat> c_;
};

/// Reinterpret a polynomial (exactly the given coefficients, all higher ones
/// zero) as a series of the requested order.
Series1 as_series(const Series1& poly, std::int64_t order);

Series1 mul_by_x(const Series1& a);    // order + 1
Series1 shift_down(const Series1& a);  // (a - a(0))/x, order - 1
Series1 derivative(const Series1& a);  // d/dx, order - 1
Series1 euler(const Series1& a);       // x d/dx: coefficient n -> n*a_n
Series1 pow_trunc(const Series1& base, std::int64_t e);

/// f(g) where f is taken as a polynomial and g has zero constant term.
Series1 compose_poly(const Series1& f, const Series1& g);

/// Truncated series in two variables with total-degree truncation: a series
/// of order N carries every coefficient of x^i y^j with i + j <= N, stored
/// triangularly. Same conventions as Series1.
class Series2 {
 public:
  explicit Series2(std::int64_t order);

  static Series2 constant(Rat value, std::int64_t order);
  static Series2 one(std::int64_t order) { return constant(Rat(1), order); }

  std::int64_t order() const { return order_; }
  const Rat& coeff(std::int64_t i, std::int64_t j) const;
  void set_coeff(std::int64_t i, std::int64_t j, Rat value);

  Series2 operator+(const Series2& o) const;
  Series2 operator-(const Series2& o) const;
  Series2 operator-() const;
  Series2 operator*(const Series2& o) const;
  Series2 operator/(const Series2& o) const;
  Series2 operator*(const Rat& s) const;

  bool operator==(const Series2& o) const {
    return order_ == o.order_ && c_ == o.c_;
  }

 private:
  std::size_t index(std::int64_t i, std::int64_t j) const;
  std::int64_t order_;
  std::vector<Rat> c_;
};

/// Multiplicative inverse; the constant term must be nonzero.
Series2 inverse(const Series2& b);

/// Embeds a univariate series into the first variable: c_k -> cell (k, 0).
Series2 lift_x(const Series1& a, std::int64_t order);

/// The substitution z := xy of a univariate series: c_k -> cell (k, k).
Series2 lift_diagonal(const Series1& a, std::int64_t order);

Series2 shift_y(const Series2& a);  // multiply by y, order + 1

/// Partial derivative in the second variable, order - 1.
Series2 d_dy(const Series2& a);

/// a(x, x): antidiagonal sums, [x^n]{a(x,x)} = sum_{i+j=n} a_ij.
Series1 diagonal_sum(const Series2& a);

/// CSV dumps for golden-file tests: "index,numerator,denominator" rows
/// (resp. "i,j,numerator,denominator"), LF line endings.
void write_series_csv(std::ostream& os, const Series1& a);
void write_series_csv(std::ostream& os, const Series2& a);

}  // namespace catpath
