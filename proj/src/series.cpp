#include "catpath/series.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace catpath {

namespace {
std::int64_t require_order(std::int64_t order) {
  if (order < 0)
    throw std::domain_error("series: negative truncation order " +
                            std::to_string(order));
  return order;
}
}  // namespace

Series1::Series1(std::int64_t order)
    : c_(static_cast<std::size_t>(require_order(order)) + 1, Rat(0)) {}

Series1::Series1(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::domain_error("series: empty coefficient list");
}

Series1 Series1::constant(Rat value, std::int64_t order) {
  Series1 s(order);
  s.c_[0] = std::move(value);
  return s;
}

Series1 Series1::monomial(std::int64_t power, std::int64_t order) {
  Series1 s(order);
  if (power < 0 || power > order)
    throw std::domain_error("monomial: power outside truncation order");
  s.c_[static_cast<std::size_t>(power)] = 1;
  return s;
}

const Rat& Series1::coeff(std::int64_t n) const {
  if (n < 0 || n > order())
    throw std::domain_error("Series1::coeff: index " + std::to_string(n) +
                            " beyond truncation order " +
                            std::to_string(order()));
  return c_[static_cast<std::size_t>(n)];
}

void Series1::set_coeff(std::int64_t n, Rat value) {
  if (n < 0 || n > order())
    throw std::domain_error("Series1::set_coeff: index beyond order");
  c_[static_cast<std::size_t>(n)] = std::move(value);
}

Series1 Series1::operator+(const Series1& o) const {
  Series1 out(std::min(order(), o.order()));
  for (std::int64_t n = 0; n <= out.order(); ++n)
    out.c_[static_cast<std::size_t>(n)] =
        c_[static_cast<std::size_t>(n)] + o.c_[static_cast<std::size_t>(n)];
  return out;
}

Series1 Series1::operator-(const Series1& o) const {
  Series1 out(std::min(order(), o.order()));
  for (std::int64_t n = 0; n <= out.order(); ++n)
    out.c_[static_cast<std::size_t>(n)] =
        c_[static_cast<std::size_t>(n)] - o.c_[static_cast<std::size_t>(n)];
  return out;
}

Series1 Series1::operator-() const {
  Series1 out(order());
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
  return out;
}

Series1 Series1::operator*(const Series1& o) const {
  Series1 out(std::min(order(), o.order()));
  for (std::int64_t i = 0; i <= out.order(); ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    for (std::int64_t j = 0; i + j <= out.order(); ++j) {
      if (o.c_[static_cast<std::size_t>(j)] == 0) continue;
      out.c_[static_cast<std::size_t>(i + j)] +=
          c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

Series1 Series1::operator/(const Series1& o) const {
  if (o.c_[0] == 0)
    throw std::domain_error(
        "Series1: division by a series with zero constant term");
  Series1 out(std::min(order(), o.order()));
  for (std::int64_t n = 0; n <= out.order(); ++n) {
    Rat acc = c_[static_cast<std::size_t>(n)];
    for (std::int64_t k = 1; k <= n; ++k)
      acc -= o.c_[static_cast<std::size_t>(k)] *
             out.c_[static_cast<std::size_t>(n - k)];
    out.c_[static_cast<std::size_t>(n)] = acc / o.c_[0];
  }
  return out;
}

Series1 Series1::operator*(const Rat& s) const {
  Series1 out(order());
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * s;
  return out;
}

Series1 Series1::truncated(std::int64_t order) const {
  if (order > this->order())
    throw std::domain_error("Series1::truncated: cannot extend the order");
  Series1 out(order);
  for (std::int64_t n = 0; n <= order; ++n)
    out.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n)];
  return out;
}

Series1 as_series(const Series1& poly, std::int64_t order) {
  Series1 out(order);
  for (std::int64_t n = 0; n <= std::min(order, poly.order()); ++n)
    out.set_coeff(n, poly.coeff(n));
  return out;
}

Series1 mul_by_x(const Series1& a) {
  Series1 out(a.order() + 1);
  for (std::int64_t n = 0; n <= a.order(); ++n)
    out.set_coeff(n + 1, a.coeff(n));
  return out;
}

Series1 shift_down(const Series1& a) {
  if (a.order() < 1)
    throw std::domain_error("shift_down: order-0 series has no tail");
  Series1 out(a.order() - 1);
  for (std::int64_t n = 1; n <= a.order(); ++n)
    out.set_coeff(n - 1, a.coeff(n));
  return out;
}

Series1 derivative(const Series1& a) {
  if (a.order() < 1)
    throw std::domain_error("derivative: order-0 series has no derivative");
  Series1 out(a.order() - 1);
  for (std::int64_t n = 1; n <= a.order(); ++n)
    out.set_coeff(n - 1, a.coeff(n) * Rat(n));
  return out;
}

Series1 euler(const Series1& a) {
  Series1 out(a.order());
  for (std::int64_t n = 0; n <= a.order(); ++n)
    out.set_coeff(n, a.coeff(n) * Rat(n));
  return out;
}

Series1 pow_trunc(const Series1& base, std::int64_t e) {
  if (e < 0) throw std::domain_error("pow_trunc: negative exponent");
  Series1 result = Series1::one(base.order());
  Series1 acc = base;
  std::int64_t k = e;
  while (k > 0) {
    if (k & 1) result = result * acc;
    k >>= 1;
    if (k > 0) acc = acc * acc;
  }
  return result;
}

Series1 compose_poly(const Series1& f, const Series1& g) {
  if (g.coeff(0) != 0)
    throw std::domain_error(
        "compose_poly: inner series needs a zero constant term");
  Series1 result = Series1::constant(f.coeff(f.order()), g.order());
  for (std::int64_t k = f.order() - 1; k >= 0; --k)
    result = result * g + Series1::constant(f.coeff(k), g.order());
  return result;
}

// ---------------------------------------------------------------------------

Series2::Series2(std::int64_t order)
    : order_(require_order(order)),
      c_(static_cast<std::size_t>((order + 1) * (order + 2) / 2), Rat(0)) {}

Series2 Series2::constant(Rat value, std::int64_t order) {
  Series2 s(order);
  s.c_[0] = std::move(value);
  return s;
}

std::size_t Series2::index(std::int64_t i, std::int64_t j) const {
  const std::int64_t d = i + j;
  return static_cast<std::size_t>(d * (d + 1) / 2 + i);
}

const Rat& Series2::coeff(std::int64_t i, std::int64_t j) const {
  if (i < 0 || j < 0 || i + j > order_)
    throw std::domain_error("Series2::coeff: cell (" + std::to_string(i) +
                            ", " + std::to_string(j) +
                            ") beyond truncation order " +
                            std::to_string(order_));
  return c_[index(i, j)];
}

void Series2::set_coeff(std::int64_t i, std::int64_t j, Rat value) {
  if (i < 0 || j < 0 || i + j > order_)
    throw std::domain_error("Series2::set_coeff: cell beyond order");
  c_[index(i, j)] = std::move(value);
}

Series2 Series2::operator+(const Series2& o) const {
  Series2 out(std::min(order_, o.order_));
  for (std::int64_t d = 0; d <= out.order_; ++d)
    for (std::int64_t i = 0; i <= d; ++i)
      out.c_[out.index(i, d - i)] =
          c_[index(i, d - i)] + o.c_[o.index(i, d - i)];
  return out;
}

Series2 Series2::operator-(const Series2& o) const {
  Series2 out(std::min(order_, o.order_));
  for (std::int64_t d = 0; d <= out.order_; ++d)
    for (std::int64_t i = 0; i <= d; ++i)
      out.c_[out.index(i, d - i)] =
          c_[index(i, d - i)] - o.c_[o.index(i, d - i)];
  return out;
}

Series2 Series2::operator-() const {
  Series2 out(order_);
  for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = -c_[k];
  return out;
}

Series2 Series2::operator*(const Series2& o) const {
  Series2 out(std::min(order_, o.order_));
  for (std::int64_t da = 0; da <= out.order_; ++da) {
    for (std::int64_t i1 = 0; i1 <= da; ++i1) {
      const Rat& a = c_[index(i1, da - i1)];
      if (a == 0) continue;
      const std::int64_t j1 = da - i1;
      for (std::int64_t db = 0; da + db <= out.order_; ++db) {
        for (std::int64_t i2 = 0; i2 <= db; ++i2) {
          const Rat& b = o.c_[o.index(i2, db - i2)];
          if (b == 0) continue;
          out.c_[out.index(i1 + i2, j1 + db - i2)] += a * b;
        }
      }
    }
  }
  return out;
}

Series2 Series2::operator*(const Rat& s) const {
  Series2 out(order_);
  for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = c_[k] * s;
  return out;
}

Series2 inverse(const Series2& b) {
  const Rat& b0 = b.coeff(0, 0);
  if (b0 == 0)
    throw std::domain_error(
        "Series2: inverse of a series with zero constant term");
  const std::int64_t N = b.order();
  Series2 inv(N);
  inv.set_coeff(0, 0, Rat(1) / b0);
  for (std::int64_t d = 1; d <= N; ++d) {
    for (std::int64_t i = 0; i <= d; ++i) {
      const std::int64_t j = d - i;
      Rat acc(0);
      // sum over (k,l) <= (i,j) componentwise, excluding (0,0)
      for (std::int64_t k = 0; k <= i; ++k)
        for (std::int64_t l = (k == 0 ? 1 : 0); l <= j; ++l) {
          const Rat& bk = b.coeff(k, l);
          if (bk == 0) continue;
          acc += bk * inv.coeff(i - k, j - l);
        }
      inv.set_coeff(i, j, -acc / b0);
    }
  }
  return inv;
}

Series2 Series2::operator/(const Series2& o) const {
  return *this * inverse(o);
}

Series2 lift_x(const Series1& a, std::int64_t order) {
  Series2 out(order);
  for (std::int64_t k = 0; k <= std::min(order, a.order()); ++k)
    out.set_coeff(k, 0, a.coeff(k));
  return out;
}

Series2 lift_diagonal(const Series1& a, std::int64_t order) {
  Series2 out(order);
  for (std::int64_t k = 0; 2 * k <= order && k <= a.order(); ++k)
    out.set_coeff(k, k, a.coeff(k));
  return out;
}

Series2 shift_y(const Series2& a) {
  Series2 out(a.order() + 1);
  for (std::int64_t d = 0; d <= a.order(); ++d)
    for (std::int64_t i = 0; i <= d; ++i)
      out.set_coeff(i, d - i + 1, a.coeff(i, d - i));
  return out;
}

Series2 d_dy(const Series2& a) {
  if (a.order() < 1)
    throw std::domain_error("d_dy: order-0 series has no derivative");
  Series2 out(a.order() - 1);
  for (std::int64_t d = 1; d <= a.order(); ++d)
    for (std::int64_t i = 0; i < d; ++i)
      out.set_coeff(i, d - i - 1, a.coeff(i, d - i) * Rat(d - i));
  return out;
}

Series1 diagonal_sum(const Series2& a) {
  Series1 out(a.order());
  for (std::int64_t d = 0; d <= a.order(); ++d) {
    Rat acc(0);
    for (std::int64_t i = 0; i <= d; ++i) acc += a.coeff(i, d - i);
    out.set_coeff(d, acc);
  }
  return out;
}

void write_series_csv(std::ostream& os, const Series1& a) {
  os << "index,numerator,denominator\n";
  for (std::int64_t n = 0; n <= a.order(); ++n) {
    const Rat& q = a.coeff(n);
    os << n << ',' << q.get_num().get_str() << ',' << q.get_den().get_str()
       << '\n';
  }
}

void write_series_csv(std::ostream& os, const Series2& a) {
  os << "i,j,numerator,denominator\n";
  for (std::int64_t d = 0; d <= a.order(); ++d)
    for (std::int64_t i = 0; i <= d; ++i) {
      const Rat& q = a.coeff(i, d - i);
      os << i << ',' << (d - i) << ',' << q.get_num().get_str() << ','
         << q.get_den().get_str() << '\n';
    }
}

}  // namespace catpath
