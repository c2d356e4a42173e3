#include "catpath/kernels.hpp"

#include <algorithm>
#include <string>

#include "catpath/catalan.hpp"

namespace catpath {

Series1 catalan_series(std::int64_t order) {
  CatalanTable table(order);
  Series1 s(order);
  for (std::int64_t n = 0; n <= order; ++n) s.set_coeff(n, Rat(table.at(n)));
  return s;
}

Series1 catalan_series_fixed_point(std::int64_t order) {
  const Series1 one = Series1::one(order);
  Series1 c = one;
  // coefficient k is fixed after k iterations of C <- 1 + x C^2
  for (std::int64_t it = 0; it <= order; ++it)
    c = one + mul_by_x(c * c).truncated(order);
  return c;
}

Series1 central_binomial_series(std::int64_t order) {
  CatalanTable table(order);
  Series1 s(order);
  for (std::int64_t n = 0; n <= order; ++n)
    s.set_coeff(n, Rat(Int(n + 1) * table.at(n)));
  return s;
}

Series1 nearest_neighbor_length_series(std::int64_t order) {
  const Series1 c = catalan_series(order);
  const Series1 one = Series1::one(order);
  return (c * c * Rat(2) - c * Rat(3) + one) * central_binomial_series(order);
}

Series2 k_series(std::int64_t order) {
  if (order == 0) return Series2::one(0);
  const Series1 c = catalan_series(order);
  const Series2 z_cx = shift_y(lift_x(c, order - 1));
  return inverse(Series2::one(order) - z_cx);
}

namespace {
// B = 1 - xC(x) - xyC(xy)
Series2 bifurcation_denominator(std::int64_t order) {
  if (order == 0) return Series2::one(0);
  const Series1 xc = mul_by_x(catalan_series(order - 1));
  return Series2::one(order) - lift_x(xc, order) - lift_diagonal(xc, order);
}
}  // namespace

Series2 rooted_path_kernel(std::int64_t order) {
  return inverse(bifurcation_denominator(order));
}

Series2 rooted_length_sum_series(std::int64_t order) {
  if (order == 0) return Series2(0);  // G(0,0) = 1, so G(G-1) vanishes there
  const Series1 c = catalan_series(order);
  const Series2 cx = lift_x(c, order);
  const Series2 y_cxy = shift_y(lift_diagonal(c, order - 1));
  Series2 one_minus_y(order);
  one_minus_y.set_coeff(0, 0, Rat(1));
  one_minus_y.set_coeff(0, 1, Rat(-1));
  const Series2 g = (cx - y_cxy) * inverse(one_minus_y);
  return g * g - g;
}

Series2 leaf_path_kernel(std::int64_t order) {
  if (order == 0) return Series2(0);
  const Series1 c = catalan_series(order);
  const Series1 w = Series1::one(order) / (Series1::one(order) -
                                           mul_by_x(c.truncated(order - 1)) *
                                               Rat(2));
  if (!(w == central_binomial_series(order)))
    throw std::logic_error(
        "leaf_path_kernel: 1/(1-2xC) disagrees with the central-binomial "
        "series");
  const Series1 xw = mul_by_x(w.truncated(order - 1));
  const Series2 binv = inverse(bifurcation_denominator(order));
  const Series2 two_binv_minus_one = binv * Rat(2) - Series2::one(order);
  return lift_x(xw, order) * (binv * binv) * two_binv_minus_one;
}

Series2 catalan_triangle_kernel(std::int64_t order) {
  const Series1 c = catalan_series(order);
  const Series2 ct = lift_x(c, order);
  if (order == 0) return ct;
  const Series2 denom = Series2::one(order) - shift_y(lift_x(c, order - 1));
  return ct * inverse(denom);
}

Int lagrange_extract(std::int64_t n, std::int64_t s) {
  if (s < 0 || s >= n)
    throw std::domain_error("lagrange_extract: requires 0 <= s < n, got s=" +
                            std::to_string(s) + " n=" + std::to_string(n));
  const std::int64_t a = n - s;  // xi exponent left after the leading xi
  // Expanding (1 - xi zeta)^{-m} into sum_k binom(m-1+k, k) (xi zeta)^k and
  // (1 - zeta^2)(1+zeta)^p = (1 - zeta)(1+zeta)^{p+1}:
  Int total = 0;
  for (std::int64_t k = 0; k <= std::min(a - 1, s); ++k) {
    const Int term1 = binomial(k + 2, 2) * binomial(2 * a + 1, a - 1 - k) *
                      (binomial(2 * s + 2, s - k) -
                       binomial(2 * s + 2, s - k - 1));
    const Int term2 = Int(k + 1) * binomial(2 * a, a - 1 - k) *
                      (binomial(2 * s + 1, s - k) -
                       binomial(2 * s + 1, s - k - 1));
    total += 2 * term1 - term2;
  }
  return total;
}

std::pair<Rat, Rat> lagrange_inversion_check(const Series1& f,
                                             const Series1& phi,
                                             std::int64_t n) {
  if (n < 1)
    throw std::domain_error("lagrange_inversion_check: requires n >= 1");
  if (phi.coeff(0) != 1)
    throw std::domain_error("lagrange_inversion_check: phi(0) must be 1");

  // u(x) solving u = x phi(u); coefficient k settles after k iterations
  Series1 u(n);
  for (std::int64_t it = 0; it <= n; ++it)
    u = mul_by_x(compose_poly(phi, u)).truncated(n);
  const Rat lhs = compose_poly(f, u).coeff(n);

  const std::int64_t m = n - 1;  // only [u^{n-1}] is needed
  const Series1 fp =
      f.order() >= 1 ? as_series(derivative(f), m) : Series1(m);
  const Series1 phin = pow_trunc(as_series(phi, m), n);
  const Rat rhs = (fp * phin).coeff(m) / Rat(n);
  return {lhs, rhs};
}

std::pair<Rat, Rat> sum_out_check(const Series2& a, std::int64_t n) {
  if (n < 0 || n > a.order())
    throw std::domain_error("sum_out_check: n beyond truncation order");
  Rat lhs(0);
  for (std::int64_t r = 0; r <= n; ++r) lhs += a.coeff(r, n - r);
  const Rat rhs = diagonal_sum(a).coeff(n);
  return {lhs, rhs};
}

}  // namespace catpath
