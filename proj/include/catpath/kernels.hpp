#pragma once

#include <cstdint>
#include <utility>

#include "catpath/series.hpp"

namespace catpath {

/// C(x) = sum C_n x^n from the memoized table.
Series1 catalan_series(std::int64_t order);

/// The same series grown by fixed-point iteration on C = 1 + x C^2; must
/// agree with the table route coefficient by coefficient.
Series1 catalan_series_fixed_point(std::int64_t order);

/// 1/sqrt(1-4x) = sum (n+1) C_n x^n (central binomial coefficients).
Series1 central_binomial_series(std::int64_t order);

/// S(1,x) = (2C^2 - 3C + 1)/sqrt(1-4x); coefficient n is S_n(1).
Series1 nearest_neighbor_length_series(std::int64_t order);

/// K(x,z) = 1/(1 - z C(x)); cell (j, k) counts trees with j + k vertices
/// whose leftmost leaf sits k vertices below the root.
Series2 k_series(std::int64_t order);

/// 1/(1 - xC(x) - xyC(xy)); cell (n, p) counts rooted paths of penetration p
/// on trees with n vertices, i.e. C_n for p <= n and 0 beyond.
Series2 rooted_path_kernel(std::int64_t order);

/// G(G-1) with G = (C(x) - yC(xy))/(1 - y); cell (n, p) is the summed length
/// of rooted paths of penetration p, equal to the depth function D_{p+1,n}.
Series2 rooted_length_sum_series(std::int64_t order);

/// The leaf-to-leaf kernel
///   x/(1-2xC(x)) * 1/B^2 * (2/B - 1),   B = 1 - xC(x) - xyC(xy);
/// cell (n, s) is the summed leaf-to-leaf path length S_n(s+1). The
/// 1/(1-2xC) factor is checked against the central-binomial series
/// internally; the leading x aligns tree size with the x-exponent (at s = 0
/// the kernel collapses to (2C^2-3C+1)/sqrt(1-4x), the nearest-neighbor
/// series).
Series2 leaf_path_kernel(std::int64_t order);

/// C(t)/(1 - s C(t)) in cells (t-power, s-power); its antidiagonals are the
/// rows of the Catalan triangle.
Series2 catalan_triangle_kernel(std::int64_t order);

/// Closed double-coefficient extraction of the leaf-to-leaf kernel after the
/// substitution to u-variables:
///   [xi^{n-s} zeta^s] { xi (1-zeta^2) (1+xi)^{2(n-s)} (1+zeta)^{2s}
///                       (1-xi zeta)^{-2} [2(1+xi)(1+zeta)/(1-xi zeta) - 1] }.
/// Evaluates through binomial sums only; requires 0 <= s < n.
Int lagrange_extract(std::int64_t n, std::int64_t s);

/// Both sides of the Lagrange inversion formula for u(x) = x phi(u(x)):
///   lhs = [x^n]{f(u(x))},   rhs = (1/n) [u^{n-1}]{f'(u) phi(u)^n}.
/// f and phi are taken as polynomials in u; phi(0) must be 1 and n >= 1.
std::pair<Rat, Rat> lagrange_inversion_check(const Series1& f,
                                             const Series1& phi,
                                             std::int64_t n);

/// Both sides of the sum-out identity
///   lhs = sum_{r=0}^{n} [x^r y^{n-r}]{a},   rhs = [x^n]{a(x,x)}.
std::pair<Rat, Rat> sum_out_check(const Series2& a, std::int64_t n);

}  // namespace catpath
