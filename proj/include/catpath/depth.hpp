#pragma once

#include <cstdint>
#include <vector>

#include "catpath/series.hpp"

namespace catpath {

/// Query for the depth function D_{m,n}: depth of leaf m (1-based, from the
/// left) summed over all C_n trees. Valid when 1 <= m <= n+1.
struct DepthQuery {
  std::int64_t m = 1;
  std::int64_t n = 0;
};

/// D_{1,n} = C_{n+1} - C_n.
Int depth_first_leaf(std::int64_t n);

/// D_{2,n} = 2 C_{n+1} - 3 C_n. Undefined for n = 0 (a single leaf has no
/// second leaf).
Int depth_second_leaf(std::int64_t n);

/// Dynamic-programming bound shared by depth_recursive and the summed-length
/// recursion. Default 512.
std::int64_t dp_bound();
void set_dp_bound(std::int64_t bound);

/// D_{m,n} by the master equation
///   D_{m,n} = C_n + sum_{k=m-1}^{n-1} D_{m,k} C_{n-1-k}
///                 + sum_{k=0}^{m-2} D_{m-k-1,n-k-1} C_k,
/// memoized in a process-shared table keyed (m, n).
Int depth_recursive(const DepthQuery& q);
Int depth_recursive(std::int64_t m, std::int64_t n);

/// D_{m,n} by closed form. Two routes are evaluated and must agree:
///   m C_{n+1} - C_n - 2 sum_{k=0}^{m-2} (m-k-1) C_k C_{n-k}
/// and the explicit
///   2m(m+1)(2n-2m+1)(2n-2m+3) / ((n+1)(n+2)) * C_m C_{n-m} - C_n,
/// the latter taken through the mirror identity D_{n+1,n} = D_{1,n} when
/// m = n+1.
Int depth_closed_form(const DepthQuery& q);
Int depth_closed_form(std::int64_t m, std::int64_t n);

/// The polynomials of the generating-function ansatz D_m(x) = f_m(x) C(x)
/// + g_m(x). Each has a single 1/x term plus powers x^0..x^{m-2}:
///   f_m(x) = m/x - 1 - 2 sum_{k=0}^{m-2} (m-k-1) C_k x^k
///   g_m(x) = -m/x + sum_{k=0}^{m-2} [(m-k-2) C_{k+1} + C_k] x^k
struct AnsatzPolys {
  std::int64_t m = 1;
  Rat f_pole;           // coefficient of 1/x in f_m
  std::vector<Rat> f;   // x^0..x^{m-2}
  Rat g_pole;           // coefficient of 1/x in g_m
  std::vector<Rat> g;   // x^0..x^{m-2}
};

AnsatzPolys ansatz_polys(std::int64_t m);

/// The series f_m(x) C(x) + g_m(x); coefficient n is D_{m,n} for n >= m-1
/// and 0 below.
Series1 ansatz_series(std::int64_t m, std::int64_t order);

}  // namespace catpath
