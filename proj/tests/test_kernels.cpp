#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catpath/catalan.hpp"
#include "catpath/depth.hpp"
#include "catpath/kernels.hpp"
#include "catpath/paths.hpp"
#include "catpath/tree.hpp"

using namespace catpath;

TEST_CASE("central binomial series is the reciprocal square root") {
  const Series1 w = central_binomial_series(32);
  for (std::int64_t n = 0; n <= 32; ++n)
    CHECK(w.coeff(n) == Rat(binomial(2 * n, n)));
  const Series1 c = catalan_series(32);
  const Series1 prod =
      (Series1::one(32) - mul_by_x(c.truncated(31)) * Rat(2)) * w;
  CHECK(prod == Series1::one(32));
}

TEST_CASE("nearest-neighbor length series") {
  const Series1 s1 = nearest_neighbor_length_series(32);
  CHECK(s1.coeff(0) == 0);
  CHECK(s1.coeff(1) == 1);
  CHECK(s1.coeff(3) == 27);
  for (std::int64_t n = 0; n <= 32; ++n)
    CHECK(s1.coeff(n) == make_rat(Int(3) * n * n * catalan(n), Int(n + 2)));
}

TEST_CASE("K series") {
  const Series2 k = k_series(24);
  CHECK(k.coeff(0, 0) == 1);
  // defining recursion K = 1 + z C(x) K holds to truncation
  const Series2 z_cx = shift_y(lift_x(catalan_series(24), 23));
  CHECK(k == Series2::one(24) + z_cx * k);
  // k_{jk} counts external rooted paths of length k on j+k vertices
  CHECK(k.coeff(2, 1) == 2);
  // diagonal substitution z := x collapses K to C
  CHECK(diagonal_sum(k) == catalan_series(24));
  // dK/dz = C K^2
  const Series2 rhs = lift_x(catalan_series(24), 24) * k * k;
  const Series2 lhs = d_dy(k);
  for (std::int64_t d = 0; d <= 23; ++d)
    for (std::int64_t i = 0; i <= d; ++i)
      CHECK(lhs.coeff(i, d - i) == rhs.coeff(i, d - i));
}

TEST_CASE("external rooted path length sums from K") {
  // sum_k k * k_{n-k,k} telescopes to C_{n+1} - C_n; the average is then
  // (C_{n+1} - C_n)/C_n = 3n/(n+2)
  const Series2 k = k_series(20);
  for (std::int64_t n = 0; n <= 20; ++n) {
    Rat e(0);
    for (std::int64_t len = 0; len <= n; ++len)
      e += Rat(len) * k.coeff(n - len, len);
    CHECK(e == Rat(catalan(n + 1) - catalan(n)));
    if (n >= 1)
      CHECK(e / Rat(catalan(n)) == make_rat(Int(3) * n, Int(n + 2)));
  }
}

TEST_CASE("rooted path kernel counts C_n theta(n-p)") {
  const Series2 j = rooted_path_kernel(20);
  CHECK(j.coeff(3, 0) == 5);
  CHECK(j.coeff(2, 5) == 0);
  CHECK(j.coeff(4, 2) == 14);
  for (std::int64_t d = 0; d <= 20; ++d)
    for (std::int64_t n = 0; n <= d; ++n) {
      const std::int64_t p = d - n;
      CHECK(j.coeff(n, p) == (p <= n ? Rat(catalan(n)) : Rat(0)));
    }
}

TEST_CASE("rooted length sums equal depth functions") {
  const Series2 l = rooted_length_sum_series(20);
  CHECK(l.coeff(1, 0) == 1);
  CHECK(l.coeff(4, 1) == 42);
  CHECK(l.coeff(4, 1) == Rat(2 * catalan(5) - 3 * catalan(4)));
  for (std::int64_t d = 0; d <= 20; ++d)
    for (std::int64_t n = 0; n <= d; ++n) {
      const std::int64_t p = d - n;
      const Rat expected =
          p <= n ? Rat(depth_closed_form(p + 1, n)) : Rat(0);
      CHECK(l.coeff(n, p) == expected);
    }
}

TEST_CASE("leaf path kernel columns") {
  const Series2 kernel = leaf_path_kernel(21);
  CHECK(kernel.coeff(2, 1) == 4);
  CHECK(kernel.coeff(0, 0) == 0);
  for (std::int64_t n = 0; n <= 10; ++n) {
    // s = 0 column: the nearest-neighbor sums
    CHECK(kernel.coeff(n, 0) ==
          make_rat(Int(3) * n * n * catalan(n), Int(n + 2)));
    // s = n column vanishes (separation beyond the leaf count)
    CHECK(kernel.coeff(n, n) == 0);
  }
  // s = n-1 column is one pair per tree: S_n(n) = D_{n,n}
  for (std::int64_t n = 1; n <= 10; ++n)
    CHECK(kernel.coeff(n, n - 1) == Rat(depth_closed_form(n, n)));
}

TEST_CASE("lagrange extraction closed form") {
  CHECK(lagrange_extract(2, 1) == 4);
  CHECK(lagrange_extract(5, 2) == 474);
  for (std::int64_t n = 1; n <= 20; ++n)
    CHECK(lagrange_extract(n, 0) ==
          to_integer(make_rat(Int(3) * n * n * catalan(n), Int(n + 2))));
  CHECK_THROWS_AS(lagrange_extract(5, 5), std::domain_error);
  CHECK_THROWS_AS(lagrange_extract(5, -1), std::domain_error);
}

TEST_CASE("kernel, extraction and closed form agree") {
  const Series2 kernel = leaf_path_kernel(23);
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t s = 0; s < n; ++s) {
      const Rat cell = kernel.coeff(n, s);
      CHECK(cell == Rat(lagrange_extract(n, s)));
      CHECK(cell == Rat(summed_length_closed(n, s + 1)));
    }
}

TEST_CASE("lagrange inversion with x = u/(1+u)^2") {
  const Series1 phi(std::vector<Rat>{Rat(1), Rat(2), Rat(1)});  // (1+u)^2
  const Series1 ident(std::vector<Rat>{Rat(0), Rat(1)});
  const Series1 one_plus(std::vector<Rat>{Rat(1), Rat(1)});

  auto [l1, r1] = lagrange_inversion_check(ident, phi, 1);
  CHECK(l1 == 1);
  CHECK(r1 == 1);

  for (std::int64_t n = 1; n <= 24; ++n) {
    // f = 1 + u recovers C_n: u(x) = C(x) - 1
    auto [lhs, rhs] = lagrange_inversion_check(one_plus, phi, n);
    CHECK(lhs == rhs);
    CHECK(lhs == Rat(catalan(n)));
    // f = (1+u)^2 recovers C_{n+1}
    auto [lhs2, rhs2] = lagrange_inversion_check(phi, phi, n);
    CHECK(lhs2 == rhs2);
    CHECK(lhs2 == Rat(catalan(n + 1)));
  }

  CHECK_THROWS_AS(lagrange_inversion_check(ident, phi, 0),
                  std::domain_error);
  const Series1 bad_phi(std::vector<Rat>{Rat(2), Rat(1)});
  CHECK_THROWS_AS(lagrange_inversion_check(ident, bad_phi, 3),
                  std::domain_error);
}

TEST_CASE("sum-out identity") {
  // a = K: both sides are C-related values since K(x,x) = C(x)
  const Series2 k = k_series(16);
  for (std::int64_t n = 0; n <= 16; ++n) {
    auto [lhs, rhs] = sum_out_check(k, n);
    CHECK(lhs == rhs);
    CHECK(lhs == Rat(catalan(n)));
  }
  // a = constant 1
  const Series2 one = Series2::one(6);
  auto [l0, r0] = sum_out_check(one, 0);
  CHECK(l0 == 1);
  CHECK(r0 == 1);
  auto [l3, r3] = sum_out_check(one, 3);
  CHECK(l3 == 0);
  CHECK(r3 == 0);
  // a = product of two lifted univariate series: Cauchy product values
  const Series1 c = catalan_series(10);
  const Series2 prod = lift_x(c, 10) * shift_y(lift_x(c, 9));
  for (std::int64_t n = 0; n <= 10; ++n) {
    auto [lhs, rhs] = sum_out_check(prod, n);
    CHECK(lhs == rhs);
    Int cauchy = 0;
    for (std::int64_t k2 = 0; k2 < n; ++k2)
      cauchy += catalan(k2) * catalan(n - 1 - k2);
    CHECK(lhs == Rat(cauchy));
  }
  CHECK_THROWS_AS(sum_out_check(one, 9), std::domain_error);
}

TEST_CASE("catalan triangle rows from the kernel") {
  const Series2 tri = catalan_triangle_kernel(8);
  const std::vector<std::vector<long>> rows{
      {1}, {1, 1}, {1, 2, 2}, {1, 3, 5, 5}, {1, 4, 9, 14, 14},
      {1, 5, 14, 28, 42, 42}};
  for (std::size_t d = 0; d < rows.size(); ++d)
    for (std::size_t k = 0; k < rows[d].size(); ++k)
      CHECK(tri.coeff(static_cast<std::int64_t>(k),
                      static_cast<std::int64_t>(d - k)) == Rat(rows[d][k]));
}
