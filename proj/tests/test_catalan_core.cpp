#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <thread>

#include "catpath/catalan.hpp"

using namespace catpath;

namespace {

// Independent oracle: Catalan numbers grown purely by Segner's convolution,
// seeded at C_0 = 1. No shared code with CatalanTable's recurrence route.
std::vector<Int> segner_oracle(std::int64_t max_n) {
  std::vector<Int> c{Int(1)};
  for (std::int64_t n = 1; n <= max_n; ++n) {
    Int s = 0;
    for (std::int64_t a = 0; a < n; ++a)
      s += c[static_cast<std::size_t>(a)] *
           c[static_cast<std::size_t>(n - 1 - a)];
    c.push_back(std::move(s));
  }
  return c;
}

}  // namespace

TEST_CASE("catalan values") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(1) == 1);
  CHECK(catalan(2) == 2);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
  CHECK_THROWS_AS(catalan(-1), std::domain_error);
}

TEST_CASE("three routes agree up to 200") {
  const auto oracle = segner_oracle(200);
  CatalanTable table(200);
  for (std::int64_t n = 0; n <= 200; ++n) {
    CHECK(table.at(n) == oracle[static_cast<std::size_t>(n)]);
    CHECK(catalan_closed_form(n) == oracle[static_cast<std::size_t>(n)]);
  }
  for (std::int64_t n = 1; n <= 200; ++n)
    CHECK(segner_sum(table, n) == table.at(n));
}

TEST_CASE("table invariants") {
  CatalanTable table(80);
  CHECK(table.at(0) == 1);
  for (std::int64_t n = 0; n < 80; ++n)
    CHECK(table.at(n + 1) * (n + 2) == table.at(n) * (4 * n + 2));
  CHECK_THROWS_AS(table.at(-1), std::domain_error);
  CHECK_THROWS_AS(table.at(81), std::domain_error);
}

TEST_CASE("segner_sum domain") {
  CHECK(segner_sum(1) == 1);
  CHECK(segner_sum(3) == 5);
  CHECK(segner_sum(8) == catalan(8));
  CHECK(catalan(8) == 1430);
  CHECK_THROWS_AS(segner_sum(0), std::domain_error);
}

TEST_CASE("identity R1") {
  auto [l0, r0] = identity_r1(0);
  CHECK(l0 == 1);
  CHECK(r0 == 1);
  // direct summation oracle
  for (std::int64_t n = 0; n <= 100; ++n) {
    auto [lhs, rhs] = identity_r1(n);
    Int direct = 0;
    for (std::int64_t q = 0; q <= n; ++q)
      direct += (2 * q + 1) * catalan(q) * catalan(n - q);
    CHECK(lhs == direct);
    CHECK(rhs == direct);
    CHECK(lhs == (n + 1) * catalan(n + 1));
  }
}

TEST_CASE("identity R2") {
  auto [l0, r0] = identity_r2(0);
  CHECK(l0 == 1);
  CHECK(r0 == 1);
  auto [l1, r1] = identity_r2(1);
  CHECK(l1 == 3);
  CHECK(r1 == 3);
  for (std::int64_t n = 0; n <= 100; ++n) {
    auto [lhs, rhs] = identity_r2(n);
    Int direct = 0;
    for (std::int64_t q = 0; q <= n; ++q)
      direct += (q + 1) * catalan(q) * catalan(n - q);
    CHECK(lhs == direct);
    CHECK(rhs == direct);
  }
}

TEST_CASE("incomplete segner") {
  // boundary cases collapse to plain Catalan values
  for (std::int64_t n = 0; n <= 30; ++n) {
    CHECK(incomplete_segner(0, n) == Rat(catalan(n)));
    CHECK(incomplete_segner(n, n) == Rat(catalan(n + 1)));
  }
  // (2, 5) equals the direct three-term sum
  Int direct = catalan(0) * catalan(5) + catalan(1) * catalan(4) +
               catalan(2) * catalan(3);
  CHECK(incomplete_segner(2, 5) == Rat(direct));
  CHECK(direct == 66);

  // full range: closed form = direct sum, integer-valued
  CatalanTable table(51);
  for (std::int64_t n = 0; n <= 50; ++n) {
    Int partial = 0;
    for (std::int64_t p = 0; p <= n; ++p) {
      partial += table.at(p) * table.at(n - p);
      const Rat closed = incomplete_segner(table, p, n);
      CHECK(is_integer(closed));
      CHECK(closed == Rat(partial));
    }
  }
  CHECK_THROWS_AS(incomplete_segner(6, 5), std::domain_error);
}

TEST_CASE("incomplete rautu") {
  CHECK(incomplete_rautu(0, 7) == Rat(0));
  CHECK(incomplete_rautu(1, 3) == Rat(5));  // single term 1*C_3*C_0
  CHECK(incomplete_rautu(2, 4) == Rat(2 * catalan(4) + catalan(3)));
  CHECK(incomplete_rautu(2, 4) == Rat(33));

  CatalanTable table(50);
  for (std::int64_t n = 1; n <= 50; ++n)
    for (std::int64_t p = 1; p <= n; ++p) {
      Int direct = 0;
      for (std::int64_t k = 0; k < p; ++k)
        direct += (p - k) * table.at(n - k) * table.at(k);
      const Rat closed = incomplete_rautu(table, p, n);
      CHECK(is_integer(closed));
      CHECK(closed == Rat(direct));
    }
  CHECK_THROWS_AS(incomplete_rautu(6, 5), std::domain_error);
}

TEST_CASE("fault injection is visible") {
  CatalanTable table(20);
  table.inject_error(7, 1);
  CHECK(table.at(7) == catalan(7) + 1);
  CHECK(segner_sum(table, 7) != table.at(7));
}

TEST_CASE("shared table survives concurrent growth") {
  std::vector<std::thread> workers;
  std::atomic<bool> ok{true};
  for (int w = 0; w < 4; ++w)
    workers.emplace_back([&ok, w] {
      for (std::int64_t n = 400 + w; n <= 500; n += 4)
        if (catalan(n) != catalan_closed_form(n)) ok = false;
    });
  for (auto& t : workers) t.join();
  CHECK(ok);
}
