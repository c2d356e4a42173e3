#include "catpath/catalan.hpp"

#include <mutex>
#include <string>

namespace catpath {

namespace {

[[noreturn]] void negative_index(std::int64_t n) {
  throw std::domain_error("Catalan index " + std::to_string(n) +
                          " is out of domain (indices start at 0)");
}

std::int64_t require_nonnegative(std::int64_t n, const char* what) {
  if (n < 0)
    throw std::domain_error(std::string(what) + ": negative index " +
                            std::to_string(n));
  return n;
}

}  // namespace

void CatalanTable::ensure(std::int64_t n) {
  if (n < 0) negative_index(n);
  while (max_index() < n) {
    const std::int64_t k = max_index() + 1;
    Int next = values_.back() * (4 * k - 2);
    Int quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), next.get_mpz_t(),
                Int(k + 1).get_mpz_t());
    if (rem != 0)
      throw std::logic_error("CatalanTable: recurrence division not exact");
    values_.push_back(std::move(quot));
  }
}

const Int& CatalanTable::at(std::int64_t n) const {
  if (n < 0) negative_index(n);
  if (n > max_index())
    throw std::domain_error("CatalanTable: index " + std::to_string(n) +
                            " beyond built range " +
                            std::to_string(max_index()));
  return values_[static_cast<std::size_t>(n)];
}

void CatalanTable::inject_error(std::int64_t n, const Int& delta) {
  if (n < 0 || n > max_index())
    throw std::domain_error("inject_error: index out of built range");
  values_[static_cast<std::size_t>(n)] += delta;
}

namespace {
CatalanTable& shared_table() {
  static CatalanTable table;
  return table;
}
std::mutex& shared_table_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Int catalan(std::int64_t n) {
  if (n < 0) negative_index(n);
  std::lock_guard<std::mutex> lock(shared_table_mutex());
  CatalanTable& t = shared_table();
  t.ensure(n);
  return t.at(n);
}

Int catalan_closed_form(std::int64_t n) {
  require_nonnegative(n, "catalan_closed_form");
  Int b = binomial(2 * n, n);
  Int quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), b.get_mpz_t(),
              Int(n + 1).get_mpz_t());
  if (rem != 0)
    throw std::logic_error("catalan_closed_form: division not exact");
  return quot;
}

Int segner_sum(CatalanTable& t, std::int64_t n) {
  if (n < 1)
    throw std::domain_error("segner_sum: requires n >= 1, got " +
                            std::to_string(n));
  t.ensure(n - 1);
  Int sum = 0;
  for (std::int64_t a = 0; a < n; ++a) sum += t.at(a) * t.at(n - 1 - a);
  return sum;
}

std::pair<Int, Int> identity_r1(CatalanTable& t, std::int64_t n) {
  require_nonnegative(n, "identity_r1");
  t.ensure(n + 1);
  Int lhs = (n + 1) * t.at(n + 1);
  Int rhs = 0;
  for (std::int64_t q = 0; q <= n; ++q)
    rhs += (2 * q + 1) * t.at(q) * t.at(n - q);
  return {std::move(lhs), std::move(rhs)};
}

std::pair<Int, Int> identity_r2(CatalanTable& t, std::int64_t n) {
  require_nonnegative(n, "identity_r2");
  t.ensure(n);
  Int lhs = (2 * n + 1) * t.at(n);
  Int rhs = 0;
  for (std::int64_t q = 0; q <= n; ++q)
    rhs += (q + 1) * t.at(q) * t.at(n - q);
  return {std::move(lhs), std::move(rhs)};
}

Rat incomplete_segner(CatalanTable& t, std::int64_t p, std::int64_t n) {
  if (p < 0 || n < 0 || p > n)
    throw std::domain_error("incomplete_segner: requires 0 <= p <= n, got p=" +
                            std::to_string(p) + " n=" + std::to_string(n));
  t.ensure(n + 1);
  Rat half_catalan = make_rat(t.at(n + 1), 2);
  Int num = Int(2 * p + 1 - n) * (p + 2) * (n - p + 1) * t.at(p + 1) *
            t.at(n - p);
  Rat correction = make_rat(std::move(num), Int(2) * (n + 1) * (n + 2));
  return half_catalan + correction;
}

Rat incomplete_rautu(CatalanTable& t, std::int64_t p, std::int64_t n) {
  if (p < 0 || n < 0 || p > n)
    throw std::domain_error("incomplete_rautu: requires 0 <= p <= n, got p=" +
                            std::to_string(p) + " n=" + std::to_string(n));
  if (p == 0) return Rat(0);  // empty sum
  t.ensure(n);
  Int first = Int(2 * n + 1) * (p + 1) * (n + 1) * t.at(n);
  Int second = Int(2 * p + 1) * (p + 1) * t.at(p) * (2 * (n - p) + 1) *
               (n - p + 1) * t.at(n - p);
  return make_rat(first - second, Int(n + 1) * (n + 2));
}

Int segner_sum(std::int64_t n) {
  CatalanTable t(n >= 1 ? n - 1 : 0);
  return segner_sum(t, n);
}
std::pair<Int, Int> identity_r1(std::int64_t n) {
  CatalanTable t;
  return identity_r1(t, n);
}
std::pair<Int, Int> identity_r2(std::int64_t n) {
  CatalanTable t;
  return identity_r2(t, n);
}
Rat incomplete_segner(std::int64_t p, std::int64_t n) {
  CatalanTable t;
  return incomplete_segner(t, p, n);
}
Rat incomplete_rautu(std::int64_t p, std::int64_t n) {
  CatalanTable t;
  return incomplete_rautu(t, p, n);
}

}  // namespace catpath
