#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "catpath/exact.hpp"

namespace catpath {

/// Memoized table of Catalan numbers C_0..C_max_index, grown with the
/// recurrence C_n = (4n-2)/(n+1) C_{n-1} (the division is checked exact).
///
/// Growth must be serialized by the owner; reads of an already built range
/// are const and safe to share between threads. Negative or not-yet-built
/// indices are a hard domain error, never 0.
class CatalanTable {
 public:
  CatalanTable() : values_{Int(1)} {}
  explicit CatalanTable(std::int64_t max_index) : CatalanTable() {
    ensure(max_index);
  }

  void ensure(std::int64_t n);
  const Int& at(std::int64_t n) const;
  std::int64_t max_index() const {
    return static_cast<std::int64_t>(values_.size()) - 1;
  }

  /// Fault-injection hook: adds `delta` to C_n in place. Only meaningful on a
  /// fully built table; exists so verification suites can prove they detect a
  /// corrupted table.
  void inject_error(std::int64_t n, const Int& delta);

 private:
  std::vector<Int> values_;
};

/// C_n from a shared process-wide table (growth internally serialized).
Int catalan(std::int64_t n);

/// C_n = (2n)!/((n+1)! n!) via a binomial coefficient; independent of the
/// table recurrence.
Int catalan_closed_form(std::int64_t n);

/// Segner's sum  sum_{a=0}^{n-1} C_a C_{n-1-a}. Requires n >= 1 (the n = 0
/// sum is empty; C_0 is defined directly, not by the relation).
Int segner_sum(CatalanTable& t, std::int64_t n);
Int segner_sum(std::int64_t n);

/// lhs = (n+1) C_{n+1},  rhs = sum_{q=0}^{n} (2q+1) C_q C_{n-q}.
std::pair<Int, Int> identity_r1(CatalanTable& t, std::int64_t n);
std::pair<Int, Int> identity_r1(std::int64_t n);

/// lhs = (2n+1) C_n,  rhs = sum_{q=0}^{n} (q+1) C_q C_{n-q}.
std::pair<Int, Int> identity_r2(CatalanTable& t, std::int64_t n);
std::pair<Int, Int> identity_r2(std::int64_t n);

/// Closed form for the partial Segner sum  sum_{k=0}^{p} C_k C_{n-k}:
///   C_{n+1}/2 + (2p+1-n)(p+2)(n-p+1) / (2(n+1)(n+2)) * C_{p+1} C_{n-p}.
/// Requires 0 <= p <= n. The value is an integer-valued rational.
Rat incomplete_segner(CatalanTable& t, std::int64_t p, std::int64_t n);
Rat incomplete_segner(std::int64_t p, std::int64_t n);

/// Closed form for  sum_{k=0}^{p-1} (p-k) C_{n-k} C_k:
///   [ (2n+1)(p+1)(n+1) C_n
///     - (2p+1)(p+1) C_p (2(n-p)+1)(n-p+1) C_{n-p} ] / ((n+1)(n+2)).
/// Requires 0 <= p <= n; p = 0 is the empty sum and returns 0.
Rat incomplete_rautu(CatalanTable& t, std::int64_t p, std::int64_t n);
Rat incomplete_rautu(std::int64_t p, std::int64_t n);

}  // namespace catpath
