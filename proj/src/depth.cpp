#include "catpath/depth.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>

#include "catpath/catalan.hpp"
#include "catpath/kernels.hpp"

namespace catpath {

namespace {

void check_query(std::int64_t m, std::int64_t n, const char* what) {
  if (n < 0 || m < 1 || m > n + 1)
    throw std::domain_error(std::string(what) + ": leaf index m=" +
                            std::to_string(m) + " not in [1, " +
                            std::to_string(n + 1) + "]");
}

std::atomic<std::int64_t> g_dp_bound{512};

// Memoized master-equation DP. Row m holds D_{m,n} for n = m-1, m, ...;
// single writer under the mutex, per the shared-table contract.
class DepthDp {
 public:
  Int at(std::int64_t m, std::int64_t n) {
    std::lock_guard<std::mutex> lock(mutex_);
    fill(m, n);
    return row_value(m, n);
  }

 private:
  void fill(std::int64_t m, std::int64_t n) {
    if (n < m - 1) return;
    table_.ensure(n + 1);
    if (static_cast<std::int64_t>(rows_.size()) <= m)
      rows_.resize(static_cast<std::size_t>(m) + 1);
    // everything row m references in rows m' < m lies at n' <= n - (m - m')
    for (std::int64_t mm = 1; mm < m; ++mm) fill_row(mm, n - (m - mm));
    fill_row(m, n);
  }

  void fill_row(std::int64_t m, std::int64_t up_to) {
    if (up_to < m - 1) return;
    auto& row = rows_[static_cast<std::size_t>(m)];
    std::int64_t next = m - 1 + static_cast<std::int64_t>(row.size());
    for (; next <= up_to; ++next) row.push_back(compute(m, next));
  }

  Int compute(std::int64_t m, std::int64_t n) {
    if (m == 1) return table_.at(n + 1) - table_.at(n);
    Int value = table_.at(n);
    for (std::int64_t k = m - 1; k <= n - 1; ++k)
      value += row_value(m, k) * table_.at(n - 1 - k);
    for (std::int64_t k = 0; k <= m - 2; ++k)
      value += row_value(m - k - 1, n - k - 1) * table_.at(k);
    return value;
  }

  const Int& row_value(std::int64_t m, std::int64_t n) const {
    return rows_[static_cast<std::size_t>(m)]
                [static_cast<std::size_t>(n - (m - 1))];
  }

  std::mutex mutex_;
  CatalanTable table_;
  std::vector<std::vector<Int>> rows_;
};

DepthDp& shared_dp() {
  static DepthDp dp;
  return dp;
}

}  // namespace

std::int64_t dp_bound() { return g_dp_bound.load(); }

void set_dp_bound(std::int64_t bound) {
  if (bound < 0) throw std::domain_error("set_dp_bound: negative bound");
  g_dp_bound.store(bound);
}

Int depth_first_leaf(std::int64_t n) {
  if (n < 0) throw std::domain_error("depth_first_leaf: negative n");
  CatalanTable t(n + 1);
  return t.at(n + 1) - t.at(n);
}

Int depth_second_leaf(std::int64_t n) {
  if (n < 1)
    throw std::domain_error(
        "depth_second_leaf: undefined for a single-leaf tree (n = " +
        std::to_string(n) + ")");
  CatalanTable t(n + 1);
  return 2 * t.at(n + 1) - 3 * t.at(n);
}

Int depth_recursive(std::int64_t m, std::int64_t n) {
  check_query(m, n, "depth_recursive");
  if (n > dp_bound())
    throw bound_error("depth_recursive: n=" + std::to_string(n) +
                      " exceeds the DP bound " + std::to_string(dp_bound()));
  return shared_dp().at(m, n);
}

Int depth_recursive(const DepthQuery& q) { return depth_recursive(q.m, q.n); }

Int depth_closed_form(std::int64_t m, std::int64_t n) {
  check_query(m, n, "depth_closed_form");
  if (n == 0) return 0;  // single leaf at the root; both forms degenerate
  CatalanTable t(n + 1);

  Int sum_form = m * t.at(n + 1) - t.at(n);
  for (std::int64_t k = 0; k <= m - 2; ++k)
    sum_form -= 2 * (m - k - 1) * t.at(k) * t.at(n - k);

  // The explicit form needs C_{n-m}; D_{n+1,n} = D_{1,n} by mirror symmetry.
  const std::int64_t me = (m == n + 1) ? 1 : m;
  Int num = Int(2 * me) * (me + 1) * (2 * n - 2 * me + 1) *
            (2 * n - 2 * me + 3) * t.at(me) * t.at(n - me);
  Rat explicit_form =
      make_rat(std::move(num), Int(n + 1) * (n + 2)) - Rat(t.at(n));

  if (Rat(sum_form) != explicit_form)
    throw std::logic_error("depth_closed_form: the two closed forms disagree "
                           "at m=" + std::to_string(m) +
                           " n=" + std::to_string(n));
  return sum_form;
}

Int depth_closed_form(const DepthQuery& q) {
  return depth_closed_form(q.m, q.n);
}

AnsatzPolys ansatz_polys(std::int64_t m) {
  if (m < 1) throw std::domain_error("ansatz_polys: requires m >= 1");
  CatalanTable t(m);
  AnsatzPolys p;
  p.m = m;
  p.f_pole = Rat(m);
  p.g_pole = Rat(-m);
  // the standalone -1 of f_m needs an x^0 slot even when the sum is empty
  const std::size_t width =
      static_cast<std::size_t>(std::max<std::int64_t>(m - 1, 1));
  p.f.resize(width, Rat(0));
  p.g.resize(width, Rat(0));
  for (std::int64_t k = 0; k <= m - 2; ++k) {
    p.f[static_cast<std::size_t>(k)] =
        Rat(Int(-2) * (m - k - 1) * t.at(k));
    p.g[static_cast<std::size_t>(k)] =
        Rat(Int(m - k - 2) * t.at(k + 1) + t.at(k));
  }
  p.f[0] -= 1;
  return p;
}

Series1 ansatz_series(std::int64_t m, std::int64_t order) {
  const AnsatzPolys p = ansatz_polys(m);
  // Work with x*f and x*g so the 1/x slot becomes an ordinary coefficient;
  // then [x^{n+1}]{ x(fC + g) } = D_{m,n}.
  Series1 xf(order + 1), xg(order + 1);
  xf.set_coeff(0, p.f_pole);
  xg.set_coeff(0, p.g_pole);
  for (std::size_t k = 0; k < p.f.size(); ++k) {
    const std::int64_t pw = static_cast<std::int64_t>(k) + 1;
    if (pw <= order + 1) {
      xf.set_coeff(pw, p.f[k]);
      xg.set_coeff(pw, p.g[k]);
    }
  }
  const Series1 h = xf * catalan_series(order + 1) + xg;
  return shift_down(h);
}

}  // namespace catpath
