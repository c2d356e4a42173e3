#include "catpath/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "catpath/catalan.hpp"
#include "catpath/depth.hpp"
#include "catpath/kernels.hpp"
#include "catpath/paths.hpp"
#include "catpath/tree.hpp"

namespace catpath {

namespace {

using MaybeCex = std::optional<std::string>;

CheckResult run_check(std::string name,
                      const std::function<MaybeCex()>& body) {
  CheckResult r;
  r.name = std::move(name);
  try {
    MaybeCex cex = body();
    r.pass = !cex.has_value();
    r.detail = cex.value_or("");
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

std::string show(const Int& v) { return v.get_str(); }
std::string show(const Rat& v) { return to_fraction_string(v); }

}  // namespace

std::vector<CheckResult> verify_identities(const VerifyOptions& opts) {
  const std::int64_t nmax = opts.nmax >= 0 ? opts.nmax : 64;
  CatalanTable table(nmax + 1);
  if (opts.corrupt_index >= 0) table.inject_error(opts.corrupt_index, 1);

  std::vector<CheckResult> out;

  out.push_back(run_check("catalan recurrence vs closed form", [&]() -> MaybeCex {
    for (std::int64_t n = 0; n <= nmax; ++n)
      if (table.at(n) != catalan_closed_form(n))
        return "n=" + std::to_string(n) + ": table=" + show(table.at(n)) +
               " closed=" + show(catalan_closed_form(n));
    return std::nullopt;
  }));

  out.push_back(run_check("segner relation", [&]() -> MaybeCex {
    for (std::int64_t n = 1; n <= nmax; ++n)
      if (segner_sum(table, n) != table.at(n))
        return "n=" + std::to_string(n) +
               ": sum=" + show(segner_sum(table, n)) +
               " C_n=" + show(table.at(n));
    return std::nullopt;
  }));

  out.push_back(run_check("identity R1", [&]() -> MaybeCex {
    for (std::int64_t n = 0; n <= nmax; ++n) {
      auto [lhs, rhs] = identity_r1(table, n);
      if (lhs != rhs)
        return "n=" + std::to_string(n) + ": lhs=" + show(lhs) +
               " rhs=" + show(rhs);
    }
    return std::nullopt;
  }));

  out.push_back(run_check("identity R2", [&]() -> MaybeCex {
    for (std::int64_t n = 0; n <= nmax; ++n) {
      auto [lhs, rhs] = identity_r2(table, n);
      if (lhs != rhs)
        return "n=" + std::to_string(n) + ": lhs=" + show(lhs) +
               " rhs=" + show(rhs);
    }
    return std::nullopt;
  }));

  out.push_back(run_check("incomplete segner vs direct sum", [&]() -> MaybeCex {
    for (std::int64_t n = 0; n <= nmax; ++n)
      for (std::int64_t p = 0; p <= n; ++p) {
        const Rat closed = incomplete_segner(table, p, n);
        Int direct = 0;
        for (std::int64_t k = 0; k <= p; ++k)
          direct += table.at(k) * table.at(n - k);
        if (!is_integer(closed) || closed != Rat(direct))
          return "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                 ": closed=" + show(closed) + " direct=" + show(direct);
      }
    return std::nullopt;
  }));

  out.push_back(run_check("incomplete rautu vs direct sum", [&]() -> MaybeCex {
    for (std::int64_t n = 0; n <= nmax; ++n)
      for (std::int64_t p = 0; p <= n; ++p) {
        const Rat closed = incomplete_rautu(table, p, n);
        Int direct = 0;
        for (std::int64_t k = 0; k <= p - 1; ++k)
          direct += (p - k) * table.at(n - k) * table.at(k);
        if (!is_integer(closed) || closed != Rat(direct))
          return "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                 ": closed=" + show(closed) + " direct=" + show(direct);
      }
    return std::nullopt;
  }));

  return out;
}

std::vector<CheckResult> verify_oracle(const VerifyOptions& opts) {
  const std::int64_t nmax = opts.nmax >= 0 ? opts.nmax : 10;
  std::vector<CheckResult> out;

  out.push_back(run_check("enumeration count equals C_n", [&]() -> MaybeCex {
    for (std::int64_t n = 0; n <= nmax; ++n) {
      std::int64_t count = 0;
      for_each_tree(n, [&](const TreeShape&) { ++count; }, nmax);
      if (Int(count) != catalan(n))
        return "n=" + std::to_string(n) + ": stream=" + std::to_string(count) +
               " C_n=" + show(catalan(n));
    }
    return std::nullopt;
  }));

  out.push_back(run_check("depth sums: oracle = recursion = closed form",
                          [&]() -> MaybeCex {
    for (std::int64_t n = 0; n <= nmax; ++n) {
      const std::vector<Int> sums = oracle_depth_sums(n, nmax);
      for (std::int64_t m = 1; m <= n + 1; ++m) {
        const Int& oracle = sums[static_cast<std::size_t>(m - 1)];
        const Int rec = depth_recursive(m, n);
        const Int closed = depth_closed_form(m, n);
        if (oracle != rec || oracle != closed)
          return "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                 ": oracle=" + show(oracle) + " recursion=" + show(rec) +
                 " closed=" + show(closed);
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("depth mirror symmetry", [&]() -> MaybeCex {
    for (std::int64_t n = 0; n <= nmax; ++n) {
      const std::vector<Int> sums = oracle_depth_sums(n, nmax);
      for (std::int64_t m = 1; m <= n + 1; ++m)
        if (sums[static_cast<std::size_t>(m - 1)] !=
            sums[static_cast<std::size_t>(n + 1 - m)])
          return "m=" + std::to_string(m) + " n=" + std::to_string(n);
    }
    return std::nullopt;
  }));

  out.push_back(run_check(
      "path stats: oracle = recursion = closed form, count = (n+1-r)C_n",
      [&]() -> MaybeCex {
    for (std::int64_t n = 1; n <= nmax; ++n) {
      const auto stats = oracle_path_stats_all(n, nmax);
      for (const PathStats& s : stats) {
        const Int rec = summed_length_recursive(n, s.r);
        const Int closed = summed_length_closed(n, s.r);
        if (s.sum != rec || s.sum != closed)
          return "n=" + std::to_string(n) + " r=" + std::to_string(s.r) +
                 ": oracle=" + show(s.sum) + " recursion=" + show(rec) +
                 " closed=" + show(closed);
        if (s.count != path_count(n, s.r))
          return "n=" + std::to_string(n) + " r=" + std::to_string(s.r) +
                 ": count=" + show(s.count) +
                 " expected=" + show(path_count(n, s.r));
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("parenthesis codec round trip", [&]() -> MaybeCex {
    const std::int64_t cap = std::min<std::int64_t>(nmax, 8);
    for (std::int64_t n = 0; n <= cap; ++n) {
      MaybeCex cex;
      for_each_tree(n, [&](const TreeShape& t) {
        if (cex) return;
        const std::string enc = encode_parens(t);
        if (!(decode_parens(enc) == t)) cex = "n=" + std::to_string(n) +
                                              " tree " + enc;
      }, cap);
      if (cex) return cex;
    }
    return std::nullopt;
  }));

  return out;
}

std::vector<CheckResult> verify_series(const VerifyOptions& opts) {
  const std::int64_t order = opts.order;
  std::vector<CheckResult> out;

  out.push_back(run_check("C = 1 + x C^2 at order " + std::to_string(order),
                          [&]() -> MaybeCex {
    const Series1 c = catalan_series(order);
    const Series1 residual =
        c - Series1::one(order) - mul_by_x(c * c).truncated(order);
    for (std::int64_t n = 0; n <= order; ++n)
      if (residual.coeff(n) != 0)
        return "coefficient " + std::to_string(n) + " = " +
               show(residual.coeff(n));
    return std::nullopt;
  }));

  out.push_back(run_check("fixed-point iteration matches the table",
                          [&]() -> MaybeCex {
    if (!(catalan_series_fixed_point(order) == catalan_series(order)))
      return std::string("series differ");
    return std::nullopt;
  }));

  out.push_back(run_check("K(x,x) = C(x)", [&]() -> MaybeCex {
    const Series1 diag = diagonal_sum(k_series(order));
    if (!(diag == catalan_series(order))) return std::string("series differ");
    return std::nullopt;
  }));

  out.push_back(run_check("dK/dz = C K^2", [&]() -> MaybeCex {
    const Series2 k = k_series(order);
    const Series2 lhs = d_dy(k);
    const Series2 rhs =
        lift_x(catalan_series(order), order) * k * k;
    for (std::int64_t d = 0; d <= order - 1; ++d)
      for (std::int64_t i = 0; i <= d; ++i)
        if (lhs.coeff(i, d - i) != rhs.coeff(i, d - i))
          return "cell (" + std::to_string(i) + "," + std::to_string(d - i) +
                 ")";
    return std::nullopt;
  }));

  out.push_back(run_check("(1 - 2xC) * central-binomial series = 1",
                          [&]() -> MaybeCex {
    const Series1 c = catalan_series(order);
    const Series1 prod =
        (Series1::one(order) - mul_by_x(c.truncated(order - 1)) * Rat(2)) *
        central_binomial_series(order);
    if (!(prod == Series1::one(order))) return std::string("series differ");
    return std::nullopt;
  }));

  out.push_back(run_check("C/sqrt(1-4x) = sum (2n+1) C_n x^n",
                          [&]() -> MaybeCex {
    const Series1 lhs = catalan_series(order) * central_binomial_series(order);
    for (std::int64_t n = 0; n <= order; ++n)
      if (lhs.coeff(n) != Rat(Int(2 * n + 1) * catalan(n)))
        return "coefficient " + std::to_string(n);
    return std::nullopt;
  }));

  out.push_back(run_check("C^2/sqrt(1-4x) = sum (n+1) C_{n+1} x^n",
                          [&]() -> MaybeCex {
    const Series1 c = catalan_series(order);
    const Series1 lhs = c * c * central_binomial_series(order);
    for (std::int64_t n = 0; n <= order; ++n)
      if (lhs.coeff(n) != Rat(Int(n + 1) * catalan(n + 1)))
        return "coefficient " + std::to_string(n);
    return std::nullopt;
  }));

  out.push_back(run_check("S(1,x) coefficients equal 3n^2 C_n/(n+2)",
                          [&]() -> MaybeCex {
    const Series1 s1 = nearest_neighbor_length_series(order);
    for (std::int64_t n = 0; n <= order; ++n) {
      const Rat expected =
          make_rat(Int(3) * n * n * catalan(n), Int(n + 2));
      if (s1.coeff(n) != expected)
        return "n=" + std::to_string(n) + ": got " + show(s1.coeff(n)) +
               " expected " + show(expected);
    }
    return std::nullopt;
  }));

  out.push_back(run_check("catalan triangle rows", [&]() -> MaybeCex {
    // rows of C(t)/(1 - sC(t)), highest s-power first
    const std::vector<std::vector<long>> rows{
        {1}, {1, 1}, {1, 2, 2}, {1, 3, 5, 5}, {1, 4, 9, 14, 14},
        {1, 5, 14, 28, 42, 42}};
    const Series2 tri = catalan_triangle_kernel(
        std::min<std::int64_t>(order, 8));
    for (std::size_t d = 0; d < rows.size(); ++d)
      for (std::size_t k = 0; k < rows[d].size(); ++k) {
        const std::int64_t i = static_cast<std::int64_t>(k);        // t power
        const std::int64_t j = static_cast<std::int64_t>(d - k);    // s power
        if (tri.coeff(i, j) != Rat(rows[d][k]))
          return "degree " + std::to_string(d) + " entry " + std::to_string(k);
      }
    return std::nullopt;
  }));

  {
    // bridge checks need order >= n + s; stay within the configured order
    const std::int64_t bridge_n =
        std::min<std::int64_t>(16, (order + 1) / 2);
    out.push_back(run_check(
        "leaf kernel = lagrange extraction = closed form (n <= " +
            std::to_string(bridge_n) + ")",
        [&]() -> MaybeCex {
      const Series2 kernel = leaf_path_kernel(2 * bridge_n - 1);
      for (std::int64_t n = 1; n <= bridge_n; ++n)
        for (std::int64_t s = 0; s < n; ++s) {
          const Rat cell = kernel.coeff(n, s);
          const Int extracted = lagrange_extract(n, s);
          const Int closed = summed_length_closed(n, s + 1);
          if (cell != Rat(extracted) || cell != Rat(closed))
            return "n=" + std::to_string(n) + " s=" + std::to_string(s) +
                   ": kernel=" + show(cell) + " extraction=" +
                   show(extracted) + " closed=" + show(closed);
        }
      return std::nullopt;
    }));

    out.push_back(run_check("rooted path kernel cells are C_n Theta(n-p)",
                            [&]() -> MaybeCex {
      const std::int64_t o = std::min<std::int64_t>(order, 32);
      const Series2 j = rooted_path_kernel(o);
      for (std::int64_t d = 0; d <= o; ++d)
        for (std::int64_t n = 0; n <= d; ++n) {
          const std::int64_t p = d - n;
          const Rat expect = p <= n ? Rat(catalan(n)) : Rat(0);
          if (j.coeff(n, p) != expect)
            return "cell (" + std::to_string(n) + "," + std::to_string(p) +
                   ")";
        }
      return std::nullopt;
    }));

    out.push_back(run_check("rooted length sums equal depth functions",
                            [&]() -> MaybeCex {
      const std::int64_t o = std::min<std::int64_t>(order, 32);
      const Series2 l = rooted_length_sum_series(o);
      for (std::int64_t d = 0; d <= o; ++d)
        for (std::int64_t n = 0; n <= d; ++n) {
          const std::int64_t p = d - n;
          const Rat expect =
              p <= n ? Rat(depth_closed_form(p + 1, n)) : Rat(0);
          if (l.coeff(n, p) != expect)
            return "cell (" + std::to_string(n) + "," + std::to_string(p) +
                   ")";
        }
      return std::nullopt;
    }));
  }

  out.push_back(run_check("lagrange inversion with x = u/(1+u)^2",
                          [&]() -> MaybeCex {
    // phi(u) = (1+u)^2, so u(x) = C(x) - 1
    const Series1 phi(std::vector<Rat>{Rat(1), Rat(2), Rat(1)});
    const Series1 ident(std::vector<Rat>{Rat(0), Rat(1)});
    const Series1 one_plus(std::vector<Rat>{Rat(1), Rat(1)});
    const std::int64_t cap = std::min<std::int64_t>(order, 24);
    for (std::int64_t n = 1; n <= cap; ++n) {
      for (const Series1* f : {&ident, &one_plus, &phi}) {
        auto [lhs, rhs] = lagrange_inversion_check(*f, phi, n);
        if (lhs != rhs)
          return "n=" + std::to_string(n) + ": lhs=" + show(lhs) +
                 " rhs=" + show(rhs);
      }
    }
    return std::nullopt;
  }));

  out.push_back(run_check("sum-out identity", [&]() -> MaybeCex {
    const std::int64_t o = std::min<std::int64_t>(order, 16);
    const Series2 k = k_series(o);
    for (std::int64_t n = 0; n <= o; ++n) {
      auto [lhs, rhs] = sum_out_check(k, n);
      if (lhs != rhs || lhs != Rat(catalan(n)))
        return "K at n=" + std::to_string(n);
    }
    return std::nullopt;
  }));

  return out;
}

std::vector<CheckResult> verify_asymptotics(const VerifyOptions& opts) {
  const std::int64_t nmax = opts.nmax >= 0 ? opts.nmax : 200;
  std::vector<CheckResult> out;

  out.push_back(run_check("closed-form specializations r = 1..4",
                          [&]() -> MaybeCex {
    for (std::int64_t n = 1; n <= nmax; ++n) {
      if (average_length(n, 1) != make_rat(Int(3) * n, Int(n + 2)))
        return "r=1 n=" + std::to_string(n);
      if (n >= 2 &&
          average_length(n, 2) != make_rat(Int(5 * n - 2), Int(n + 2)))
        return "r=2 n=" + std::to_string(n);
      if (n >= 3 &&
          average_length(n, 3) !=
              make_rat(Int(13) * n * n - 18 * n + 2,
                       Int(n + 2) * (2 * n - 1)))
        return "r=3 n=" + std::to_string(n);
      if (n >= 4 &&
          average_length(n, 4) !=
              make_rat(Int(n) * (Int(n) * (31 * n - 105) + 83) - 6,
                       Int(4) * n * n * n - 13 * n + 6))
        return "r=4 n=" + std::to_string(n);
    }
    return std::nullopt;
  }));

  out.push_back(run_check("average limits r = 1..4 are 3, 5, 13/2, 31/4",
                          [&]() -> MaybeCex {
    const std::vector<Rat> expected{Rat(3), Rat(5), make_rat(13, 2),
                                    make_rat(31, 4)};
    for (std::int64_t r = 1; r <= 4; ++r)
      if (average_limit(r) != expected[static_cast<std::size_t>(r - 1)])
        return "r=" + std::to_string(r) + ": got " + show(average_limit(r));
    return std::nullopt;
  }));

  out.push_back(run_check("A_n(r) within 1e-4 of the limit at n = 10^6",
                          [&]() -> MaybeCex {
    const Rat tol = make_rat(1, 10000);
    for (std::int64_t r = 1; r <= 8; ++r) {
      Rat diff = average_length(1000000, r) - average_limit(r);
      if (diff < 0) diff = -diff;
      if (!(diff < tol))
        return "r=" + std::to_string(r) + ": |diff|=" + show(diff);
    }
    return std::nullopt;
  }));

  out.push_back(run_check("continuum asymptote within 1% at r = 10^4",
                          [&]() -> MaybeCex {
    const double ratio =
        to_double(average_limit(10000)) / average_continuum(10000);
    if (!(std::abs(ratio - 1.0) < 0.01))
      return "ratio=" + std::to_string(ratio);
    return std::nullopt;
  }));

  out.push_back(run_check("limit/continuum ratio rises toward 1",
                          [&]() -> MaybeCex {
    double prev = 0.0;
    for (std::int64_t r : {100, 1000, 10000}) {
      const double ratio = to_double(average_limit(r)) / average_continuum(r);
      if (!(ratio > prev && ratio < 1.0))
        return "r=" + std::to_string(r) + ": ratio=" + std::to_string(ratio);
      prev = ratio;
    }
    return std::nullopt;
  }));

  return out;
}

int print_report(std::ostream& os, const std::vector<CheckResult>& results) {
  bool all = true;
  for (const CheckResult& r : results) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.pass && !r.detail.empty()) os << ": " << r.detail;
    os << '\n';
    all = all && r.pass;
  }
  os << (all ? "all checks passed" : "CHECKS FAILED") << '\n';
  return all ? 0 : 1;
}

}  // namespace catpath
