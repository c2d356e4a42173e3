#include "catpath/paths.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "catpath/catalan.hpp"
#include "catpath/depth.hpp"

namespace catpath {

namespace {

void check_separation(std::int64_t n, std::int64_t r, const char* what) {
  if (n < 0 || r < 1 || r > n)
    throw std::domain_error(std::string(what) + ": separation r=" +
                            std::to_string(r) + " out of range [1, " +
                            std::to_string(n) + "]");
}

void check_dp(std::int64_t n, const char* what) {
  if (n > dp_bound())
    throw bound_error(std::string(what) + ": n=" + std::to_string(n) +
                      " exceeds the DP bound " + std::to_string(dp_bound()));
}

}  // namespace

InceptionTerm inception(std::int64_t n, std::int64_t r) {
  check_separation(n, r, "inception");
  check_dp(n, "inception");
  CatalanTable t(n);

  InceptionTerm out;
  out.n = n;
  out.r = r;
  out.long_range = 2 * r > n + 1;
  out.bulk = 0;
  out.boundary = 0;

  // bulk: r connecting positions (n-r+1 on the long-range branch), both
  // depth ends folded onto D_{beta+1,alpha} by left-right symmetry
  const std::int64_t a_lo = out.long_range ? n - r : r - 1;
  const std::int64_t a_hi = out.long_range ? r - 1 : n - r;
  const std::int64_t b_hi = out.long_range ? n - r : r - 1;
  for (std::int64_t a = a_lo; a <= a_hi; ++a)
    for (std::int64_t b = 0; b <= b_hi; ++b)
      out.bulk += 2 * t.at(n - a - 1) * depth_recursive(b + 1, a) +
                  t.at(a) * t.at(n - a - 1);

  // boundary: one sub-tree too small to host all connecting positions
  const std::int64_t bnd_hi = out.long_range ? n - r - 1 : r - 2;
  for (std::int64_t a = 0; a <= bnd_hi; ++a)
    for (std::int64_t b = 0; b <= a; ++b)
      out.boundary += 2 * (t.at(n - a - 1) * depth_recursive(b + 1, a) +
                           t.at(a) * depth_recursive(r - b, n - a - 1) +
                           t.at(a) * t.at(n - a - 1));

  out.value = out.bulk + out.boundary;
  return out;
}

namespace {

// S_n(r) rows memoized per separation; single writer under the mutex.
std::map<std::int64_t, std::vector<Int>>& summed_rows() {
  static std::map<std::int64_t, std::vector<Int>> rows;
  return rows;
}
std::mutex& summed_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Int summed_length_recursive(std::int64_t n, std::int64_t r) {
  if (r < 1)
    throw std::domain_error("summed_length_recursive: requires r >= 1, got " +
                            std::to_string(r));
  if (n < r) return 0;  // the sum limits leave nothing below n = r
  check_dp(n, "summed_length_recursive");

  std::lock_guard<std::mutex> lock(summed_mutex());
  std::vector<Int>& row = summed_rows()[r];  // row[i] = S_{r+i}(r)
  CatalanTable t(n);
  for (std::int64_t a = r + static_cast<std::int64_t>(row.size()); a <= n;
       ++a) {
    Int s = inception(a, r).value;
    for (std::int64_t b = r; b < a; ++b)
      s += 2 * t.at(a - b - 1) * row[static_cast<std::size_t>(b - r)];
    row.push_back(std::move(s));
  }
  return row[static_cast<std::size_t>(n - r)];
}

Int summed_length_closed(std::int64_t n, std::int64_t r) {
  check_separation(n, r, "summed_length_closed");
  return (n + 1 - r) * depth_closed_form(r, n);
}

Int path_count(std::int64_t n, std::int64_t r) {
  check_separation(n, r, "path_count");
  return (n + 1 - r) * catalan(n);
}

Rat catalan_ratio(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0 || r > n)
    throw std::domain_error("catalan_ratio: requires 0 <= r <= n");
  // C_{n-r}/C_n = prod_{j=n-r+1}^{n} (j+1)/(4j-2)
  Int num = 1, den = 1;
  for (std::int64_t j = n - r + 1; j <= n; ++j) {
    num *= j + 1;
    den *= 4 * j - 2;
  }
  return make_rat(std::move(num), std::move(den));
}

Rat average_length(std::int64_t n, std::int64_t r) {
  check_separation(n, r, "average_length");
  const Rat t = Rat(catalan(r)) * catalan_ratio(n, r);
  const Rat prefactor = make_rat(
      Int(2 * r) * (r + 1) * (2 * n - 2 * r + 1) * (2 * n - 2 * r + 3),
      Int(n + 1) * (n + 2));
  return prefactor * t - 1;
}

Rat average_limit(std::int64_t r) {
  if (r < 1)
    throw std::domain_error("average_limit: requires r >= 1, got " +
                            std::to_string(r));
  Int four_r;
  mpz_ui_pow_ui(four_r.get_mpz_t(), 4, static_cast<unsigned long>(r));
  return make_rat(Int(8 * r) * (r + 1) * catalan(r), std::move(four_r)) - 1;
}

Rat average_limit(const AsymptoticQuery& q) { return average_limit(q.r); }

double average_continuum(std::int64_t r) {
  if (r < 1)
    throw std::domain_error("average_continuum: requires r >= 1");
  return std::sqrt(64.0 * static_cast<double>(r) / std::numbers::pi);
}

AverageSweep::AverageSweep(std::int64_t n) : n_(n), r_(1) {
  if (n < 1) throw std::domain_error("AverageSweep: requires n >= 1");
  ratio_ = catalan_ratio(n, 1);  // C_1 C_{n-1} / C_n
}

Rat AverageSweep::value() const {
  if (done()) throw std::domain_error("AverageSweep: past the last column");
  const Rat prefactor = make_rat(
      Int(2 * r_) * (r_ + 1) * (2 * n_ - 2 * r_ + 1) * (2 * n_ - 2 * r_ + 3),
      Int(n_ + 1) * (n_ + 2));
  return prefactor * ratio_ - 1;
}

void AverageSweep::advance() {
  if (done()) throw std::domain_error("AverageSweep: past the last column");
  if (r_ == n_) {  // stepping off the end
    ++r_;
    return;
  }
  // C_{r+1}/C_r = (4r+2)/(r+2),  C_{n-r-1}/C_{n-r} = (n-r+1)/(4(n-r)-2)
  ratio_ *= make_rat(Int(4 * r_ + 2) * (n_ - r_ + 1),
                     Int(r_ + 2) * (4 * (n_ - r_) - 2));
  ++r_;
}

}  // namespace catpath
