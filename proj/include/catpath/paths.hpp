#pragma once

#include <cstdint>

#include "catpath/exact.hpp"

namespace catpath {

/// Inception (seed) term of the summed-length recursion: bulk plus boundary
/// contributions of the connecting paths across the root split.
/// `long_range` records whether the r > (n+1)/2 branch was taken; the branch
/// point r = (n+1)/2 itself uses the short-range sums.
struct InceptionTerm {
  std::int64_t n = 0;
  std::int64_t r = 0;
  Int bulk;
  Int boundary;
  Int value;  // bulk + boundary
  bool long_range = false;
};

/// G_n(r) for 1 <= r <= n, evaluated exactly as the bulk/boundary double
/// sums over the depth function.
InceptionTerm inception(std::int64_t n, std::int64_t r);

/// S_n(r) through the recursion S_n(r) = G_n(r) + 2 sum_a C_{n-a-1} S_a(r),
/// with the explicit base S_a(r) = 0 for a < r. Memoized per r; n is capped
/// by the shared DP bound. Requires r >= 1; returns 0 whenever r > n.
Int summed_length_recursive(std::int64_t n, std::int64_t r);

/// S_n(r) = (n+1-r) D_{r,n} via the closed form for the depth function.
Int summed_length_closed(std::int64_t n, std::int64_t r);

/// Number of (tree, leaf-pair) instances at separation r: (n+1-r) C_n.
Int path_count(std::int64_t n, std::int64_t r);

/// C_{n-r}/C_n as an exact rational, never materializing C_n; a product of
/// r recurrence steps, so huge n stays cheap for moderate r.
Rat catalan_ratio(std::int64_t n, std::int64_t r);

/// A_n(r) = 2r(r+1)(2n-2r+1)(2n-2r+3)/((n+1)(n+2)) * C_r C_{n-r}/C_n - 1,
/// exact for any 1 <= r <= n.
Rat average_length(std::int64_t n, std::int64_t r);

/// Query for the n -> infinity limit of A_n(r).
struct AsymptoticQuery {
  std::int64_t r = 1;
};

/// A_inf(r) = 8 r (r+1) C_r / 4^r - 1, exact.
Rat average_limit(std::int64_t r);
Rat average_limit(const AsymptoticQuery& q);

/// Continuum asymptote sqrt(64 r / pi). This is the library's only
/// floating-point surface; it is an asymptote for large r, not an exact
/// value (at r = 1 it gives 4.51.., far from the exact 3).
double average_continuum(std::int64_t r);

/// Incremental evaluation of A_n(r) for r = 1, 2, ... at fixed n; each step
/// is O(1) exact-rational work. Used for figure sweeps over full r ranges.
class AverageSweep {
 public:
  explicit AverageSweep(std::int64_t n);  // starts at r = 1; requires n >= 1
  std::int64_t r() const { return r_; }
  bool done() const { return r_ > n_; }
  Rat value() const;  // A_n(r) at the current r
  void advance();
 private:
  std::int64_t n_;
  std::int64_t r_;
  Rat ratio_;  // C_r C_{n-r} / C_n at the current r
};

}  // namespace catpath
