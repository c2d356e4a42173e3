#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "catpath/exact.hpp"

namespace catpath {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first counterexample when failing
};

struct VerifyOptions {
  std::int64_t order = 64;         // series truncation order
  std::int64_t nmax = -1;          // index sweep bound; -1 = suite default
  std::int64_t corrupt_index = -1; // fault injection: add 1 to C_k first
};

/// Catalan-number identities on a private table (recurrence vs closed form,
/// Segner, R1/R2, incomplete Segner and incomplete-Rautu vs direct sums).
std::vector<CheckResult> verify_identities(const VerifyOptions& opts);

/// Brute-force enumeration against recursion and closed forms (tree counts,
/// depth sums, path statistics, codec round trips).
std::vector<CheckResult> verify_oracle(const VerifyOptions& opts);

/// Generating-function identities at the configured truncation order,
/// including the kernel-vs-extraction bridge.
std::vector<CheckResult> verify_series(const VerifyOptions& opts);

/// Large-n limits, continuum asymptote, and closed-form specializations.
std::vector<CheckResult> verify_asymptotics(const VerifyOptions& opts);

/// Prints one PASS/FAIL line per check; returns 0 when all pass, 1 otherwise.
int print_report(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace catpath
