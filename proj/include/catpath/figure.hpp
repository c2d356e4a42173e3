#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "catpath/exact.hpp"

namespace catpath {

/// Request for an average-path-length table: rows r = 1..r_max, one column
/// of A_n(r) per requested n, plus the A_inf(r) column.
struct TableRequest {
  std::vector<std::int64_t> n_values;
  std::int64_t r_max = 0;  // 0 means "all": max of n_values
  enum class Format { csv, table };
  Format format = Format::csv;
  unsigned decimals = 6;

  void validate() const;  // nonempty n_values, each >= 1, decimals <= 50
};

/// Emits the table. CSV: header "r,<n1>,<n2>,...,inf", ',' separators, '.'
/// decimal points, LF line endings; cells with r > n are left empty.
void write_average_table(std::ostream& os, const TableRequest& req);

}  // namespace catpath
