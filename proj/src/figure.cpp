#include "catpath/figure.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <string>

#include "catpath/paths.hpp"

namespace catpath {

void TableRequest::validate() const {
  if (n_values.empty())
    throw std::domain_error("table request: no n values given");
  for (std::int64_t n : n_values)
    if (n < 1)
      throw std::domain_error("table request: n must be >= 1, got " +
                              std::to_string(n));
  if (decimals > 50)
    throw std::domain_error("table request: decimals capped at 50, got " +
                            std::to_string(decimals));
  if (r_max < 0)
    throw std::domain_error("table request: negative r_max");
}

void write_average_table(std::ostream& os, const TableRequest& req) {
  req.validate();
  const std::int64_t r_max =
      req.r_max > 0 ? req.r_max
                    : *std::max_element(req.n_values.begin(),
                                        req.n_values.end());

  std::vector<AverageSweep> sweeps;
  sweeps.reserve(req.n_values.size());
  for (std::int64_t n : req.n_values) sweeps.emplace_back(n);

  std::vector<std::vector<std::string>> rows;
  for (std::int64_t r = 1; r <= r_max; ++r) {
    std::vector<std::string> row;
    row.push_back(std::to_string(r));
    for (auto& sweep : sweeps) {
      if (!sweep.done() && sweep.r() == r) {
        row.push_back(to_decimal_string(sweep.value(), req.decimals));
        sweep.advance();
      } else {
        row.push_back("");  // r beyond this curve's n
      }
    }
    row.push_back(to_decimal_string(average_limit(r), req.decimals));
    rows.push_back(std::move(row));
  }

  std::vector<std::string> header{"r"};
  for (std::int64_t n : req.n_values) header.push_back(std::to_string(n));
  header.push_back("inf");

  if (req.format == TableRequest::Format::csv) {
    for (std::size_t i = 0; i < header.size(); ++i)
      os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << (i ? "," : "") << row[i];
      os << '\n';
    }
  } else {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i)
      width[i] = header[i].size();
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size(); ++i)
        width[i] = std::max(width[i], row[i].size());
    for (std::size_t i = 0; i < header.size(); ++i)
      os << (i ? "  " : "") << std::setw(static_cast<int>(width[i]))
         << header[i];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << (i ? "  " : "") << std::setw(static_cast<int>(width[i]))
           << row[i];
      os << '\n';
    }
  }
}

}  // namespace catpath
