#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "catpath/catalan.hpp"
#include "catpath/figure.hpp"
#include "catpath/kernels.hpp"
#include "catpath/paths.hpp"
#include "catpath/tree.hpp"
#include "catpath/verify.hpp"

namespace {

// Exit codes are a stable contract: 0 success, 1 verification failure,
// 2 domain error (bad request), 3 resource-bound error.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitDomain = 2;
constexpr int kExitBound = 3;

struct AvgArgs {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::string method = "closed";
  std::int64_t order = 64;
  unsigned decimals = 6;
};

int run_avg(const AvgArgs& a) {
  using namespace catpath;
  if (a.decimals > 50)
    throw std::domain_error("avg: decimals capped at 50, got " +
                            std::to_string(a.decimals));
  Int sum, count;
  Rat avg;
  if (a.method == "closed") {
    sum = summed_length_closed(a.n, a.r);
    count = path_count(a.n, a.r);
    avg = average_length(a.n, a.r);
  } else if (a.method == "recursive") {
    if (a.r < 1 || a.r > a.n)
      throw std::domain_error("avg: separation r=" + std::to_string(a.r) +
                              " out of range [1, " + std::to_string(a.n) +
                              "]");
    sum = summed_length_recursive(a.n, a.r);
    count = path_count(a.n, a.r);
    avg = make_rat(sum, count);
  } else if (a.method == "oracle") {
    if (a.n > default_pair_bound())
      throw bound_error("avg: n=" + std::to_string(a.n) +
                        " exceeds the oracle pair bound " +
                        std::to_string(default_pair_bound()));
    if (a.r < 1 || a.r > a.n)
      throw std::domain_error("avg: separation r=" + std::to_string(a.r) +
                              " out of range [1, " + std::to_string(a.n) +
                              "]");
    const PathStats stats = oracle_path_stats(a.n, a.r);
    sum = stats.sum;
    count = stats.count;
    avg = stats.avg;
  } else if (a.method == "series") {
    if (a.r < 1 || a.r > a.n)
      throw std::domain_error("avg: separation r=" + std::to_string(a.r) +
                              " out of range [1, " + std::to_string(a.n) +
                              "]");
    const std::int64_t needed = a.n + a.r - 1;  // total degree of the cell
    if (needed > a.order)
      throw bound_error("avg: kernel cell (" + std::to_string(a.n) + ", " +
                        std::to_string(a.r - 1) +
                        ") needs truncation order " + std::to_string(needed) +
                        ", above the configured order " +
                        std::to_string(a.order));
    sum = to_integer(leaf_path_kernel(needed).coeff(a.n, a.r - 1));
    count = path_count(a.n, a.r);
    avg = make_rat(sum, count);
  } else {
    throw std::domain_error("avg: unknown method '" + a.method + "'");
  }
  std::cout << "S=" << sum.get_str() << " count=" << count.get_str()
            << " A=" << to_fraction_string(avg) << " (~"
            << to_decimal_string(avg, a.decimals) << ")\n";
  return kExitOk;
}

std::vector<std::int64_t> parse_n_list(const std::string& csv) {
  std::vector<std::int64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      throw std::domain_error("figure-afinal: empty entry in the n list");
    std::size_t used = 0;
    const long long v = std::stoll(item, &used);
    if (used != item.size())
      throw std::domain_error("figure-afinal: bad n value '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact leaf-to-leaf path statistics on ordered full binary "
               "trees"};
  app.require_subcommand(1);

  // catalan N
  std::int64_t catalan_n = 0;
  CLI::App* cmd_catalan =
      app.add_subcommand("catalan", "Print C_0..C_N, one per line");
  cmd_catalan->add_option("N", catalan_n, "largest index")->required();

  // avg --n N --r R --method M
  AvgArgs avg_args;
  CLI::App* cmd_avg = app.add_subcommand(
      "avg", "Summed and average path length at a given separation");
  cmd_avg->add_option("--n", avg_args.n, "internal vertex count")->required();
  cmd_avg->add_option("--r", avg_args.r, "leaf separation")->required();
  cmd_avg->add_option("--method", avg_args.method,
                      "closed | recursive | oracle | series");
  cmd_avg->add_option("--order", avg_args.order,
                      "series truncation order cap (series method)");
  cmd_avg->add_option("--decimals", avg_args.decimals,
                      "digits in the decimal rendering");

  // figure-afinal --n list --rmax R --out FILE
  std::string fig_n = "50,100,200,5000,10000,20000";
  std::int64_t fig_rmax = 0;
  std::string fig_out;
  std::string fig_format = "csv";
  unsigned fig_decimals = 6;
  CLI::App* cmd_figure = app.add_subcommand(
      "figure-afinal",
      "Average path length versus separation for several n, plus the limit "
      "column");
  cmd_figure->add_option("--n", fig_n, "comma-separated n values");
  cmd_figure->add_option("--rmax", fig_rmax,
                         "last separation row (default: max n)");
  cmd_figure->add_option("--out", fig_out, "output file")->required();
  cmd_figure->add_option("--format", fig_format, "csv | table");
  cmd_figure->add_option("--decimals", fig_decimals, "digits per cell");

  // verify --suite S
  std::string suite;
  catpath::VerifyOptions vopts;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "Run a verification suite and report PASS/FAIL per check");
  cmd_verify
      ->add_option("--suite", suite,
                   "identities | oracle | series | asymptotics")
      ->required();
  cmd_verify->add_option("--order", vopts.order, "series truncation order");
  cmd_verify->add_option("--nmax", vopts.nmax, "index sweep bound");
  cmd_verify->add_option(
      "--corrupt-entry", vopts.corrupt_index,
      "test hook: corrupt C_k in the suite's private table first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help/--version
    app.exit(e);
    return kExitDomain;
  }

  try {
    if (cmd_catalan->parsed()) {
      if (catalan_n < 0)
        throw std::domain_error("catalan: negative index");
      catpath::CatalanTable table(catalan_n);
      for (std::int64_t i = 0; i <= catalan_n; ++i)
        std::cout << table.at(i).get_str() << '\n';
      return kExitOk;
    }
    if (cmd_avg->parsed()) return run_avg(avg_args);
    if (cmd_figure->parsed()) {
      catpath::TableRequest req;
      req.n_values = parse_n_list(fig_n);
      req.r_max = fig_rmax;
      req.decimals = fig_decimals;
      if (fig_format == "csv") {
        req.format = catpath::TableRequest::Format::csv;
      } else if (fig_format == "table") {
        req.format = catpath::TableRequest::Format::table;
      } else {
        throw std::domain_error("figure-afinal: unknown format '" +
                                fig_format + "'");
      }
      req.validate();
      std::ofstream out(fig_out);
      if (!out)
        throw std::domain_error("figure-afinal: cannot open '" + fig_out +
                                "' for writing");
      catpath::write_average_table(out, req);
      out.flush();
      if (!out)
        throw std::domain_error("figure-afinal: write to '" + fig_out +
                                "' failed");
      return kExitOk;
    }
    if (cmd_verify->parsed()) {
      std::vector<catpath::CheckResult> results;
      if (suite == "identities") {
        results = catpath::verify_identities(vopts);
      } else if (suite == "oracle") {
        results = catpath::verify_oracle(vopts);
      } else if (suite == "series") {
        results = catpath::verify_series(vopts);
      } else if (suite == "asymptotics") {
        results = catpath::verify_asymptotics(vopts);
      } else {
        throw std::domain_error("verify: unknown suite '" + suite + "'");
      }
      return catpath::print_report(std::cout, results) == 0
                 ? kExitOk
                 : kExitVerifyFailed;
    }
  } catch (const catpath::bound_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBound;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitDomain;
}
