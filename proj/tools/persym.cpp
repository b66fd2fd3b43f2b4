// Command-line front end: exhaustive censuses, closed-form evaluation and
// cross-verification of rank statistics of stacked Hankel families over GF(2).
//
// Exit codes: 0 = all requested checks passed, 1 = a mathematical mismatch
// was found and reported, 2 = usage or capacity error.

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "persym/census.hpp"
#include "persym/closed_forms.hpp"
#include "persym/exact.hpp"
#include "persym/expsum.hpp"
#include "persym/report.hpp"
#include "persym/shape.hpp"
#include "persym/solution_count.hpp"

namespace {

struct CommonArgs {
  std::string blocks;
  int cols = 0;
  int threads = 0;
  std::string cap;
  std::string out = "json";
};

void add_common(CLI::App& sub, CommonArgs& args) {
  sub.add_option("--s", args.blocks,
                 "block row counts: list like 2,2,3 or NxS for N blocks of S rows")
      ->required();
  sub.add_option("--k", args.cols, "column count")->required();
  sub.add_option("--threads", args.threads, "worker threads (0 = PERSYM_THREADS or hardware)");
  sub.add_option("--cap", args.cap, "state cap, decimal or 2^N (refuse larger enumerations)");
  sub.add_option("--out", args.out, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
}

persym::Shape make_shape(const CommonArgs& args) {
  return persym::Shape(persym::parse_block_sizes(args.blocks), args.cols);
}

persym::VerifyOptions make_options(const CommonArgs& args) {
  persym::VerifyOptions opts;
  opts.threads = args.threads;
  if (!args.cap.empty()) {
    const std::uint64_t cap = persym::parse_capacity(args.cap);
    opts.census_cap = cap;
    opts.integral_cap = cap;
    opts.tuple_cap = cap;
  }
  return opts;
}

void emit(const persym::VerificationReport& report, const std::string& out) {
  if (out == "csv")
    std::cout << persym::to_csv_string(report);
  else
    std::cout << persym::to_json_string(report);
}

std::string with_pow2_factorization(const persym::ExactInt& value) {
  std::string text = value.get_str();
  if (value <= 0) return text;
  const auto a = mpz_scan1(value.get_mpz_t(), 0);
  if (a == 0) return text;
  const persym::ExactInt odd = value >> a;
  text += " = 2^" + std::to_string(a);
  if (odd != 1) text += " * " + odd.get_str();
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank statistics of stacked Hankel matrix families over GF(2)"};
  app.require_subcommand(1);

  CommonArgs census_args;
  int census_augment = 0;
  CLI::App* census = app.add_subcommand("census", "exhaustive rank census");
  add_common(*census, census_args);
  census->add_option("--augment", census_augment, "unconstrained extra rows to enumerate")
      ->check(CLI::NonNegativeNumber);

  CommonArgs verify_args;
  std::vector<int> verify_q;
  int verify_augment = 0;
  CLI::App* verify = app.add_subcommand(
      "verify", "census vs closed forms, moment identities, multi-route moments");
  add_common(*verify, verify_args);
  verify->add_option("--q", verify_q, "moment orders to cross-check, e.g. 1,2")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  verify->add_option("--augment", verify_augment,
                     "extra rows: compare the append recurrence against a direct census")
      ->check(CLI::NonNegativeNumber);

  CommonArgs rq_args;
  int rq_q = 1;
  std::string rq_mode = "closed";
  CLI::App* rq = app.add_subcommand("rq", "one moment R_q by one route");
  add_common(*rq, rq_args);
  rq->add_option("--q", rq_q, "moment order")->required()->check(CLI::PositiveNumber);
  rq->add_option("--mode", rq_mode, "evaluation route")
      ->check(CLI::IsMember({"closed", "integral", "brute"}));

  CommonArgs formulas_args;
  std::vector<int> formulas_q;
  CLI::App* formulas =
      app.add_subcommand("formulas", "closed-form table only, no enumeration");
  add_common(*formulas, formulas_args);
  formulas->add_option("--q", formulas_q, "moment orders to evaluate in closed form")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (census->parsed()) {
      persym::VerifyOptions opts = make_options(census_args);
      opts.augment = census_augment;
      const persym::VerificationReport report =
          persym::census_report(make_shape(census_args), opts);
      emit(report, census_args.out);
      return report.pass ? 0 : 1;
    }
    if (verify->parsed()) {
      persym::VerifyOptions opts = make_options(verify_args);
      opts.q_list = verify_q;
      opts.augment = verify_augment;
      const persym::VerificationReport report =
          persym::run_verification(make_shape(verify_args), opts);
      emit(report, verify_args.out);
      return report.pass ? 0 : 1;
    }
    if (rq->parsed()) {
      const persym::Shape shape = make_shape(rq_args);
      persym::ExactInt value;
      if (rq_mode == "closed") {
        value = persym::rq_closed(persym::conjectured_distribution(shape), rq_q);
      } else if (rq_mode == "integral") {
        persym::IntegralOptions opts;
        opts.threads = rq_args.threads;
        if (!rq_args.cap.empty()) opts.state_cap = persym::parse_capacity(rq_args.cap);
        value = persym::coset_integral(shape, rq_q, opts);
      } else {
        persym::SolveOptions opts;
        opts.threads = rq_args.threads;
        if (!rq_args.cap.empty()) opts.tuple_cap = persym::parse_capacity(rq_args.cap);
        value = persym::count_solutions(shape, rq_q, opts);
      }
      std::cout << with_pow2_factorization(value) << "\n";
      return 0;
    }
    // formulas
    const persym::VerificationReport report =
        persym::formulas_report(make_shape(formulas_args), formulas_q);
    emit(report, formulas_args.out);
    return report.pass ? 0 : 1;
  } catch (const persym::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
