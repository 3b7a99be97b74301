// capax: capacity of two real intervals, their bounds, and verification.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "capax/error.hpp"
#include "cli/commands.hpp"

namespace {

using capax::cli::ExitCode;

int code(ExitCode c) { return static_cast<int>(c); }

void add_run_config(CLI::App& app, capax::cli::RunConfig& config) {
  app.add_option("--tolerance", config.tolerance, "theta series truncation, in [1e-16, 1e-8]");
  app.add_option("--seed", config.seed, "seed for randomized sweeps");
  app.add_option("--threads", config.threads, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logarithmic capacity of [-1,alpha] U [beta,1]"};
  app.require_subcommand(1);
  capax::cli::RunConfig config;

  double alpha = 0.0;
  double beta = 0.0;
  std::string format = "csv";
  auto* cap = app.add_subcommand("cap", "capacity and bounds for one pair");
  cap->add_option("alpha", alpha)->required();
  cap->add_option("beta", beta)->required();
  cap->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  add_run_config(*cap, config);

  capax::cli::SweepSpec spec;
  std::string out_dir = "sweep";
  auto* sweep = app.add_subcommand("sweep", "CSV sweeps of beta for fixed alphas");
  sweep->add_option("--alphas", spec.alphas, "comma separated alphas")->delimiter(',');
  sweep->add_option("--points", spec.beta_count, "beta points per alpha");
  sweep->add_option("--margin", spec.margin, "distance kept from the endpoints");
  sweep->add_option("--out", out_dir, "output directory");
  add_run_config(*sweep, config);

  capax::cli::VerifyCommandOptions vopts;
  std::string fault;
  auto* verify = app.add_subcommand("verify", "check the auxiliary inequalities on grids");
  verify->add_option("--grid", vopts.grid, "points per grid axis")->check(CLI::PositiveNumber);
  verify->add_option("--random", vopts.random_pairs, "extra random bracketing pairs");
  verify->add_option("--inject-fault", fault)->group("");
  add_run_config(*verify, config);

  std::size_t n = 0;
  std::string pin_out;
  auto* pin = app.add_subcommand("pin", "Leja-point estimate as a JSON golden record");
  pin->add_option("alpha", alpha)->required();
  pin->add_option("beta", beta)->required();
  pin->add_option("n", n)->required();
  pin->add_option("--out", pin_out, "write the record to a file");
  add_run_config(*pin, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : code(ExitCode::UsageError);
  }

  try {
    config.validate();
    if (*cap) {
      config.format = format == "json" ? capax::cli::OutputFormat::Json
                                       : capax::cli::OutputFormat::Csv;
      const auto rec = capax::cli::evaluate(capax::IntervalPair(alpha, beta), config);
      capax::cli::write_cap(std::cout, rec, config.format);
    } else if (*sweep) {
      const auto out = capax::cli::run_sweep(spec, out_dir, config);
      std::cerr << "wrote " << out.csv_files.size() << " files, " << out.rows
                << " rows, to " << out_dir << '\n';
    } else if (*verify) {
      if (!fault.empty()) vopts.inject_fault = fault;
      return code(capax::cli::run_verify(std::cout, vopts, config));
    } else if (*pin) {
      if (n < capax::cli::kMinPinPoints) throw capax::DomainError("n must be ≥ 100");
      const auto rec = capax::cli::run_pin(capax::IntervalPair(alpha, beta), n, config);
      if (pin_out.empty()) {
        capax::cli::write_pin(std::cout, rec);
      } else {
        std::ostringstream os;
        capax::cli::write_pin(os, rec);
        capax::cli::write_atomically(pin_out, os.str());
      }
    }
  } catch (const capax::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return code(ExitCode::UsageError);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return code(ExitCode::VerificationFailed);
  }
  return code(ExitCode::Ok);
}
