#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "capax/bounds.hpp"
#include "capax/capacity.hpp"

namespace capax::cli {

enum class ExitCode : int { Ok = 0, VerificationFailed = 1, UsageError = 2 };

enum class OutputFormat { Csv, Json };

struct RunConfig {
  double tolerance = elliptic::kSeriesTolerance;
  OutputFormat format = OutputFormat::Csv;
  std::uint64_t seed = 0;
  unsigned threads = 1;

  // Throws DomainError when tolerance is outside [1e-16, 1e-8].
  void validate() const;
};

struct SweepSpec {
  std::vector<double> alphas{-0.7, -0.4, -0.1, 0.1, 0.4, 0.7};
  std::size_t beta_count = 200;
  double margin = 1e-6;

  void validate() const;
  // beta from |alpha| (alpha < 0) or alpha + margin (alpha >= 0) to 1 - margin.
  std::vector<double> beta_grid(double alpha) const;
};

struct CapRecord {
  IntervalPair pair;
  double k;
  double lambda;
  double cap;
  Branch branch;
  bounds::BoundsReport bounds;
};

CapRecord evaluate(const IntervalPair& ip, const RunConfig& config);

// Column order of sweep CSV files.
inline constexpr const char* kSweepHeader =
    "beta,cap,lb_symmetric,lb_pommerenke,lb_elementary,lb_solynin,"
    "ub_reflection,ub_gillis,ub_main,ub_elementary";

// 17 significant digits.
std::string format_real(double x);

void write_cap(std::ostream& os, const CapRecord& r, OutputFormat format);
std::string sweep_row(const CapRecord& r);

struct SweepOutput {
  std::vector<std::filesystem::path> csv_files;
  std::filesystem::path plot_script;
  std::size_t rows = 0;
};

std::string sweep_file_name(double alpha);

// One CSV per alpha plus a matplotlib script; every file is written to a
// temporary name and renamed into place.
SweepOutput run_sweep(const SweepSpec& spec, const std::filesystem::path& out_dir,
                      const RunConfig& config);

struct VerifyCommandOptions {
  std::size_t grid = 200;
  std::optional<std::string> inject_fault;
  std::size_t random_pairs = 0;  // extra bracketing samples drawn from seed
};

ExitCode run_verify(std::ostream& os, const VerifyCommandOptions& options,
                    const RunConfig& config);

struct PinRecord {
  double alpha;
  double beta;
  std::size_t n;
  double oracle_estimate;
  double capacity_exact;
  double relative_gap;
};

inline constexpr std::size_t kMinPinPoints = 100;

PinRecord run_pin(const IntervalPair& ip, std::size_t n, const RunConfig& config);
void write_pin(std::ostream& os, const PinRecord& r);

// Writes content to path via a sibling temporary file and rename.
void write_atomically(const std::filesystem::path& path, const std::string& content);

}  // namespace capax::cli
