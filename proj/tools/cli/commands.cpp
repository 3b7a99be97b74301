#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "capax/oracle.hpp"
#include "capax/verify.hpp"

namespace capax::cli {
namespace {

using nlohmann::ordered_json;

std::string optional_cell(const std::optional<double>& v) {
  return v ? format_real(*v) : std::string();
}

ordered_json optional_json(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

const char* branch_name(Branch b) {
  return b == Branch::Direct ? "direct" : "reflected";
}

// Evaluates f(0..count-1) on up to `threads` workers; results keep index order.
template <class F>
auto parallel_map(std::size_t count, unsigned threads, F f) {
  using R = decltype(f(std::size_t{}));
  std::vector<std::optional<R>> out(count);
  threads = std::max(1u, threads);
  const std::size_t chunk = (count + threads - 1) / threads;
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = std::min(count, t * chunk);
    const std::size_t hi = std::min(count, lo + chunk);
    jobs.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async,
                              [&, lo, hi] {
                                for (std::size_t i = lo; i < hi; ++i) out[i].emplace(f(i));
                              }));
  }
  for (auto& j : jobs) j.get();
  std::vector<R> result;
  result.reserve(count);
  for (auto& o : out) result.push_back(std::move(*o));
  return result;
}

std::string plot_script(const SweepSpec& spec) {
  std::ostringstream py;
  py << "#!/usr/bin/env python3\n"
        "# Capacity of [-1,a] U [b,1] against the upper bounds ub_main (dashed)\n"
        "# and ub_gillis (dotted), one panel per alpha.\n"
        "import csv\n"
        "import os\n"
        "import matplotlib.pyplot as plt\n\n"
        "HERE = os.path.dirname(os.path.abspath(__file__))\n"
        "FILES = [\n";
  for (double a : spec.alphas)
    py << "    (" << format_real(a) << ", \"" << sweep_file_name(a) << "\"),\n";
  py << "]\n\n"
        "def column(rows, name):\n"
        "    return [float(r[name]) for r in rows]\n\n"
        "fig, axes = plt.subplots(2, (len(FILES) + 1) // 2, figsize=(12, 7),\n"
        "                         squeeze=False)\n"
        "for ax, (alpha, name) in zip(axes.flat, FILES):\n"
        "    with open(os.path.join(HERE, name)) as f:\n"
        "        rows = list(csv.DictReader(f))\n"
        "    beta = column(rows, 'beta')\n"
        "    ax.plot(beta, column(rows, 'cap'), 'k-', label='cap')\n"
        "    ax.plot(beta, column(rows, 'ub_main'), 'k--', label='ub_main')\n"
        "    ax.plot(beta, column(rows, 'ub_gillis'), 'k:', label='ub_gillis')\n"
        "    ax.set_title(f'alpha = {alpha:g}')\n"
        "    ax.set_xlabel('beta')\n"
        "axes.flat[0].legend()\n"
        "fig.tight_layout()\n"
        "fig.savefig(os.path.join(HERE, 'sweep.png'), dpi=150)\n";
  return py.str();
}

}  // namespace

void RunConfig::validate() const {
  if (!(tolerance >= 1e-16 && tolerance <= 1e-8))
    throw DomainError("tolerance must lie in [1e-16, 1e-8]");
  if (threads == 0) throw DomainError("threads must be >= 1");
}

void SweepSpec::validate() const {
  if (alphas.empty()) throw DomainError("sweep needs at least one alpha");
  if (beta_count < 2) throw DomainError("points must be >= 2");
  if (!(margin > 0.0 && margin < 0.5)) throw DomainError("margin must lie in (0, 0.5)");
  for (double a : alphas) {
    if (!(a > -1.0 && a < 1.0)) throw DomainError("every alpha must lie in (-1,1)");
    const double start = a < 0.0 ? -a : a + margin;
    if (!(start < 1.0 - margin))
      throw DomainError("alpha leaves no room for a beta grid below 1 - margin");
  }
}

std::vector<double> SweepSpec::beta_grid(double alpha) const {
  const double start = alpha < 0.0 ? -alpha : alpha + margin;
  const double stop = 1.0 - margin;
  std::vector<double> b(beta_count);
  for (std::size_t i = 0; i < beta_count; ++i)
    b[i] = start + (stop - start) * static_cast<double>(i) /
                       static_cast<double>(beta_count - 1);
  b.back() = stop;
  return b;
}

CapRecord evaluate(const IntervalPair& ip, const RunConfig& config) {
  const CapacityResult c = capacity_exact(ip, config.tolerance);
  return {ip, c.param.modulus.k(), c.param.lambda, c.cap, c.branch_used,
          bounds::bounds_report(ip)};
}

std::string format_real(double x) { return fmt::format("{:.17g}", x); }

void write_cap(std::ostream& os, const CapRecord& r, OutputFormat format) {
  const auto& b = r.bounds;
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["alpha"] = r.pair.alpha();
    j["beta"] = r.pair.beta();
    j["k"] = r.k;
    j["lambda"] = r.lambda;
    j["cap"] = r.cap;
    j["lb_symmetric"] = optional_json(b.lb_symmetric);
    j["lb_pommerenke"] = b.lb_pommerenke;
    j["lb_elementary"] = b.lb_elementary;
    j["lb_solynin"] = b.lb_solynin;
    j["lb_solynin_delta"] = b.lb_solynin_delta;
    j["ub_reflection"] = optional_json(b.ub_reflection);
    j["ub_unit"] = b.ub_unit;
    j["ub_gillis"] = b.ub_gillis;
    j["ub_main"] = b.ub_main;
    j["ub_elementary"] = b.ub_elementary;
    j["branch"] = branch_name(r.branch);
    j["reflected"] = b.reflected;
    os << j.dump(2) << '\n';
    return;
  }
  os << "alpha,beta,k,lambda,cap,lb_symmetric,lb_pommerenke,lb_elementary,"
        "lb_solynin,lb_solynin_delta,ub_reflection,ub_unit,ub_gillis,ub_main,"
        "ub_elementary,branch,reflected\n";
  os << format_real(r.pair.alpha()) << ',' << format_real(r.pair.beta()) << ','
     << format_real(r.k) << ',' << format_real(r.lambda) << ',' << format_real(r.cap)
     << ',' << optional_cell(b.lb_symmetric) << ',' << format_real(b.lb_pommerenke)
     << ',' << format_real(b.lb_elementary) << ',' << format_real(b.lb_solynin) << ','
     << format_real(b.lb_solynin_delta) << ',' << optional_cell(b.ub_reflection) << ','
     << format_real(b.ub_unit) << ',' << format_real(b.ub_gillis) << ','
     << format_real(b.ub_main) << ',' << format_real(b.ub_elementary) << ','
     << branch_name(r.branch) << ',' << (b.reflected ? "true" : "false") << '\n';
}

std::string sweep_row(const CapRecord& r) {
  const auto& b = r.bounds;
  return fmt::format("{},{},{},{},{},{},{},{},{},{}", format_real(r.pair.beta()),
                     format_real(r.cap), optional_cell(b.lb_symmetric),
                     format_real(b.lb_pommerenke), format_real(b.lb_elementary),
                     format_real(b.lb_solynin), optional_cell(b.ub_reflection),
                     format_real(b.ub_gillis), format_real(b.ub_main),
                     format_real(b.ub_elementary));
}

std::string sweep_file_name(double alpha) {
  return fmt::format("sweep_alpha_{:g}.csv", alpha);
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string());
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

SweepOutput run_sweep(const SweepSpec& spec, const std::filesystem::path& out_dir,
                      const RunConfig& config) {
  spec.validate();
  config.validate();
  std::filesystem::create_directories(out_dir);

  SweepOutput out;
  for (double alpha : spec.alphas) {
    const std::vector<double> betas = spec.beta_grid(alpha);
    const auto rows = parallel_map(betas.size(), config.threads, [&](std::size_t i) {
      return sweep_row(evaluate(IntervalPair(alpha, betas[i]), config));
    });
    std::string csv = std::string(kSweepHeader) + '\n';
    for (const auto& row : rows) csv += row + '\n';
    const auto path = out_dir / sweep_file_name(alpha);
    write_atomically(path, csv);
    out.csv_files.push_back(path);
    out.rows += rows.size();
  }
  out.plot_script = out_dir / "plot_sweep.py";
  write_atomically(out.plot_script, plot_script(spec));
  return out;
}

ExitCode run_verify(std::ostream& os, const VerifyCommandOptions& options,
                    const RunConfig& config) {
  config.validate();
  verify::VerifyOptions vo;
  vo.grid = options.grid;
  vo.inject_fault = options.inject_fault;
  const verify::VerifyReport report = verify::run_lemma_suite(vo);

  for (const auto& l : report.lemmas) {
    os << (l.pass ? "PASS " : "FAIL ") << l.id << ": " << l.title
       << " | checks=" << l.checks << " max_violation=" << fmt::format("{:.3e}", l.max_violation);
    if (!l.pass) os << " | at " << l.worst;
    os << '\n';
  }
  os << fmt::format("crossovers: K1/K2 at k={:.6f}, K3/K4 at k={:.6f}, K4/K5 at k={:.6f}\n",
                    report.crossovers[0], report.crossovers[1], report.crossovers[2]);
  bool ok = report.all_pass();

  if (options.random_pairs > 0) {
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::size_t bad = 0;
    std::string where;
    for (std::size_t i = 0; i < options.random_pairs; ++i) {
      double a = u(rng);
      double b = u(rng);
      if (a > b) std::swap(a, b);
      if (b - a < 1e-9 || a < -1.0 + 1e-9 || b > 1.0 - 1e-9) continue;
      const IntervalPair ip(a, b);
      const double cap = capacity_exact(ip, config.tolerance).cap;
      const auto r = bounds::bounds_report(ip);
      if (r.max_lower() > cap + 1e-12 || cap > r.min_upper() + 1e-12) {
        ++bad;
        where = fmt::format("alpha={:.17g}, beta={:.17g}", a, b);
      }
    }
    os << (bad == 0 ? "PASS " : "FAIL ") << "bracketing: lower bounds <= cap <= upper bounds"
       << " | random pairs=" << options.random_pairs << " seed=" << config.seed;
    if (bad) os << " | " << bad << " violations, last at " << where;
    os << '\n';
    ok = ok && bad == 0;
  }
  return ok ? ExitCode::Ok : ExitCode::VerificationFailed;
}

PinRecord run_pin(const IntervalPair& ip, std::size_t n, const RunConfig& config) {
  if (n < kMinPinPoints) throw DomainError("n must be \u2265 100");
  config.validate();
  const double est = oracle::leja_capacity_estimate(ip, n, config.threads);
  const double cap = capacity_exact(ip, config.tolerance).cap;
  return {ip.alpha(), ip.beta(), n, est, cap, (est - cap) / cap};
}

void write_pin(std::ostream& os, const PinRecord& r) {
  ordered_json j;
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["n"] = r.n;
  j["oracle_estimate"] = r.oracle_estimate;
  j["capacity_exact"] = r.capacity_exact;
  j["relative_gap"] = r.relative_gap;
  os << j.dump(2) << '\n';
}

}  // namespace capax::cli
