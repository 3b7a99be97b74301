#include "capax/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

namespace capax::oracle {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Best {
  std::size_t index;
  double value;
};

// Adds log|c - z| to objective over [lo, hi) and returns the first maximizer.
Best update_chunk(std::span<const double> cand, std::span<double> objective,
                  double z, std::size_t lo, std::size_t hi) {
  Best best{lo, kNegInf};
  for (std::size_t i = lo; i < hi; ++i) {
    if (objective[i] != kNegInf) objective[i] += std::log(std::abs(cand[i] - z));
    if (objective[i] > best.value) best = {i, objective[i]};
  }
  return best;
}

}  // namespace

double LejaSequence::estimate(std::size_t n) const {
  if (n < 2 || n > points.size())
    throw DomainError("estimate needs 2 <= n <= number of points");
  double sum = 0.0;
  for (std::size_t j = 1; j < n; ++j) sum += increments[j];
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  return std::exp(sum / pairs);
}

std::vector<double> chebyshev_candidates(double a, double b, std::size_t count) {
  if (!(a < b) || count < 2)
    throw DomainError("chebyshev_candidates needs a < b and count >= 2");
  std::vector<double> x(count);
  const double mid = (a + b) / 2.0;
  const double half = (b - a) / 2.0;
  const double step = std::numbers::pi / static_cast<double>(count - 1);
  for (std::size_t j = 0; j < count; ++j)
    x[j] = mid - half * std::cos(step * static_cast<double>(j));
  x.front() = a;
  x.back() = b;
  return x;
}

std::vector<double> interval_candidates(const IntervalPair& ip,
                                        std::size_t per_interval) {
  const IntervalPair c = ip.canonical();
  std::vector<double> left = chebyshev_candidates(-1.0, c.alpha(), per_interval);
  const std::vector<double> right = chebyshev_candidates(c.beta(), 1.0, per_interval);
  left.insert(left.end(), right.begin(), right.end());
  if (!ip.is_canonical()) {
    std::reverse(left.begin(), left.end());
    for (double& x : left) x = -x;
  }
  return left;
}

LejaSequence leja_sequence(std::span<const double> candidates, std::size_t n,
                           unsigned threads) {
  if (n < 1 || n > candidates.size())
    throw DomainError("leja_sequence needs 1 <= n <= number of candidates");
  if (!std::is_sorted(candidates.begin(), candidates.end()))
    throw DomainError("leja_sequence needs ascending candidates");
  threads = std::max(1u, threads);
  const std::size_t size = candidates.size();
  std::vector<double> objective(size, 0.0);

  LejaSequence seq;
  seq.points.reserve(n);
  seq.increments.reserve(n);
  std::size_t chosen = 0;
  double chosen_value = 0.0;

  std::vector<Best> partial(threads);
  for (std::size_t step = 0; step < n; ++step) {
    const double z = candidates[chosen];
    seq.points.push_back(z);
    seq.increments.push_back(chosen_value);
    objective[chosen] = kNegInf;
    if (step + 1 == n) break;

    const std::size_t chunk = (size + threads - 1) / threads;
    if (threads == 1) {
      partial[0] = update_chunk(candidates, objective, z, 0, size);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = std::min(size, t * chunk);
        const std::size_t hi = std::min(size, lo + chunk);
        pool.emplace_back([&, t, lo, hi] {
          partial[t] = update_chunk(candidates, objective, z, lo, hi);
        });
      }
    }
    Best best{0, kNegInf};
    for (const Best& b : partial)
      if (b.value > best.value) best = b;
    chosen = best.index;
    chosen_value = best.value;
  }
  return seq;
}

double leja_capacity_estimate(const IntervalPair& ip, std::size_t n,
                              unsigned threads) {
  if (n < 2) throw DomainError("n must be >= 2");
  const std::vector<double> cand = interval_candidates(ip, kCandidatesPerPoint * n);
  return leja_sequence(cand, n, threads).estimate();
}

ConvergenceReport convergence_report(const IntervalPair& ip,
                                     std::span<const std::size_t> ns,
                                     unsigned threads) {
  if (ns.empty() || ns.front() < 2 ||
      std::adjacent_find(ns.begin(), ns.end(), std::greater_equal<>()) != ns.end())
    throw DomainError("ns must be strictly ascending and start at >= 2");
  const std::size_t n_max = ns.back();
  const std::vector<double> cand =
      interval_candidates(ip, kCandidatesPerPoint * n_max);
  const LejaSequence seq = leja_sequence(cand, n_max, threads);
  const double cap = capacity_exact(ip).cap;

  ConvergenceReport report{{}, true};
  for (std::size_t n : ns) {
    const double est = seq.estimate(n);
    report.rows.push_back({n, est, est - cap});
  }
  for (std::size_t i = 1; i < report.rows.size(); ++i)
    if (!(std::abs(report.rows[i].error) < std::abs(report.rows[i - 1].error)))
      report.monotone = false;
  return report;
}

}  // namespace capax::oracle
