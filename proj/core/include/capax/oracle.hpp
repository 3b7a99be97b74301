#pragma once

// Transfinite-diameter estimate of the capacity from greedy Leja points on a
// discretized set. Shares no code with the elliptic/theta evaluation; it is
// the independent cross-check for capacity_exact.

#include <cstddef>
#include <span>
#include <vector>

#include "capax/capacity.hpp"

namespace capax::oracle {

// Candidates per interval, per requested Leja point.
inline constexpr std::size_t kCandidatesPerPoint = 40;

struct LejaSequence {
  std::vector<double> points;
  // increments[j] = sum_{i<j} log|z_j - z_i|; increments[0] = 0.
  std::vector<double> increments;

  // (prod_{i<j<n} |z_i - z_j|)^{2/(n(n-1))} for the first n points.
  double estimate(std::size_t n) const;
  double estimate() const { return estimate(points.size()); }
};

// count Chebyshev-Lobatto nodes on [a, b], ascending, endpoints included.
std::vector<double> chebyshev_candidates(double a, double b, std::size_t count);

// Candidate grid for [-1, alpha] U [beta, 1], per_interval nodes on each
// piece. The grid of (-beta, -alpha) is the exact negation of the grid of
// (alpha, beta).
std::vector<double> interval_candidates(const IntervalPair& ip,
                                        std::size_t per_interval);

// Greedy Leja points: the first is the smallest candidate, each next one
// maximizes the product of distances to those already chosen; ties go to the
// smaller coordinate. candidates must be sorted ascending. threads > 1 splits
// the distance update over candidate chunks; the result does not depend on it.
LejaSequence leja_sequence(std::span<const double> candidates, std::size_t n,
                           unsigned threads = 1);

// n >= 2 Leja points on a grid of kCandidatesPerPoint * n nodes per interval.
double leja_capacity_estimate(const IntervalPair& ip, std::size_t n,
                              unsigned threads = 1);

struct ConvergenceRow {
  std::size_t n;
  double estimate;
  double error;  // estimate - capacity_exact
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  bool monotone;  // |error| strictly decreasing along rows
};

// One Leja sequence on a grid sized for the largest n; every row is a prefix
// of it. ns must be strictly ascending with ns.front() >= 2.
ConvergenceReport convergence_report(const IntervalPair& ip,
                                     std::span<const std::size_t> ns,
                                     unsigned threads = 1);

}  // namespace capax::oracle
