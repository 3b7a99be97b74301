#pragma once

// Logarithmic capacity of C = [-1, alpha] U [beta, 1] from the classical
// elliptic/theta representation, together with the (alpha, beta) <-> (k, lambda)
// chart:
//
//   k^2 = 2 (beta - alpha) / ((1 - alpha)(1 + beta)),   sn^2(lambda K) = (1 - alpha)/2,
//   cap = Theta^4(0) / (2 dn^2(lambda K) Theta^4(lambda K))
//       = 2 k'^2 K^2 / (pi^2 dn^2(lambda K) Theta^4(lambda K)).

#include "capax/elliptic.hpp"

namespace capax {

// Gaps narrower than this, or endpoints closer than this to +-1, are rejected
// as degenerate.
inline constexpr double kDegeneracyMargin = 1e-12;

class IntervalPair {
 public:
  // Throws DomainError unless -1 < alpha < beta < 1, and DegenerateError when
  // the pair is within kDegeneracyMargin of a degenerate configuration.
  IntervalPair(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  // (-beta, -alpha): the mirror image, which has the same capacity.
  IntervalPair reflected() const { return IntervalPair(-beta_, -alpha_); }

  // alpha + beta >= 0 (equivalently lambda <= 1/2).
  bool is_canonical() const noexcept { return alpha_ + beta_ >= 0.0; }
  IntervalPair canonical() const { return is_canonical() ? *this : reflected(); }

  friend bool operator==(const IntervalPair&, const IntervalPair&) = default;

 private:
  double alpha_;
  double beta_;
};

struct ModulusParam {
  ModulusParam(elliptic::Modulus modulus, double lambda);

  elliptic::Modulus modulus;
  double lambda;
};

enum class Branch {
  Direct,     // theta argument lambda K
  Reflected,  // theta argument (1 - lambda) K
};

struct CapacityResult {
  double cap;            // Theta^4(0) / (2 dn^2 Theta^4)
  double cap_alternate;  // 2 k'^2 K^2 / (pi^2 dn^2 Theta^4)
  ModulusParam param;    // chart of the pair as given
  Branch branch_used;
};

ModulusParam param_from_intervals(const IntervalPair& ip);
IntervalPair intervals_from_param(const ModulusParam& p);

// Theta argument min(lambda, 1 - lambda) K: pairs with alpha + beta < 0 are
// evaluated through their mirror image. tolerance truncates the theta series.
CapacityResult capacity_exact(const IntervalPair& ip,
                              double tolerance = elliptic::kSeriesTolerance);

// Evaluates the formula on the requested branch without the min(lambda, 1 -
// lambda) rule. Used to cross-check the two forms against each other.
double capacity_from_param(const ModulusParam& p, Branch branch);

struct NormalizedIntervals {
  IntervalPair pair;
  double scale;  // (d - a) / 2
  double shift;  // -(a + d) / 2; x' = (x + shift) / scale
};

// Affine map of [a, b] U [c, d] onto [-1, alpha] U [beta, 1].
NormalizedIntervals normalize_intervals(double a, double b, double c, double d);

// cap([a, b] U [c, d]) = scale * cap(normalized pair).
double capacity_of_intervals(double a, double b, double c, double d);

// Capacity of the arc set on the unit circle that projects onto C:
// sqrt(2 cap(C)).
double robinson_arc_capacity(const IntervalPair& ip);

}  // namespace capax
