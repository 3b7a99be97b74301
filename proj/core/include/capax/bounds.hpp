#pragma once

// Lower and upper bounds for the capacity of [-1, alpha] U [beta, 1], from
// trivial monotonicity bounds up to the elementary upper bound that replaces
// K and E by elementary sandwiches K1..K5, E1, E2.

#include <cmath>
#include <optional>
#include <type_traits>

#include "capax/capacity.hpp"

namespace capax::bounds {

// phi = arccos(alpha), psi = arccos(beta); 0 < psi < phi < pi.
struct AngleChart {
  double phi;
  double psi;

  static AngleChart of(const IntervalPair& ip);
};

struct SolyninBound {
  double value;
  double delta;  // maximizer in [psi, phi]
};

// 1/2 sqrt(1 - beta^2) when alpha + beta >= 0.
std::optional<double> lb_symmetric(const IntervalPair& ip);

// (1 + alpha)/4 + (1 - beta)/4.
double lb_pommerenke(const IntervalPair& ip);

// sqrt(k')/(1 + k'), written in alpha and beta; exact when alpha = -beta.
double lb_elementary(const IntervalPair& ip);

// The bracketed product being maximized over delta, without the factor 1/2:
//   sin(psi pi / (2 delta))^{2 delta^2/pi^2}
//     * sin((pi - phi) pi / (2 (pi - delta)))^{2 (pi - delta)^2/pi^2}
double solynin_objective(const AngleChart& a, double delta);

// 1/2 max over delta in [psi, phi] of solynin_objective. Golden section to a
// bracket below 1e-10, then a 1000-point scan of [psi, phi]; the larger of
// the two is returned since unimodality is not known.
SolyninBound lb_solynin(const IntervalPair& ip);

// 1/2 sqrt(1 - alpha^2) when alpha + beta >= 0 and alpha < 0.
std::optional<double> ub_reflection(const IntervalPair& ip);

// Gillis: 2 exp(log((1+a)/8) log((1-b)/8) / log((1+a)(1-b)/64)).
double ub_gillis(const IntervalPair& ip);

// 1/2 dn^2(lambda K) exp(2 (E/K - k'^2) log^2((1 + sn(lambda K))/cn(lambda K))),
// evaluated on the canonical (alpha + beta >= 0) pair.
double ub_main(const IntervalPair& ip);

// The same bound in closed form in alpha and beta:
//   (1+a)/(2(1+b)) exp[2(E/K - k'^2) log^2((sqrt 2 + sqrt(1-a))/sqrt(1+a))].
double ub_main_rewritten(const IntervalPair& ip);

template <class T>
struct KEBoundsT {
  T K1, K2, K3, K4, K5;
  T E1, E2;
  T gamma;
  T delta_exp;

  T k_lower() const { return K1 > K2 ? K1 : K2; }
  T k_upper() const {
    T u = K3 < K4 ? K3 : K4;
    return u < K5 ? u : K5;
  }
};

using KEBounds = KEBoundsT<double>;

// Elementary bounds for K(k) and E(k) given k, k' and k'^2. Generic over the
// floating type so the sandwich can be checked beyond double resolution.
template <class T>
KEBoundsT<T> ke_bounds_generic(const T& k, const T& kp, const T& mc) {
  using std::atan;
  using std::exp;
  using std::log;
  using std::pow;
  const T pi = 4 * atan(T(1));
  const T half_pi = pi / 2;
  const T e_half_pi = exp(half_pi);
  const T gamma = (4 - pi / 4 * e_half_pi) / (e_half_pi - 4);
  const T delta = log(T(2)) / log(half_pi);

  T artanh_over_k;
  T log_kp_over_kp_minus_1;
  if constexpr (std::is_floating_point_v<T>) {
    artanh_over_k = std::atanh(k) / k;
    // log(k')/(k' - 1) with k' - 1 = -k^2/(1 + k').
    const T m = k * k;
    log_kp_over_kp_minus_1 =
        kp == 1 ? T(1) : -(1 + kp) * std::log1p(-m) / (2 * m);
  } else {
    artanh_over_k = log((1 + k) / (1 - k)) / (2 * k);
    log_kp_over_kp_minus_1 = kp == 1 ? T(1) : T(log(kp) / (kp - 1));
  }

  const T log4kp = log(4 / kp);
  KEBoundsT<T> b;
  b.K1 = half_pi * pow(artanh_over_k, T(0.75));
  b.K2 = (1 + mc / 4) * log4kp - mc / 4;
  b.K3 = half_pi * (T(0.75) * log_kp_over_kp_minus_1 + 1 / (2 * (1 + kp)));
  b.K4 = log(4 / kp + (e_half_pi - 4) * pow(kp, gamma));
  b.K5 = (1 + mc / 4) * log4kp;
  b.E1 = half_pi * pow((1 + pow(kp, T(1.5))) / 2, T(2) / 3);
  b.E2 = half_pi * pow((1 + pow(kp, delta)) / 2, 1 / delta);
  b.gamma = gamma;
  b.delta_exp = delta;
  return b;
}

KEBounds ke_bounds(const elliptic::Modulus& k);

// ub_main_rewritten with E -> E2 and K -> max{K1, K2}: E2/max{K1,K2} >= E/K
// and the log^2 factor is nonnegative, so the result stays an upper bound and
// involves only elementary functions of alpha and beta.
double ub_elementary(const IntervalPair& ip);

struct BoundsReport {
  std::optional<double> lb_symmetric;
  double lb_pommerenke;
  double lb_elementary;
  double lb_solynin;
  double lb_solynin_delta;
  std::optional<double> ub_reflection;
  double ub_unit = 0.5;
  double ub_gillis;
  double ub_main;
  double ub_elementary;
  bool reflected;  // computed on (-beta, -alpha)

  double max_lower() const;
  double min_upper() const;
};

// All bounds, evaluated on the canonical pair.
BoundsReport bounds_report(const IntervalPair& ip);

}  // namespace capax::bounds
