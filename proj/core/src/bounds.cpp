#include "capax/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "capax/golden_section.hpp"

namespace capax::bounds {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSolyninBracket = 1e-10;
constexpr int kSolyninScan = 1000;

double log_solynin_objective(const AngleChart& a, double delta) {
  const double left = a.psi * kPi / (2.0 * delta);
  const double rest = kPi - delta;
  const double right = (kPi - a.phi) * kPi / (2.0 * rest);
  return 2.0 * delta * delta / (kPi * kPi) * std::log(std::sin(left)) +
         2.0 * rest * rest / (kPi * kPi) * std::log(std::sin(right));
}

// exp of 2 (E/K - k'^2) log^2(x), times the prefactor.
double main_form(double prefactor, double e_over_k, double mc, double log_arg) {
  const double l = std::log(log_arg);
  return prefactor * std::exp(2.0 * (e_over_k - mc) * l * l);
}

// (1+a)/(2(1+b)) and (sqrt 2 + sqrt(1-a))/sqrt(1+a) for the canonical pair.
struct Rewritten {
  double prefactor;
  double log_arg;
  elliptic::Modulus modulus;
};

Rewritten rewritten_parts(const IntervalPair& c) {
  const double a = c.alpha();
  return {(1.0 + a) / (2.0 * (1.0 + c.beta())),
          (std::sqrt(2.0) + std::sqrt(1.0 - a)) / std::sqrt(1.0 + a),
          param_from_intervals(c).modulus};
}

}  // namespace

AngleChart AngleChart::of(const IntervalPair& ip) {
  return {std::acos(ip.alpha()), std::acos(ip.beta())};
}

std::optional<double> lb_symmetric(const IntervalPair& ip) {
  if (!ip.is_canonical()) return std::nullopt;
  const double b = ip.beta();
  return 0.5 * std::sqrt((1.0 - b) * (1.0 + b));
}

double lb_pommerenke(const IntervalPair& ip) {
  return (1.0 + ip.alpha()) / 4.0 + (1.0 - ip.beta()) / 4.0;
}

double lb_elementary(const IntervalPair& ip) {
  const double a = ip.alpha();
  const double b = ip.beta();
  const double num =
      std::sqrt(std::sqrt((1.0 - a) * (1.0 + a) * (1.0 - b) * (1.0 + b)));
  return num / (std::sqrt((1.0 - a) * (1.0 + b)) +
                std::sqrt((1.0 + a) * (1.0 - b)));
}

double solynin_objective(const AngleChart& a, double delta) {
  return std::exp(log_solynin_objective(a, delta));
}

SolyninBound lb_solynin(const IntervalPair& ip) {
  const AngleChart a = AngleChart::of(ip.canonical());
  auto f = [&a](double d) { return log_solynin_objective(a, d); };
  Maximum best = golden_section_maximize(f, a.psi, a.phi, kSolyninBracket);
  for (int i = 0; i <= kSolyninScan; ++i) {
    const double d = a.psi + (a.phi - a.psi) * i / kSolyninScan;
    const double v = f(d);
    if (v > best.value) best = {d, v};
  }
  return {0.5 * std::exp(best.value), best.x};
}

std::optional<double> ub_reflection(const IntervalPair& ip) {
  const double a = ip.alpha();
  if (!ip.is_canonical() || !(a < 0.0)) return std::nullopt;
  return 0.5 * std::sqrt((1.0 - a) * (1.0 + a));
}

double ub_gillis(const IntervalPair& ip) {
  const double la = std::log((1.0 + ip.alpha()) / 8.0);
  const double lb = std::log((1.0 - ip.beta()) / 8.0);
  return 2.0 * std::exp(la * lb / (la + lb));
}

double ub_main(const IntervalPair& ip) {
  const IntervalPair c = ip.canonical();
  const ModulusParam p = param_from_intervals(c);
  const auto ek = elliptic::elliptic_pair(p.modulus);
  const auto t = elliptic::jacobi_sncndn(p.lambda * ek.K, p.modulus);
  return main_form(0.5 * t.dn * t.dn, ek.E / ek.K, p.modulus.mc(),
                   (1.0 + t.sn) / t.cn);
}

double ub_main_rewritten(const IntervalPair& ip) {
  const Rewritten r = rewritten_parts(ip.canonical());
  const double e_over_k =
      elliptic::complete_E(r.modulus) / elliptic::complete_K(r.modulus);
  return main_form(r.prefactor, e_over_k, r.modulus.mc(), r.log_arg);
}

KEBounds ke_bounds(const elliptic::Modulus& k) {
  return ke_bounds_generic(k.k(), k.kp(), k.mc());
}

double ub_elementary(const IntervalPair& ip) {
  const Rewritten r = rewritten_parts(ip.canonical());
  const KEBounds ke = ke_bounds(r.modulus);
  return main_form(r.prefactor, ke.E2 / ke.k_lower(), r.modulus.mc(), r.log_arg);
}

double BoundsReport::max_lower() const {
  double v = std::max({lb_pommerenke, lb_elementary, lb_solynin});
  if (lb_symmetric) v = std::max(v, *lb_symmetric);
  return v;
}

double BoundsReport::min_upper() const {
  double v = std::min({ub_unit, ub_gillis, ub_main, ub_elementary});
  if (ub_reflection) v = std::min(v, *ub_reflection);
  return v;
}

BoundsReport bounds_report(const IntervalPair& ip) {
  const IntervalPair c = ip.canonical();
  const SolyninBound s = lb_solynin(c);
  BoundsReport r;
  r.lb_symmetric = lb_symmetric(c);
  r.lb_pommerenke = lb_pommerenke(c);
  r.lb_elementary = lb_elementary(c);
  r.lb_solynin = s.value;
  r.lb_solynin_delta = s.delta;
  r.ub_reflection = ub_reflection(c);
  r.ub_gillis = ub_gillis(c);
  r.ub_main = ub_main(c);
  r.ub_elementary = ub_elementary(c);
  r.reflected = !ip.is_canonical();
  return r;
}

}  // namespace capax::bounds
