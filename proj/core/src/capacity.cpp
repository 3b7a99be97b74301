#include "capax/capacity.hpp"

#include <cmath>
#include <numbers>

namespace capax {
namespace {

using elliptic::Modulus;

constexpr double kPi = std::numbers::pi;

// k^2 and k'^2 straight from the endpoints; k'^2 as a product keeps full
// relative accuracy when the gap is wide.
Modulus modulus_of(double alpha, double beta) {
  const double den = (1.0 - alpha) * (1.0 + beta);
  const double m = 2.0 * (beta - alpha) / den;
  const double mc = (1.0 + alpha) * (1.0 - beta) / den;
  return Modulus::from_parameters(m, mc);
}

// lambda K for a pair, from sn^2 = (1-alpha)/2, cn^2 = (1+alpha)/2,
// dn^2 = (1+alpha)/(1+beta).
double theta_argument(double alpha, double beta) {
  return elliptic::inverse_sn(std::sqrt((1.0 - alpha) / 2.0), (1.0 + alpha) / 2.0,
                              (1.0 + alpha) / (1.0 + beta));
}

struct Forms {
  double theta_ratio;
  double closed;
};

Forms evaluate(const Modulus& k, double u, double dn2,
               double tol = elliptic::kSeriesTolerance) {
  const double K = elliptic::complete_K(k);
  const double th0 = elliptic::theta_quad(0.0, k, tol).theta;
  const double thu = elliptic::theta_quad(u, k, tol).theta;
  const double r = th0 / thu;
  const double thu2 = thu * thu;
  return {r * r * r * r / (2.0 * dn2),
          2.0 * k.mc() * K * K / (kPi * kPi * dn2 * thu2 * thu2)};
}

}  // namespace

IntervalPair::IntervalPair(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta))
    throw DomainError("alpha and beta must be finite");
  if (!(alpha < beta)) throw DomainError("alpha must be < beta");
  if (!(alpha > -1.0)) throw DomainError("alpha must be > -1");
  if (!(beta < 1.0)) throw DomainError("beta must be < 1");
  if (beta - alpha < kDegeneracyMargin)
    throw DegenerateError("gap between alpha and beta is degenerate");
  if (alpha <= -1.0 + kDegeneracyMargin)
    throw DegenerateError("interval [-1, alpha] is degenerate");
  if (beta >= 1.0 - kDegeneracyMargin)
    throw DegenerateError("interval [beta, 1] is degenerate");
}

ModulusParam::ModulusParam(elliptic::Modulus k, double lam)
    : modulus(k), lambda(lam) {
  if (!std::isfinite(lam) || !(lam > 0.0) || !(lam < 1.0))
    throw DomainError("lambda must lie in (0,1)");
}

ModulusParam param_from_intervals(const IntervalPair& ip) {
  const Modulus k = modulus_of(ip.alpha(), ip.beta());
  const double u = theta_argument(ip.alpha(), ip.beta());
  return ModulusParam(k, u / elliptic::complete_K(k));
}

IntervalPair intervals_from_param(const ModulusParam& p) {
  const double K = elliptic::complete_K(p.modulus);
  const auto t = elliptic::jacobi_sncndn(p.lambda * K, p.modulus);
  const double alpha = 1.0 - 2.0 * t.sn * t.sn;
  const double beta = 2.0 * t.cn * t.cn / (t.dn * t.dn) - 1.0;
  return IntervalPair(alpha, beta);
}

CapacityResult capacity_exact(const IntervalPair& ip, double tolerance) {
  const ModulusParam param = param_from_intervals(ip);
  const IntervalPair c = ip.canonical();
  const double u = theta_argument(c.alpha(), c.beta());
  const double dn2 = (1.0 + c.alpha()) / (1.0 + c.beta());
  const Forms f = evaluate(param.modulus, u, dn2, tolerance);
  return {f.theta_ratio, f.closed, param,
          ip.is_canonical() ? Branch::Direct : Branch::Reflected};
}

double capacity_from_param(const ModulusParam& p, Branch branch) {
  const double K = elliptic::complete_K(p.modulus);
  const double lam = branch == Branch::Direct ? p.lambda : 1.0 - p.lambda;
  const double u = lam * K;
  const auto t = elliptic::jacobi_sncndn(u, p.modulus);
  return evaluate(p.modulus, u, t.dn * t.dn).theta_ratio;
}

NormalizedIntervals normalize_intervals(double a, double b, double c, double d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) ||
      !std::isfinite(d))
    throw DomainError("interval endpoints must be finite");
  if (!(a < b && b < c && c < d))
    throw DomainError("interval endpoints must satisfy a < b < c < d");
  const double scale = (d - a) / 2.0;
  const double shift = -(a + d) / 2.0;
  return {IntervalPair((b + shift) / scale, (c + shift) / scale), scale, shift};
}

double capacity_of_intervals(double a, double b, double c, double d) {
  const NormalizedIntervals n = normalize_intervals(a, b, c, d);
  return n.scale * capacity_exact(n.pair).cap;
}

double robinson_arc_capacity(const IntervalPair& ip) {
  return std::sqrt(2.0 * capacity_exact(ip).cap);
}

}  // namespace capax
