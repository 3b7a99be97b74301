#include "capax/elliptic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace capax::elliptic {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Below this k (or k') the series limits replace the AGM.
constexpr double kDegenerate = 1e-8;

// Landen descent stops once |a - emc| <= kLandenTol * a; the next step is
// then accurate to about kLandenTol^2.
const double kLandenTol = std::sqrt(kEps) * 0.01;

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

Modulus::Modulus(double k) {
  require(std::isfinite(k) && k > 0.0 && k < 1.0, "modulus k must lie in (0,1)");
  k_ = k;
  m_ = k * k;
  mc_ = (1.0 - k) * (1.0 + k);
  kp_ = std::sqrt(mc_);
}

Modulus Modulus::from_parameters(double m, double mc) {
  require(std::isfinite(m) && std::isfinite(mc) && m > 0.0 && mc > 0.0,
          "parameters k^2 and k'^2 must be positive");
  const double sum = m + mc;
  require(std::abs(sum - 1.0) <= 16 * kEps, "k^2 + k'^2 must equal 1");
  m /= sum;
  mc /= sum;
  return Modulus(std::sqrt(m), std::sqrt(mc), m, mc);
}

double complete_K(const Modulus& k) {
  if (k.k() < kDegenerate) return kPi / 2 * (1.0 + k.m() / 4);
  if (k.kp() < kDegenerate) {
    const double L = std::log(4.0 / k.kp());
    return L + k.mc() / 4 * (L - 1.0);
  }
  return agm_complete(k.k(), k.kp()).K;
}

double complete_E(const Modulus& k) {
  if (k.k() < kDegenerate) return kPi / 2 * (1.0 - k.m() / 4);
  if (k.kp() < kDegenerate) {
    const double L = std::log(4.0 / k.kp());
    return 1.0 + k.mc() / 2 * (L - 0.5);
  }
  return agm_complete(k.k(), k.kp()).E;
}

EllipticPair elliptic_pair(const Modulus& k) {
  const Modulus c = k.complement();
  return {complete_K(k), complete_K(c), complete_E(k), complete_E(c)};
}

double carlson_rf(double x, double y, double z) {
  require(x >= 0 && y >= 0 && z >= 0 &&
              (x > 0) + (y > 0) + (z > 0) >= 2,
          "carlson_rf: arguments must be nonnegative, at most one zero");
  double A = (x + y + z) / 3;
  const double A0 = A;
  double Q = std::pow(3 * kEps, -1.0 / 6) *
             std::max({std::abs(A0 - x), std::abs(A0 - y), std::abs(A0 - z)});
  for (int i = 0; i < 100 && Q >= std::abs(A); ++i) {
    const double sx = std::sqrt(x);
    const double sy = std::sqrt(y);
    const double sz = std::sqrt(z);
    const double lam = sx * sy + sx * sz + sy * sz;
    x = (x + lam) / 4;
    y = (y + lam) / 4;
    z = (z + lam) / 4;
    A = (A + lam) / 4;
    Q /= 4;
  }
  const double X = (A - x) / A;
  const double Y = (A - y) / A;
  const double Z = -(X + Y);
  const double E2 = X * Y - Z * Z;
  const double E3 = X * Y * Z;
  return (1 - E2 / 10 + E3 / 14 + E2 * E2 / 24 - 3 * E2 * E3 / 44) /
         std::sqrt(A);
}

double carlson_rd(double x, double y, double z) {
  require(x >= 0 && y >= 0 && z > 0 && (x > 0 || y > 0),
          "carlson_rd: need z > 0 and at most one of x, y zero");
  double A = (x + y + 3 * z) / 5;
  const double A0 = A;
  double Q = std::pow(kEps / 4, -1.0 / 6) *
             std::max({std::abs(A0 - x), std::abs(A0 - y), std::abs(A0 - z)});
  double sum = 0;
  double fac = 1;
  for (int i = 0; i < 100 && Q >= std::abs(A); ++i) {
    const double sx = std::sqrt(x);
    const double sy = std::sqrt(y);
    const double sz = std::sqrt(z);
    const double lam = sx * sy + sx * sz + sy * sz;
    sum += fac / (sz * (z + lam));
    fac /= 4;
    x = (x + lam) / 4;
    y = (y + lam) / 4;
    z = (z + lam) / 4;
    A = (A + lam) / 4;
    Q /= 4;
  }
  const double X = (A - x) / A;
  const double Y = (A - y) / A;
  const double Z = -(X + Y) / 3;
  const double XY = X * Y;
  const double Z2 = Z * Z;
  const double E2 = XY - 6 * Z2;
  const double E3 = (3 * XY - 8 * Z2) * Z;
  const double E4 = 3 * (XY - Z2) * Z2;
  const double E5 = XY * Z2 * Z;
  const double series = 1 - 3 * E2 / 14 + E3 / 6 + 9 * E2 * E2 / 88 -
                        3 * E4 / 22 - 9 * E2 * E3 / 52 + 3 * E5 / 26;
  return fac * series / (A * std::sqrt(A)) + 3 * sum;
}

double incomplete_F(double phi, double k) {
  require(std::isfinite(phi) && phi >= 0.0 && phi <= kPi / 2,
          "incomplete_F: phi must lie in [0, pi/2]");
  require(std::isfinite(k) && k >= 0.0 && k < 1.0,
          "incomplete_F: k must lie in [0, 1)");
  if (phi == 0.0) return 0.0;
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  return s * carlson_rf(c * c, (1.0 - k * s) * (1.0 + k * s), 1.0);
}

double incomplete_F(double phi, const Modulus& k) {
  return incomplete_F(phi, k.k());
}

JacobiTriple jacobi_sncndn(double u, const Modulus& k) {
  std::array<double, 16> em{};
  std::array<double, 16> en{};
  double emc = k.mc();
  double a = 1.0;
  double c = 1.0;
  double dn = 1.0;
  std::size_t depth = 0;
  for (std::size_t i = 0; i < em.size(); ++i) {
    depth = i;
    em[i] = a;
    emc = std::sqrt(emc);
    en[i] = emc;
    c = 0.5 * (a + emc);
    if (std::abs(a - emc) <= kLandenTol * a) break;
    emc *= a;
    a = c;
  }
  u *= c;
  double sn = std::sin(u);
  double cn = std::cos(u);
  if (sn != 0.0) {
    a = cn / sn;
    c *= a;
    for (std::size_t i = depth + 1; i-- > 0;) {
      const double b = em[i];
      a *= c;
      c *= dn;
      dn = (en[i] + a) / (b + a);
      a = c / b;
    }
    a = 1.0 / std::sqrt(c * c + 1.0);
    sn = sn >= 0.0 ? a : -a;
    cn = c * sn;
  }
  return {sn, cn, dn};
}

double inverse_sn(double x, const Modulus& k) {
  require(std::isfinite(x) && x >= 0.0 && x <= 1.0,
          "inverse_sn: x must lie in [0,1]");
  if (x == 0.0) return 0.0;
  const double c2 = (1.0 - x) * (1.0 + x);
  const double d2 = (1.0 - k.k() * x) * (1.0 + k.k() * x);
  return inverse_sn(x, c2, d2);
}

double inverse_sn(double s, double c2, double d2) {
  require(s >= 0.0 && c2 >= 0.0 && d2 > 0.0,
          "inverse_sn: need s >= 0, cn^2 >= 0, dn^2 > 0");
  if (s == 0.0) return 0.0;
  return s * carlson_rf(c2, d2, 1.0);
}

double nome(const Modulus& k) {
  if (k.k() < kDegenerate) return k.m() / 16 * (1.0 + k.m() / 2);
  const EllipticPair p = elliptic_pair(k);
  return std::exp(-kPi * p.K_prime / p.K);
}

namespace {

struct Reduced {
  double v;     // in [-pi/2, pi/2]
  double sign;  // (-1)^n for the antiperiodic H, H1
};

Reduced reduce(double v) {
  const double n = std::nearbyint(v / kPi);
  const double odd = std::fmod(std::abs(n), 2.0);
  return {v - n * kPi, odd == 1.0 ? -1.0 : 1.0};
}

// Direct q-series in v.
ThetaQuad theta_by_nome(double v, double q, double tol) {
  const Reduced r = reduce(v);
  // Theta, Theta1: 1 + 2 sum (+-1)^n q^{n^2} cos(2 n v)
  double s3 = 1.0;
  double s4 = 1.0;
  double qn2 = 1.0;
  double qodd = q;
  for (int n = 1; n < 200; ++n) {
    qn2 *= qodd;
    qodd *= q * q;
    const double term = 2.0 * qn2 * std::cos(2.0 * n * r.v);
    s3 += term;
    s4 += (n % 2 ? -term : term);
    if (2.0 * qn2 < tol * std::min(std::abs(s3), std::abs(s4))) break;
  }
  // H, H1: 2 q^{1/4} sum (+-1)^n q^{n(n+1)} {sin, cos}((2n+1) v)
  const double c0 = 2.0 * std::sqrt(std::sqrt(q));
  double s1 = 0.0;
  double s2 = 0.0;
  double qnn = 1.0;
  for (int n = 0; n < 200; ++n) {
    if (n > 0) qnn *= std::pow(q, 2.0 * n);
    const double cn = c0 * qnn;
    const double arg = (2.0 * n + 1.0) * r.v;
    s1 += (n % 2 ? -cn : cn) * std::sin(arg);
    s2 += cn * std::cos(arg);
    if (qnn * (2.0 * n + 1.0) < tol) break;
  }
  return {s4, r.sign * s1, r.sign * s2, s3, q};
}

// Complementary nome form (Jacobi imaginary transformation), written as the
// Gaussian sums it reduces to for real v, with t = K'/K:
//   Theta  = t^{-1/2} sum_m          exp(-(pi(m+1/2) - v)^2 / (pi t))
//   H      = t^{-1/2} sum_m (-1)^m   exp(-(pi(m+1/2) - v)^2 / (pi t))
//   Theta1 = t^{-1/2} sum_m          exp(-(pi m - v)^2 / (pi t))
//   H1     = t^{-1/2} sum_m (-1)^m   exp(-(pi m - v)^2 / (pi t))
struct GaussSums {
  double half_even;  // sum over m of exp at pi(m+1/2)
  double half_alt;
  double half_slope;  // sum exp * 2(pi(m+1/2) - v)/(pi t)
  double int_even;
  double int_alt;
};

GaussSums gauss_sums(double v, double t, double tol) {
  const double w = kPi * t;
  GaussSums g{};
  auto add = [&](int m) {
    const double dh = kPi * (m + 0.5) - v;
    const double di = kPi * m - v;
    const double eh = std::exp(-dh * dh / w);
    const double ei = std::exp(-di * di / w);
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    g.half_even += eh;
    g.half_alt += sgn * eh;
    g.half_slope += eh * 2.0 * dh / w;
    g.int_even += ei;
    g.int_alt += sgn * ei;
    return std::max(eh, ei);
  };
  add(0);
  for (int j = 1; j < 1000; ++j) {
    const double hi = add(j);
    const double lo = add(-j);
    if (std::max(hi, lo) < tol * std::min(g.half_even, g.int_even)) break;
  }
  return g;
}

ThetaQuad theta_by_complement(double v, double t, double q, double tol) {
  const Reduced r = reduce(v);
  const GaussSums g = gauss_sums(r.v, t, tol);
  const double pre = 1.0 / std::sqrt(t);
  return {pre * g.half_even, r.sign * pre * g.half_alt, r.sign * pre * g.int_alt,
          pre * g.int_even, q};
}

bool use_complement(double q, detail::ThetaSeries series) {
  switch (series) {
    case detail::ThetaSeries::Nome:
      return false;
    case detail::ThetaSeries::Complementary:
      return true;
    case detail::ThetaSeries::Automatic:
      break;
  }
  return q > detail::kComplementaryNomeThreshold;
}

void check_tolerance(double tol) {
  require(std::isfinite(tol) && tol > 0.0 && tol < 1.0,
          "theta series tolerance must lie in (0,1)");
}

}  // namespace

namespace detail {

ThetaQuad theta_quad(double u, const Modulus& k, double tolerance,
                     ThetaSeries series) {
  require(std::isfinite(u), "theta_quad: u must be finite");
  check_tolerance(tolerance);
  const EllipticPair p = elliptic_pair(k);
  const double q = nome(k);
  const double v = kPi * u / (2.0 * p.K);
  if (use_complement(q, series))
    return theta_by_complement(v, p.K_prime / p.K, q, tolerance);
  return theta_by_nome(v, q, tolerance);
}

double jacobi_zn(double u, const Modulus& k, double tolerance,
                 ThetaSeries series) {
  require(std::isfinite(u), "jacobi_zn: u must be finite");
  check_tolerance(tolerance);
  const EllipticPair p = elliptic_pair(k);
  const double q = nome(k);
  const double scale = kPi / (2.0 * p.K);
  const Reduced r = reduce(kPi * u / (2.0 * p.K));
  if (use_complement(q, series)) {
    const GaussSums g = gauss_sums(r.v, p.K_prime / p.K, tolerance);
    return scale * g.half_slope / g.half_even;
  }
  // Theta'(v)/Theta(v) with Theta = 1 + 2 sum (-1)^n q^{n^2} cos(2nv).
  double num = 0.0;
  double den = 1.0;
  double qn2 = 1.0;
  double qodd = q;
  for (int n = 1; n < 200; ++n) {
    qn2 *= qodd;
    qodd *= q * q;
    const double sgn = (n % 2) ? -1.0 : 1.0;
    num -= sgn * 4.0 * n * qn2 * std::sin(2.0 * n * r.v);
    den += sgn * 2.0 * qn2 * std::cos(2.0 * n * r.v);
    if (static_cast<double>(n) * n * qn2 < tolerance * q) break;
  }
  return scale * num / den;
}

}  // namespace detail

ThetaQuad theta_quad(double u, const Modulus& k, double tolerance) {
  return detail::theta_quad(u, k, tolerance, detail::ThetaSeries::Automatic);
}

double jacobi_zn(double u, const Modulus& k, double tolerance) {
  return detail::jacobi_zn(u, k, tolerance, detail::ThetaSeries::Automatic);
}

double jacobi_epsilon(double u, const Modulus& k) {
  const double K = complete_K(k);
  require(std::isfinite(u) && u >= 0.0 && u <= K * (1.0 + 1e-12),
          "jacobi_epsilon: u must lie in [0, K]");
  if (u == 0.0) return 0.0;
  const JacobiTriple t = jacobi_sncndn(std::min(u, K), k);
  const double s = std::abs(t.sn);
  const double c2 = t.cn * t.cn;
  const double d2 = t.dn * t.dn;
  return s * carlson_rf(c2, d2, 1.0) -
         k.m() / 3.0 * s * s * s * carlson_rd(c2, d2, 1.0);
}

}  // namespace capax::elliptic
