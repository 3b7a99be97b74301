#pragma once

// Real-argument elliptic integrals, Jacobi elliptic functions, Jacobi theta
// functions (old notation) and the Jacobi zeta function, all in double
// precision for a modulus 0 < k < 1.
//
// Theta dictionary. With v = pi*u/(2K) and nome q = exp(-pi*K'/K):
//
//   Theta(u)  = theta_4(v, q)      H(u)  = theta_1(v, q)
//   Theta1(u) = theta_3(v, q)      H1(u) = theta_2(v, q)
//
// so that Theta(0)^4 = 4 k'^2 K^2 / pi^2 and Theta1(u) = Theta(u + K).

#include <cmath>
#include <limits>

#include "capax/error.hpp"

namespace capax::elliptic {

inline constexpr double kSeriesTolerance = 1e-16;

// Modulus k with cached complement. Either k or the pair (k^2, k'^2) may be
// given; the latter avoids cancellation when k' is tiny.
class Modulus {
 public:
  explicit Modulus(double k);

  // m = k^2, mc = k'^2; requires m + mc == 1 to within 16 ulp.
  static Modulus from_parameters(double m, double mc);

  double k() const noexcept { return k_; }
  double kp() const noexcept { return kp_; }
  double m() const noexcept { return m_; }
  double mc() const noexcept { return mc_; }

  Modulus complement() const noexcept { return Modulus(kp_, k_, mc_, m_); }

 private:
  Modulus(double k, double kp, double m, double mc) noexcept
      : k_(k), kp_(kp), m_(m), mc_(mc) {}

  double k_;
  double kp_;
  double m_;
  double mc_;
};

struct EllipticPair {
  double K;
  double K_prime;
  double E;
  double E_prime;
};

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

struct ThetaQuad {
  double theta;   // Theta(u)
  double h;       // H(u)
  double h1;      // H1(u)
  double theta1;  // Theta1(u)
  double q;       // nome
};

// Complete integrals by the arithmetic-geometric mean.
double complete_K(const Modulus& k);
double complete_E(const Modulus& k);
EllipticPair elliptic_pair(const Modulus& k);

// Carlson symmetric integrals. rf requires at most one zero argument; rd
// requires z > 0 and at most one of x, y zero.
double carlson_rf(double x, double y, double z);
double carlson_rd(double x, double y, double z);

// Legendre's incomplete first kind integral for 0 <= phi <= pi/2 and
// 0 <= k < 1 (k = 0 is allowed: F(phi, 0) = phi).
double incomplete_F(double phi, double k);
double incomplete_F(double phi, const Modulus& k);

// sn, cn, dn by descending Landen transformation. Accurate on [0, 2K];
// any finite u is accepted.
JacobiTriple jacobi_sncndn(double u, const Modulus& k);

// Inverse of sn on [0, K]: the u with sn(u, k) = x, for 0 <= x <= 1.
double inverse_sn(double x, const Modulus& k);

// Same, given sin(am u) = s, cos^2(am u) = c2 and dn^2 = d2 directly.
// Lets callers that know the three squares exactly skip the cancellation in
// 1 - s^2 and 1 - k^2 s^2.
double inverse_sn(double s, double c2, double d2);

double nome(const Modulus& k);

ThetaQuad theta_quad(double u, const Modulus& k,
                     double tolerance = kSeriesTolerance);

// zn(u) = Theta'(u)/Theta(u), by the differentiated theta series.
double jacobi_zn(double u, const Modulus& k,
                 double tolerance = kSeriesTolerance);

// Incomplete second kind integral E(am u, k) for u in [0, K].
double jacobi_epsilon(double u, const Modulus& k);

namespace detail {

// Which theta representation theta_quad uses.
enum class ThetaSeries { Automatic, Nome, Complementary };

ThetaQuad theta_quad(double u, const Modulus& k, double tolerance,
                     ThetaSeries series);
double jacobi_zn(double u, const Modulus& k, double tolerance,
                 ThetaSeries series);

// Threshold on q above which the complementary-nome form is used.
inline constexpr double kComplementaryNomeThreshold = 0.5;

}  // namespace detail

// Generic AGM evaluation of K and E, usable with any floating type that
// supports sqrt and abs through argument-dependent lookup. The double API
// above calls this with T = double.
template <class T>
struct CompleteIntegrals {
  T K;
  T E;
};

template <class T>
CompleteIntegrals<T> agm_complete(const T& k, const T& kp) {
  using std::abs;
  using std::atan;
  using std::sqrt;
  const T pi = 4 * atan(T(1));
  T a = 1;
  T b = kp;
  T c = k;
  T weight = 0.5;
  T sum = weight * c * c;
  const T stop = std::numeric_limits<T>::epsilon() < T(1e-16)
                     ? T(std::numeric_limits<T>::epsilon())
                     : T(1e-16);
  for (int i = 0; i < 40; ++i) {
    if (abs(a - b) < stop * a) break;
    const T an = (a + b) / 2;
    const T bn = sqrt(a * b);
    c = (a - b) / 2;
    weight *= 2;
    sum += weight * c * c;
    if (an == a && bn == b) break;
    a = an;
    b = bn;
  }
  const T K = pi / (2 * a);
  return {K, K * (1 - sum)};
}

}  // namespace capax::elliptic
