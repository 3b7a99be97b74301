#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "capax/elliptic.hpp"

using namespace capax::elliptic;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i)
    v.push_back(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1)));
  return v;
}

}  // namespace

TEST_CASE("Modulus validates and caches its complement", "[modulus]") {
  const Modulus k(0.6);
  CHECK(k.kp() == 0.8);
  CHECK(k.m() + k.mc() == 1.0);
  CHECK(k.complement().k() == k.kp());
  CHECK_THROWS_AS(Modulus(0.0), capax::DomainError);
  CHECK_THROWS_AS(Modulus(1.0), capax::DomainError);
  CHECK_THROWS_AS(Modulus(-0.2), capax::DomainError);
  CHECK_THROWS_AS(Modulus(std::nan("")), capax::DomainError);
  CHECK_THROWS_AS(Modulus::from_parameters(0.5, 0.6), capax::DomainError);

  // Tiny k' survives via the parameter pair.
  const auto t = Modulus::from_parameters(1.0 - 1e-20, 1e-20);
  CHECK_THAT(t.kp(), WithinRel(1e-10, 1e-15));
}

TEST_CASE("complete integrals against mpmath goldens", "[complete]") {
  struct Row { double k, K, E; };
  const Row rows[] = {
      {0.3, 1.6080486199305128013, 1.5348334649232490416},
      {0.5, 1.6857503548125960429, 1.4674622093394271555},
      {0.9, 2.2805491384227702046, 1.1716970527816141412},
      {0.999, 4.4955963958421441704, 1.0039944099655078177},
      {0.74795759200676574225, 1.9080024530759431633, 1.3200815801844678641},
  };
  for (const auto& r : rows) {
    CHECK_THAT(complete_K(Modulus(r.k)), WithinRel(r.K, 1e-14));
    CHECK_THAT(complete_E(Modulus(r.k)), WithinRel(r.E, 1e-14));
  }
}

TEST_CASE("complete integrals: limits and self-dual point", "[complete]") {
  CHECK_THAT(complete_K(Modulus(1e-10)), WithinRel(pi / 2, 1e-15));
  CHECK_THAT(complete_E(Modulus(1e-10)), WithinRel(pi / 2, 1e-15));
  CHECK_THAT(complete_E(Modulus::from_parameters(1.0 - 1e-30, 1e-30)), WithinAbs(1.0, 1e-12));
  const Modulus s(std::sqrt(0.5));
  const auto p = elliptic_pair(s);
  CHECK_THAT(p.K, WithinRel(p.K_prime, 1e-15));
  CHECK_THAT(p.E, WithinRel(p.E_prime, 1e-15));
}

TEST_CASE("K increases and E decreases in k; E > k'^2 K", "[complete]") {
  double K_prev = 0.0;
  double E_prev = 2.0;
  for (double k : log_spaced(1e-6, 1.0 - 1e-9, 200)) {
    const Modulus m(std::min(k, 1.0 - 1e-9));
    const double K = complete_K(m);
    const double E = complete_E(m);
    CHECK(K >= K_prev);
    CHECK(E <= E_prev);
    CHECK(E < K);
    CHECK(E - m.mc() * K > 0.0);
    K_prev = K;
    E_prev = E;
  }
}

TEST_CASE("Legendre relation over 100 log-spaced moduli", "[complete][property]") {
  for (double k : log_spaced(1e-6, 1.0 - 1e-6, 100)) {
    const auto p = elliptic_pair(Modulus(k));
    const double r = p.E * p.K_prime + p.E_prime * p.K - p.K * p.K_prime;
    CHECK_THAT(r, WithinRel(pi / 2, 1e-12));
  }
}

TEST_CASE("incomplete F", "[incomplete]") {
  const Modulus k(0.7);
  CHECK(incomplete_F(0.0, k) == 0.0);
  CHECK_THAT(incomplete_F(pi / 2, k), WithinRel(complete_K(k), 1e-13));
  CHECK_THAT(incomplete_F(0.7, 0.0), WithinRel(0.7, 1e-15));
  CHECK(incomplete_F(0.5, k) < incomplete_F(0.6, k));
  CHECK_THROWS_AS(incomplete_F(-0.1, k), capax::DomainError);
  CHECK_THROWS_AS(incomplete_F(2.0, k), capax::DomainError);
}

TEST_CASE("Carlson integrals: closed forms", "[carlson]") {
  CHECK_THAT(carlson_rf(0.0, 1.0, 1.0), WithinRel(pi / 2, 1e-15));
  CHECK_THAT(carlson_rf(1.0, 1.0, 1.0), WithinRel(1.0, 1e-15));
  CHECK_THAT(carlson_rd(1.0, 1.0, 1.0), WithinRel(1.0, 1e-15));
  // R_D(0, 2, 1) = 3 * Gamma(3/4)^2 / sqrt(2 pi)
  const double g = std::tgamma(0.75);
  CHECK_THAT(carlson_rd(0.0, 2.0, 1.0), WithinRel(3.0 * g * g / std::sqrt(2.0 * pi), 1e-14));
}

TEST_CASE("sn cn dn: goldens, special points and degeneration", "[jacobi]") {
  const auto t = jacobi_sncndn(0.8, Modulus(0.6));
  CHECK_THAT(t.sn, WithinRel(0.69838572137896428198, 1e-14));
  CHECK_THAT(t.cn, WithinRel(0.71572158286164856456, 1e-14));
  CHECK_THAT(t.dn, WithinRel(0.90797172770006122147, 1e-14));

  const auto z = jacobi_sncndn(0.5, Modulus(1e-12));
  CHECK_THAT(z.sn, WithinRel(std::sin(0.5), 1e-14));
  CHECK_THAT(z.cn, WithinRel(std::cos(0.5), 1e-14));
  CHECK_THAT(z.dn, WithinRel(1.0, 1e-15));

  for (double kv : {0.1, 0.5, 0.9, 0.999}) {
    const Modulus k(kv);
    const double K = complete_K(k);
    const auto a = jacobi_sncndn(K, k);
    CHECK_THAT(a.sn, WithinAbs(1.0, 1e-13));
    CHECK_THAT(a.cn, WithinAbs(0.0, 1e-13));
    CHECK_THAT(a.dn, WithinRel(k.kp(), 1e-12));
    CHECK_THAT(jacobi_sncndn(K / 2, k).dn, WithinRel(std::sqrt(k.kp()), 1e-13));
  }
}

TEST_CASE("Pythagorean identities at 500 random points", "[jacobi][property]") {
  std::mt19937_64 rng(20241019);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const Modulus k(1e-6 + (1.0 - 2e-6) * U(rng));
    const double u = complete_K(k) * (0.001 + 0.998 * U(rng));
    const auto t = jacobi_sncndn(u, k);
    CHECK(std::abs(t.sn * t.sn + t.cn * t.cn - 1.0) < 1e-13);
    CHECK(std::abs(t.dn * t.dn + k.m() * t.sn * t.sn - 1.0) < 1e-13);
  }
}

TEST_CASE("inverse_sn", "[jacobi]") {
  const Modulus k(0.5);
  CHECK(inverse_sn(0.0, k) == 0.0);
  CHECK_THAT(inverse_sn(1.0, k), WithinRel(complete_K(k), 1e-14));
  CHECK_THAT(jacobi_sncndn(inverse_sn(0.63, k), k).sn, WithinAbs(0.63, 1e-12));
  CHECK_THROWS_AS(inverse_sn(1.5, k), capax::DomainError);
  CHECK_THROWS_AS(inverse_sn(-0.1, k), capax::DomainError);
}

TEST_CASE("theta functions: normalization and identities", "[theta]") {
  CHECK_THAT(theta_quad(0.3, Modulus(1e-9)).theta, WithinRel(1.0, 1e-15));
  for (double kv : {0.05, 0.3, 0.6, 0.9, 0.99, 0.999999}) {
    const Modulus k(kv);
    const double K = complete_K(k);
    const auto t0 = theta_quad(0.0, k);
    const double th0_4 = 4.0 * k.mc() * K * K / (pi * pi);
    CHECK_THAT(std::pow(t0.theta, 4), WithinRel(th0_4, 1e-11));
    CHECK_THAT(t0.theta, WithinRel(std::sqrt(k.kp()) * theta_quad(K, k).theta, 1e-12));

    // Closed forms at K/2.
    const auto th = theta_quad(K / 2, k);
    const double base = 2.0 * K * K * std::sqrt(k.kp()) / (pi * pi);
    CHECK_THAT(th.theta, WithinRel(std::pow(base * (1.0 + k.kp()), 0.25), 1e-12));
    CHECK_THAT(th.h, WithinRel(std::pow(base * (1.0 - k.kp()), 0.25), 1e-12));
    CHECK_THAT(th.theta1, WithinRel(th.theta, 1e-12));
    CHECK_THAT(th.h1, WithinRel(th.h, 1e-12));

    for (double f : {0.1, 0.27, 0.44}) {
      const double u = f * K;
      const auto a = theta_quad(u, k);
      const auto b = theta_quad(2 * u, k);
      // Theta(2u) Theta^3(0) = Theta^4(u) - H^4(u)
      CHECK_THAT(b.theta * std::pow(t0.theta, 3),
                 WithinRel(std::pow(a.theta, 4) - std::pow(a.h, 4), 1e-11));
      // H(2u) Theta(0) H1(0) Theta1(0) = 2 H Theta H1 Theta1 at u
      CHECK_THAT(b.h * t0.theta * t0.h1 * t0.theta1,
                 WithinRel(2.0 * a.h * a.theta * a.h1 * a.theta1, 1e-11));
      // sn, cn, dn as theta quotients
      const auto j = jacobi_sncndn(u, k);
      CHECK_THAT(a.h / (std::sqrt(kv) * a.theta), WithinRel(j.sn, 1e-11));
      CHECK_THAT(std::sqrt(k.kp() / kv) * a.h1 / a.theta, WithinRel(j.cn, 1e-11));
      CHECK_THAT(std::sqrt(k.kp()) * a.theta1 / a.theta, WithinRel(j.dn, 1e-11));
    }
  }
}

TEST_CASE("theta: nome and complementary forms agree", "[theta][property]") {
  using detail::ThetaSeries;
  for (double kv : {0.9, 0.97, 0.99, 0.995}) {
    const Modulus k(kv);
    const double K = complete_K(k);
    for (double f : {0.0, 0.2, 0.5, 0.9, 1.3}) {
      const auto a = detail::theta_quad(f * K, k, kSeriesTolerance, ThetaSeries::Nome);
      const auto b = detail::theta_quad(f * K, k, kSeriesTolerance, ThetaSeries::Complementary);
      CHECK_THAT(a.theta, WithinRel(b.theta, 1e-12));
      CHECK_THAT(a.h, WithinAbs(b.h, 1e-12 * std::abs(a.theta)));
      CHECK_THAT(a.h1, WithinAbs(b.h1, 1e-12 * std::abs(a.theta)));
      CHECK_THAT(a.theta1, WithinRel(b.theta1, 1e-12));
      if (f <= 1.0) {
        const double za = detail::jacobi_zn(f * K, k, kSeriesTolerance, ThetaSeries::Nome);
        const double zb = detail::jacobi_zn(f * K, k, kSeriesTolerance, ThetaSeries::Complementary);
        CHECK_THAT(za, WithinAbs(zb, 1e-11));
      }
    }
  }
}

TEST_CASE("nome", "[theta]") {
  CHECK_THAT(nome(Modulus(std::sqrt(0.5))), WithinRel(std::exp(-pi), 1e-14));
  CHECK(nome(Modulus(0.3)) < nome(Modulus(0.6)));
}

TEST_CASE("Jacobi zeta and epsilon", "[zeta]") {
  for (double kv : {0.2, 0.7, 0.95, 0.9999}) {
    const Modulus k(kv);
    const double K = complete_K(k);
    CHECK_THAT(jacobi_zn(0.0, k), WithinAbs(0.0, 1e-12));
    CHECK_THAT(jacobi_zn(K, k), WithinAbs(0.0, 1e-12));
    CHECK(jacobi_epsilon(0.0, k) == 0.0);
    CHECK_THAT(jacobi_epsilon(K, k), WithinAbs(complete_E(k), 1e-12));
  }
  const Modulus k8(0.8);
  CHECK_THAT(jacobi_zn(complete_K(k8) / 2, k8), WithinAbs(0.2, 1e-12));

  const Modulus k7(0.7);
  const double r = jacobi_epsilon(0.5, k7) - 0.5 * complete_E(k7) / complete_K(k7);
  CHECK_THAT(r, WithinAbs(jacobi_zn(0.5, k7), 1e-11));
  CHECK_THROWS_AS(jacobi_epsilon(2.0 * complete_K(k7), k7), capax::DomainError);
}

TEST_CASE("generic AGM matches the double API", "[complete]") {
  const Modulus k(0.42);
  const auto ke = agm_complete(0.42L, static_cast<long double>(k.kp()));
  CHECK_THAT(static_cast<double>(ke.K), WithinRel(complete_K(k), 1e-15));
  CHECK_THAT(static_cast<double>(ke.E), WithinRel(complete_E(k), 1e-15));
}
