#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "capax/bounds.hpp"
#include "capax/golden_section.hpp"

using namespace capax;
using namespace capax::bounds;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("golden section finds an interior maximum", "[golden]") {
  const auto m = golden_section_maximize([](double x) { return -(x - 0.3) * (x - 0.3); },
                                         0.0, 1.0, 1e-10);
  CHECK_THAT(m.x, WithinAbs(0.3, 1e-9));
}

TEST_CASE("angle chart", "[bounds]") {
  const auto a = AngleChart::of(IntervalPair(-0.1, 0.3));
  CHECK(a.psi < a.phi);
  CHECK(std::cos(a.phi) == Catch::Approx(-0.1));
  CHECK(std::cos(a.psi) == Catch::Approx(0.3));
}

TEST_CASE("symmetric and reflection bounds", "[bounds]") {
  CHECK_THAT(*lb_symmetric(IntervalPair(-0.6, 0.6)), WithinRel(0.4, 1e-15));
  CHECK_THAT(*lb_symmetric(IntervalPair(0.0, 0.6)), WithinRel(0.4, 1e-15));
  CHECK_FALSE(lb_symmetric(IntervalPair(-0.5, 0.2)).has_value());
  CHECK_THAT(*lb_symmetric(IntervalPair(-0.5, 0.2).reflected()),
             WithinRel(0.5 * std::sqrt(0.75), 1e-15));

  CHECK_THAT(*ub_reflection(IntervalPair(-0.6, 0.6)), WithinRel(0.4, 1e-15));
  CHECK_FALSE(ub_reflection(IntervalPair(0.1, 0.3)).has_value());
  CHECK_THAT(*ub_reflection(IntervalPair(-0.2, 0.5)), WithinRel(0.5 * std::sqrt(0.96), 1e-15));
}

TEST_CASE("Pommerenke bound", "[bounds]") {
  CHECK_THAT(lb_pommerenke(IntervalPair(-0.1, 0.3)), WithinRel(0.4, 1e-15));
  CHECK_THAT(lb_pommerenke(IntervalPair(-0.6, 0.6)), WithinRel(0.2, 1e-15));
  CHECK_THAT(lb_pommerenke(IntervalPair(-0.5, 1.0 - 1e-9)), WithinAbs(0.125, 1e-9));
}

TEST_CASE("elementary lower bound", "[bounds]") {
  CHECK_THAT(lb_elementary(IntervalPair(-0.6, 0.6)), WithinRel(0.4, 1e-13));
  CHECK_THAT(lb_elementary(IntervalPair(-0.8, 0.8)), WithinRel(0.3, 1e-13));
  CHECK_THAT(lb_elementary(IntervalPair(-0.1, 0.3)), WithinRel(0.48968180615255131115, 1e-13));
  const double kp = param_from_intervals(IntervalPair(-0.1, 0.3)).modulus.kp();
  CHECK_THAT(lb_elementary(IntervalPair(-0.1, 0.3)),
             WithinRel(std::sqrt(kp) / (1 + kp), 1e-13));
}

TEST_CASE("Solynin bound", "[bounds]") {
  const IntervalPair ip(-0.1, 0.3);
  const auto s = lb_solynin(ip);
  CHECK_THAT(s.value, WithinRel(0.48978957175924642159, 1e-13));
  CHECK_THAT(s.delta, WithinAbs(1.4682065264575931181, 1e-5));
  const auto a = AngleChart::of(ip);
  CHECK(s.value >= 0.5 * solynin_objective(a, (a.phi + a.psi) / 2) - 1e-12);
  CHECK(s.value <= capacity_exact(ip).cap + 1e-12);

  for (double b : {0.2, 0.5, 0.9}) {
    const auto sym = lb_solynin(IntervalPair(-b, b));
    CHECK_THAT(sym.delta, WithinAbs(std::numbers::pi / 2, 1e-8));
  }
}

TEST_CASE("Gillis bound", "[bounds]") {
  CHECK_THAT(ub_gillis(IntervalPair(-0.6, 0.6)), WithinRel(std::sqrt(0.2), 1e-14));
  CHECK_THAT(ub_gillis(IntervalPair(-0.1, 0.3)), WithinRel(0.6321266920085512828, 1e-14));
}

TEST_CASE("main upper bound and its rewritten form", "[bounds]") {
  const IntervalPair ip(-0.1, 0.3);
  CHECK_THAT(ub_main(ip), WithinRel(0.54696551892491557308, 1e-13));
  CHECK_THAT(ub_main(ip), WithinRel(ub_main_rewritten(ip), 1e-11));
  CHECK(ub_main(IntervalPair(-0.6, 0.6)) >= 0.4);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-0.99, 0.99);
  for (int i = 0; i < 200; ++i) {
    double a = U(rng), b = U(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-6) continue;
    const IntervalPair p(a, b);
    CHECK_THAT(ub_main(p), WithinAbs(ub_main(p.reflected()), 1e-12));
    CHECK_THAT(ub_main(p.canonical()), WithinRel(ub_main_rewritten(p.canonical()), 1e-11));
  }
}

TEST_CASE("main bound is asymptotically sharp as lambda -> 0", "[bounds]") {
  for (double kv : {0.3, 0.6, 0.9}) {
    const IntervalPair ip = intervals_from_param(ModulusParam(elliptic::Modulus(kv), 1e-3));
    const double r = ub_main(ip) / capacity_exact(ip).cap;
    CHECK(r >= 1.0 - 1e-12);
    CHECK(r <= 1.0 + 1e-4);
  }
}

TEST_CASE("K/E sandwich, constants and crossovers", "[bounds][ke]") {
  const auto b = ke_bounds(elliptic::Modulus(0.5));
  const double K = elliptic::complete_K(elliptic::Modulus(0.5));
  const double E = elliptic::complete_E(elliptic::Modulus(0.5));
  CHECK(b.k_lower() < K);
  CHECK(K < b.k_upper());
  CHECK(b.E1 < E);
  CHECK(E < b.E2);
  const double eh = std::exp(std::numbers::pi / 2);
  CHECK_THAT(b.gamma, WithinRel((4 - std::numbers::pi / 4 * eh) / (eh - 4), 1e-15));
  CHECK_THAT(b.delta_exp, WithinRel(std::log(2.0) / std::log(std::numbers::pi / 2), 1e-15));

  for (int i = 1; i < 1000; ++i) {
    const auto kb = ke_bounds(elliptic::Modulus(i / 1000.0));
    CHECK(kb.k_lower() < kb.k_upper());
    CHECK(kb.E1 <= kb.E2);
  }
  // K1 beats K2 below the first crossover, K2 above it.
  const auto lo = ke_bounds(elliptic::Modulus(0.88));
  const auto hi = ke_bounds(elliptic::Modulus(0.89));
  CHECK(lo.K1 > lo.K2);
  CHECK(hi.K2 > hi.K1);
}

TEST_CASE("elementary upper bound", "[bounds]") {
  const IntervalPair ip(-0.1, 0.3);
  CHECK_THAT(ub_elementary(ip), WithinRel(0.54799982816367559271, 1e-13));
  CHECK(ub_elementary(IntervalPair(-0.6, 0.6)) >= 0.4);
  for (int i = 1; i < 400; ++i) {
    const elliptic::Modulus k(i / 400.0);
    CHECK(elliptic::complete_E(k) / elliptic::complete_K(k) - k.mc() >= 0.0);
  }
}

TEST_CASE("global bracketing on random pairs", "[bounds][property]") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  int done = 0;
  int tighter = 0;
  int canonical = 0;
  while (done < 10000) {
    double a = U(rng), b = U(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-9 || a < -1 + 1e-9 || b > 1 - 1e-9) continue;
    ++done;
    const IntervalPair ip(a, b);
    const double cap = capacity_exact(ip).cap;
    const BoundsReport r = bounds_report(ip);
    REQUIRE(r.max_lower() <= cap + 1e-12);
    REQUIRE(cap <= r.min_upper() + 1e-12);
    REQUIRE(r.ub_main <= r.ub_elementary + 1e-12);
    REQUIRE(r.reflected == !ip.is_canonical());
    if (ip.is_canonical()) {
      ++canonical;
      if (r.lb_elementary >= *lb_symmetric(ip) - 1e-13) ++tighter;
    }
  }
  CHECK(tighter == canonical);
}

TEST_CASE("bounds report on a reflected pair", "[bounds]") {
  const BoundsReport r = bounds_report(IntervalPair(-0.5, 0.2));
  CHECK(r.reflected);
  REQUIRE(r.lb_symmetric.has_value());
  CHECK_THAT(*r.lb_symmetric, WithinRel(0.5 * std::sqrt(0.75), 1e-15));
  CHECK(r.ub_unit == 0.5);
}
