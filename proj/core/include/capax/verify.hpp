#pragma once

// Grid verification of the auxiliary inequalities for Jacobi's elliptic and
// theta functions, and of the elementary K/E sandwich with its crossovers.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace capax::verify {

struct LemmaResult {
  std::string id;       // "lemma1" .. "lemma7"
  std::string title;
  bool pass = true;
  std::size_t checks = 0;
  double max_violation = 0.0;  // <= 0 on success for inequality checks
  std::string worst;           // offending point, when failed
};

struct VerifyOptions {
  std::size_t grid = 200;     // points along u (or lambda) per modulus
  std::size_t moduli = 20;    // moduli per grid
  std::size_t sandwich_points = 10000;
  // Flips the inequality of the named lemma; used to test the harness.
  std::optional<std::string> inject_fault;
};

struct VerifyReport {
  std::vector<LemmaResult> lemmas;
  // k where max{K1,K2}, then min{K3,K4,K5} switch branches.
  std::array<double, 3> crossovers{};

  bool all_pass() const;
};

// Slacks. Derivative-type claims are checked by finite differences with
// this absolute slack; closed forms to kClosedFormTolerance relative.
inline constexpr double kDifferenceSlack = 1e-9;
inline constexpr double kClosedFormTolerance = 1e-10;
// Non-strict value inequalities that hold with equality at a grid endpoint
// (u = 0, u = K, lambda = 1) are allowed this relative rounding slack.
inline constexpr double kRoundingSlack = 1e-13;

// Reference crossover moduli and the tolerance they are checked to.
inline constexpr std::array<double, 3> kExpectedCrossovers{0.888, 0.971, 0.990};
inline constexpr double kCrossoverTolerance = 0.002;

// Moduli k in (1e-6, 1 - 1e-6): half log-spaced from 1e-6 to 1/2, half with
// 1 - k log-spaced from 1/2 down to 1e-6.
std::vector<double> sandwich_moduli(std::size_t count);

// True when max{K1,K2} < K(k) < min{K3,K4,K5} and E1 < E(k) < E2 hold when
// evaluated in 100-digit binary floating point. The double-precision
// evaluation cannot resolve the gaps for small k.
bool ke_sandwich_holds_extended(double k);

// Bisection for the three crossover points.
std::array<double, 3> ke_crossovers();

VerifyReport run_lemma_suite(const VerifyOptions& options = {});

}  // namespace capax::verify
