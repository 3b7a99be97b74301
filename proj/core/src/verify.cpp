#include "capax/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "capax/bounds.hpp"
#include "capax/elliptic.hpp"

namespace capax::verify {
namespace {

using elliptic::Modulus;
using Extended = boost::multiprecision::cpp_bin_float_100;

constexpr double kPi = std::numbers::pi;

// Running worst case of a family of checks.
class Tracker {
 public:
  Tracker(std::string id, std::string title, bool flipped)
      : flipped_(flipped) {
    result_.id = std::move(id);
    result_.title = std::move(title);
    result_.max_violation = -std::numeric_limits<double>::infinity();
  }

  // A violation > allowed fails; the sign is flipped under fault injection.
  void record(double violation, double allowed, const std::string& where) {
    if (flipped_) violation = -violation;
    ++result_.checks;
    if (violation > result_.max_violation) {
      result_.max_violation = violation;
      if (violation > allowed) result_.worst = where;
    }
    if (violation > allowed) result_.pass = false;
  }

  void fail(const std::string& where) {
    result_.pass = false;
    if (result_.worst.empty()) result_.worst = where;
  }

  LemmaResult take() { return std::move(result_); }

 private:
  bool flipped_;
  LemmaResult result_;
};

std::vector<double> modulus_grid(std::size_t n) {
  std::vector<double> k(n);
  for (std::size_t i = 0; i < n; ++i)
    k[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  return k;
}

std::string at(double k, const char* name, double x) {
  std::ostringstream os;
  os.precision(17);
  os << "k=" << k << ", " << name << "=" << x;
  return os.str();
}

bool flips(const VerifyOptions& o, const char* id) {
  return o.inject_fault && *o.inject_fault == id;
}

double rel(double violation, double scale) {
  return violation / std::max(std::abs(scale), 1e-300);
}

LemmaResult lemma1(const VerifyOptions& o) {
  Tracker t("lemma1", "closed forms of Theta, H, H1, Theta1 and dn at K/2",
            false);
  const double fault = flips(o, "lemma1") ? 1e-6 : 0.0;
  for (double kv : modulus_grid(o.grid * o.moduli)) {
    const Modulus k(kv);
    const double K = elliptic::complete_K(k);
    const double kp = k.kp();
    const double one_minus_kp = k.m() / (1.0 + kp);
    const double common = 2.0 * K * K * std::sqrt(kp) / (kPi * kPi);
    const double theta = std::sqrt(std::sqrt(common * (1.0 + kp))) * (1.0 + fault);
    const double h = std::sqrt(std::sqrt(common * one_minus_kp));
    const auto q = elliptic::theta_quad(K / 2.0, k);
    const auto j = elliptic::jacobi_sncndn(K / 2.0, k);
    const double err = std::max({std::abs(rel(q.theta - theta, theta)),
                                 std::abs(rel(q.theta1 - theta, theta)),
                                 std::abs(rel(q.h - h, h)), std::abs(rel(q.h1 - h, h)),
                                 std::abs(rel(j.dn - std::sqrt(kp), std::sqrt(kp)))});
    t.record(err, kClosedFormTolerance, at(kv, "u", K / 2.0));
  }
  return t.take();
}

LemmaResult lemma2(const VerifyOptions& o) {
  Tracker t("lemma2", "dn^2(u) Theta^4(u) strictly increasing on [0, K/2]",
            flips(o, "lemma2"));
  for (double kv : modulus_grid(o.moduli)) {
    const Modulus k(kv);
    const double K = elliptic::complete_K(k);
    auto f = [&](double u) {
      const double dn = elliptic::jacobi_sncndn(u, k).dn;
      const double th = elliptic::theta_quad(u, k).theta;
      return dn * dn * th * th * th * th;
    };
    const double h = 1e-5 * K;
    double prev = f(0.0);
    for (std::size_t i = 1; i < o.grid; ++i) {
      const double u = K / 2.0 * static_cast<double>(i) / static_cast<double>(o.grid - 1);
      const double cur = f(u);
      // Strict increase: prev - cur must be negative, a tie fails.
      t.record(prev - cur, -std::numeric_limits<double>::denorm_min(),
               at(kv, "u", u));
      const double lo = u - h;
      const double slope = (cur - f(lo)) / h;
      t.record(-slope, kDifferenceSlack, at(kv, "u", u));
      prev = cur;
    }
  }
  return t.take();
}

LemmaResult lemma3(const VerifyOptions& o) {
  Tracker t("lemma3", "cn(u,k) increasing and dn(u,k) decreasing in k at fixed u",
            flips(o, "lemma3"));
  const double dk = 1e-4;
  for (double kv : modulus_grid(o.moduli)) {
    const Modulus k1(kv);
    const Modulus k2(kv + dk);
    const double K = elliptic::complete_K(k1);
    for (std::size_t i = 1; i <= o.grid; ++i) {
      const double u = K * static_cast<double>(i) / static_cast<double>(o.grid + 1);
      const auto a = elliptic::jacobi_sncndn(u, k1);
      const auto b = elliptic::jacobi_sncndn(u, k2);
      t.record(a.cn - b.cn, kDifferenceSlack, at(kv, "u", u));
      t.record(b.dn - a.dn, kDifferenceSlack, at(kv, "u", u));
    }
  }
  return t.take();
}

LemmaResult lemma4(const VerifyOptions& o, std::array<double, 3>& crossovers) {
  const bool flipped = flips(o, "lemma4");
  Tracker t("lemma4", "max{K1,K2} < K < min{K3,K4,K5}, E1 < E < E2, crossovers",
            false);
  for (double kv : sandwich_moduli(o.sandwich_points)) {
    const bool holds = ke_sandwich_holds_extended(kv) != flipped;
    if (!holds) t.fail(at(kv, "sandwich", 0.0));
    // In double the gaps can round to ties or one-ulp reversals for small k;
    // anything beyond rounding is a failure.
    const Modulus k(kv);
    const auto b = bounds::ke_bounds(k);
    const double K = elliptic::complete_K(k);
    const double E = elliptic::complete_E(k);
    const double v = std::max({rel(b.k_lower() - K, K), rel(K - b.k_upper(), K),
                               rel(b.E1 - E, E), rel(E - b.E2, E)});
    t.record(flipped ? -v : v, kRoundingSlack, at(kv, "double", 0.0));
  }
  crossovers = ke_crossovers();
  for (std::size_t i = 0; i < crossovers.size(); ++i) {
    const double off = std::abs(crossovers[i] - kExpectedCrossovers[i]);
    t.record(off - kCrossoverTolerance, 0.0, at(crossovers[i], "crossover", 0.0));
  }
  return t.take();
}

LemmaResult lemma5(const VerifyOptions& o) {
  Tracker t("lemma5", "1/dn <= cosh u <= 1/cn and its logarithmic form",
            flips(o, "lemma5"));
  for (double kv : modulus_grid(o.moduli)) {
    const Modulus k(kv);
    const double K = elliptic::complete_K(k);
    for (std::size_t i = 1; i <= o.grid; ++i) {
      const double u = 0.95 * K * static_cast<double>(i) / static_cast<double>(o.grid);
      const auto j = elliptic::jacobi_sncndn(u, k);
      const double ch = std::cosh(u);
      const std::string where = at(kv, "u", u);
      t.record(rel(1.0 / j.dn - ch, ch), kRoundingSlack, where);
      t.record(rel(ch - 1.0 / j.cn, ch), kRoundingSlack, where);
      t.record(rel(std::log((1.0 + kv * j.sn) / j.dn) - u, u), kRoundingSlack, where);
      t.record(rel(u - std::log((1.0 + j.sn) / j.cn), u), kRoundingSlack, where);
    }
  }
  return t.take();
}

LemmaResult lemma6(const VerifyOptions& o) {
  Tracker t("lemma6", "zn(u) <= (E - k'^2 K)(1 - u/K) on [0, K]", flips(o, "lemma6"));
  for (double kv : modulus_grid(o.moduli)) {
    const Modulus k(kv);
    const double K = elliptic::complete_K(k);
    const double E = elliptic::complete_E(k);
    const double slope = E - k.mc() * K;
    for (std::size_t i = 0; i < o.grid; ++i) {
      const double u = K * static_cast<double>(i) / static_cast<double>(o.grid - 1);
      const double bound = slope * (1.0 - u / K);
      t.record(rel(elliptic::jacobi_zn(u, k) - bound, slope), kRoundingSlack,
               at(kv, "u", u));
    }
  }
  return t.take();
}

LemmaResult lemma7(const VerifyOptions& o) {
  Tracker t("lemma7",
            "Theta(0)/Theta(lambda K) <= sqrt(k') exp((E/K - k'^2)(1-lambda)^2 K^2 / 2)",
            flips(o, "lemma7"));
  for (double kv : modulus_grid(o.moduli)) {
    const Modulus k(kv);
    const double K = elliptic::complete_K(k);
    const double E = elliptic::complete_E(k);
    const double th0 = elliptic::theta_quad(0.0, k).theta;
    for (std::size_t i = 0; i < o.grid; ++i) {
      const double lam = static_cast<double>(i) / static_cast<double>(o.grid - 1);
      const double lhs = th0 / elliptic::theta_quad(lam * K, k).theta;
      const double s = (1.0 - lam) * K;
      const double rhs = std::sqrt(k.kp()) * std::exp(0.5 * (E / K - k.mc()) * s * s);
      t.record(rel(lhs - rhs, rhs), kRoundingSlack, at(kv, "lambda", lam));
    }
  }
  return t.take();
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  if (flo * f(hi) > 0.0) return std::numeric_limits<double>::quiet_NaN();
  for (int i = 0; i < 100 && hi - lo > 1e-15; ++i) {
    const double mid = (lo + hi) / 2.0;
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2.0;
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(lemmas.begin(), lemmas.end(),
                     [](const LemmaResult& r) { return r.pass; });
}

std::vector<double> sandwich_moduli(std::size_t count) {
  std::vector<double> ks;
  ks.reserve(count);
  const std::size_t low = count / 2;
  const std::size_t high = count - low;
  const double lmin = std::log(1e-6);
  const double lmax = std::log(0.5);
  for (std::size_t i = 0; i < low; ++i)
    ks.push_back(std::exp(lmin + (lmax - lmin) * static_cast<double>(i) /
                                     static_cast<double>(std::max<std::size_t>(low - 1, 1))));
  for (std::size_t i = 0; i < high; ++i) {
    const double gap = std::exp(lmax + (lmin - lmax) * static_cast<double>(i + 1) /
                                           static_cast<double>(high));
    ks.push_back(1.0 - gap);
  }
  return ks;
}

bool ke_sandwich_holds_extended(double k) {
  // Gaps clearly wider than double rounding are decided in double.
  {
    const Modulus km(k);
    const auto b = bounds::ke_bounds(km);
    const double K = elliptic::complete_K(km);
    const double E = elliptic::complete_E(km);
    const double margin = 1e-12;
    if (K - b.k_lower() > margin * K && b.k_upper() - K > margin * K &&
        E - b.E1 > margin * E && b.E2 - E > margin * E)
      return true;
  }
  const Extended kx = k;
  const Extended mc = 1 - kx * kx;
  const Extended kp = sqrt(mc);
  const auto ke = elliptic::agm_complete(kx, kp);
  const auto b = bounds::ke_bounds_generic(kx, kp, mc);
  return b.k_lower() < ke.K && ke.K < b.k_upper() && b.E1 < ke.E && ke.E < b.E2;
}

std::array<double, 3> ke_crossovers() {
  auto diff = [](auto pick) {
    return [pick](double k) { return pick(bounds::ke_bounds(Modulus(k))); };
  };
  return {
      bisect(diff([](const bounds::KEBounds& b) { return b.K1 - b.K2; }), 0.85, 0.92),
      bisect(diff([](const bounds::KEBounds& b) { return b.K3 - b.K4; }), 0.95, 0.98),
      bisect(diff([](const bounds::KEBounds& b) { return b.K4 - b.K5; }), 0.985, 0.995),
  };
}

VerifyReport run_lemma_suite(const VerifyOptions& options) {
  if (options.grid < 2 || options.moduli < 1)
    throw std::invalid_argument("verify grid needs at least 2 points and 1 modulus");
  VerifyReport r;
  r.lemmas.push_back(lemma1(options));
  r.lemmas.push_back(lemma2(options));
  r.lemmas.push_back(lemma3(options));
  r.lemmas.push_back(lemma4(options, r.crossovers));
  r.lemmas.push_back(lemma5(options));
  r.lemmas.push_back(lemma6(options));
  r.lemmas.push_back(lemma7(options));
  return r;
}

}  // namespace capax::verify
