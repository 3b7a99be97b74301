#pragma once

#include <cmath>
#include <utility>

namespace capax {

struct Maximum {
  double x;
  double value;
};

// Golden-section search for the maximum of a unimodal f on [a, b]; stops when
// the bracket is narrower than tol.
template <class F>
Maximum golden_section_maximize(F&& f, double a, double b, double tol,
                                int max_iterations = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iterations && (b - a) > tol; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = (a + b) / 2.0;
  return {x, f(x)};
}

}  // namespace capax
