#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace snail {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 2 - sqrt(3): Pascal snail convexity threshold
inline const double kSnailThreshold = 2.0 - std::sqrt(3.0);
// sqrt(3 - 2 sqrt 2): Booth lemniscate convexity threshold
inline const double kBoothThreshold = std::sqrt(3.0 - 2.0 * std::sqrt(2.0));

struct GoldenResult {
  double x;
  double fx;
};

// Minimizes f on [a, b]; assumes unimodal on the bracket.
inline GoldenResult golden_min(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12, int max_iter = 200) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  double x = 0.5 * (a + b);
  double fx = f(x);
  if (fc < fx) { x = c; fx = fc; }
  if (fd < fx) { x = d; fx = fd; }
  return {x, fx};
}

inline double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t;
}

}  // namespace snail
