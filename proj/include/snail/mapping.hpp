#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "snail/error.hpp"
#include "snail/numeric.hpp"
#include "snail/params.hpp"

namespace snail {

inline constexpr double kPoleTol = 1e-14;

namespace detail {

// 1 - c*z evaluated without cancellation near z = 1/c
inline cplx one_minus(double c, cplx z) {
  const double x = z.real();
  const double y = z.imag();
  double re;
  if (c * x > 0.0) {
    const double r = std::hypot(x, y);
    const double ac = std::abs(c);
    re = (1.0 - ac * r) + ac * (y * y) / (r + std::abs(x));
  } else {
    re = 1.0 - c * x;
  }
  return {re, -c * y};
}

// 1 - c*r*e^{i theta} with the half-angle split chosen by the sign of c
inline cplx one_minus_polar(double c, double r, double theta) {
  const double cr = c * r;
  double re;
  if (cr >= 0.0) {
    const double s = std::sin(0.5 * theta);
    re = (1.0 - cr) + 2.0 * cr * s * s;
  } else {
    const double co = std::cos(0.5 * theta);
    re = (1.0 + cr) - 2.0 * cr * co * co;
  }
  return {re, -cr * std::sin(theta)};
}

// |1 - c e^{i theta}|^2
inline double boundary_factor_sq(double c, double theta) {
  if (c >= 0.0) {
    const double s = std::sin(0.5 * theta);
    return (1.0 - c) * (1.0 - c) + 4.0 * c * s * s;
  }
  const double co = std::cos(0.5 * theta);
  return (1.0 + c) * (1.0 + c) - 4.0 * c * co * co;
}

inline void check_disk(cplx z) {
  if (!(std::abs(z) <= 1.0 + 1e-15)) {
    throw Error(ErrorCode::OutOfRange, "evaluation point outside the closed unit disk");
  }
}

}  // namespace detail

inline cplx eval_L(const SnailParams& p, cplx z) {
  detail::check_disk(z);
  const cplx fa = detail::one_minus(p.alpha, z);
  const cplx fb = detail::one_minus(p.beta, z);
  if (std::abs(fa) < kPoleTol || std::abs(fb) < kPoleTol) {
    throw Error(ErrorCode::BoundaryPole, "evaluation at a pole of the map");
  }
  return p.scale() * z / (fa * fb);
}

inline cplx eval_L_polar(const SnailParams& p, double r, double theta) {
  if (!(r >= 0.0 && r <= 1.0 + 1e-15)) {
    throw Error(ErrorCode::OutOfRange, "radius outside [0, 1]");
  }
  const cplx fa = detail::one_minus_polar(p.alpha, r, theta);
  const cplx fb = detail::one_minus_polar(p.beta, r, theta);
  if (std::abs(fa) < kPoleTol || std::abs(fb) < kPoleTol) {
    throw Error(ErrorCode::BoundaryPole, "evaluation at a pole of the map");
  }
  return p.scale() * std::polar(r, theta) / (fa * fb);
}

inline cplx eval_T(const SnailParams& p, cplx z) { return 1.0 + eval_L(p, z); }

inline cplx eval_L_derivative(const SnailParams& p, cplx z) {
  const cplx d = detail::one_minus(p.alpha, z) * detail::one_minus(p.beta, z);
  if (std::abs(d) < kPoleTol) throw Error(ErrorCode::BoundaryPole, "derivative at a pole");
  return p.scale() * (1.0 - p.alpha * p.beta * z * z) / (d * d);
}

inline cplx eval_L_second_derivative(const SnailParams& p, cplx z) {
  const double a = p.alpha;
  const double b = p.beta;
  const cplx d = detail::one_minus(a, z) * detail::one_minus(b, z);
  if (std::abs(d) < kPoleTol) throw Error(ErrorCode::BoundaryPole, "derivative at a pole");
  const cplx dp = -(a + b) + 2.0 * a * b * z;
  return p.scale() * (-2.0 * a * b * z * d - 2.0 * (1.0 - a * b * z * z) * dp) / (d * d * d);
}

inline double taylor_coefficient(const SnailParams& p, int n) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "coefficient index must be positive");
  if (p.alpha == p.beta) {
    return p.scale() * n * std::pow(p.alpha, n - 1);
  }
  // sum_{k<n} alpha^k beta^{n-1-k} by a Horner sweep
  double h = 1.0;
  double apow = 1.0;
  for (int m = 1; m < n; ++m) {
    apow *= p.alpha;
    h = p.beta * h + apow;
  }
  return p.scale() * h;
}

struct BoundaryPoint {
  double theta = 0.0;
  double u = 0.0;
  double v = 0.0;

  cplx w() const { return {u, v}; }
};

inline BoundaryPoint boundary_point(const SnailParams& p, double theta) {
  const double a = p.alpha;
  const double b = p.beta;
  const double da = detail::boundary_factor_sq(a, theta);
  const double db = detail::boundary_factor_sq(b, theta);
  if (da < kPoleTol * kPoleTol || db < kPoleTol * kPoleTol) {
    throw Error(ErrorCode::BoundaryPole, "boundary angle hits the pole");
  }
  double num;
  if (std::cos(theta) >= 0.0) {
    const double s = std::sin(0.5 * theta);
    num = (1.0 - a) * (1.0 - b) - 2.0 * (1.0 + a * b) * s * s;
  } else {
    const double co = std::cos(0.5 * theta);
    num = 2.0 * (1.0 + a * b) * co * co - (1.0 + a) * (1.0 + b);
  }
  const double den = da * db;
  const double k = p.scale();
  return {theta, k * num / den, k * (1.0 - a * b) * std::sin(theta) / den};
}

struct ImplicitResidual {
  double value = 0.0;
  double normalization = 1.0;
};

inline ImplicitResidual implicit_residual(const SnailParams& p, cplx w) {
  const double a = p.alpha;
  const double b = p.beta;
  const double k = p.scale();
  const double u = w.real();
  const double v = w.imag();
  const double rho2 = u * u + v * v;
  const double t1 = (k * u + (a + b) * rho2) / (1.0 + a * b);
  const double t2 = k * v / (1.0 - a * b);
  const double lhs = t1 * t1 + t2 * t2;
  const double rhs = rho2 * rho2;
  const double norm = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return {(lhs - rhs) / norm, norm};
}

// Polar radius of the alpha = beta snail; the sign of alpha is folded in
inline double polar_radius(double alpha, double gamma, double phi) {
  if (!(alpha > -1.0 && alpha < 1.0) || alpha == 0.0) {
    throw Error(ErrorCode::OutOfRange, "polar form needs alpha in (-1, 1) without 0");
  }
  const double m = std::abs(alpha);
  const double den = (1.0 - alpha * alpha) * (1.0 - alpha * alpha);
  return 2.0 * (1.0 - gamma) * (m / alpha) * (1.0 + alpha * alpha + 2.0 * m * std::cos(phi)) /
         den;
}

struct Polyline {
  std::vector<BoundaryPoint> points;
  bool open = false;
};

// Uniform theta grid. A pole on the circle is skipped and the curve is
// reported open, starting just after the pole.
inline Polyline boundary_polyline(const SnailParams& p, int n_samples) {
  if (n_samples < 3) throw Error(ErrorCode::OutOfRange, "need at least 3 samples");
  Polyline out;
  out.open = !p.bounded();
  const double pole = p.beta == 1.0 ? 0.0 : kPi;
  int start = 0;
  if (out.open && pole != 0.0) {
    start = static_cast<int>(std::floor(pole * n_samples / kTwoPi)) + 1;
  }
  out.points.reserve(n_samples);
  for (int j = 0; j < n_samples; ++j) {
    const int k = (start + j) % n_samples;
    const double theta = kTwoPi * k / n_samples;
    if (out.open) {
      const double da = detail::boundary_factor_sq(p.alpha, theta);
      const double db = detail::boundary_factor_sq(p.beta, theta);
      if (da < kPoleTol * kPoleTol || db < kPoleTol * kPoleTol) continue;
    }
    out.points.push_back(boundary_point(p, theta));
  }
  return out;
}

}  // namespace snail
