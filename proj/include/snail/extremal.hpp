#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "snail/error.hpp"
#include "snail/mapping.hpp"
#include "snail/numeric.hpp"
#include "snail/params.hpp"
#include "snail/quadrature.hpp"

namespace snail {

enum class ExtremalFamily { Psi, K };

// Structural: K' = Psi/z. AsPrinted: the reciprocal ratio under the same power.
enum class KForm { Structural, AsPrinted };

struct ExtremalSpec {
  SnailParams params;
  int n = 1;
  ExtremalFamily family = ExtremalFamily::Psi;
  KForm k_form = KForm::Structural;
};

namespace detail {

inline void check_spec(const ExtremalSpec& s) {
  if (s.n < 1) throw Error(ErrorCode::OutOfRange, "n must be positive");
}

// exponent of the ratio (1 - beta w)/(1 - alpha w)
inline double psi_exponent(const ExtremalSpec& s) {
  return s.params.scale() / (s.n * (s.params.alpha - s.params.beta));
}

// Q(z) = Psi(z)/z and s(z) = Q'/Q
struct QuotientJet {
  cplx q;
  cplx s;
  cplx ds;
};

inline QuotientJet psi_quotient(const ExtremalSpec& sp, cplx z, bool want_ds) {
  const double a = sp.params.alpha;
  const double b = sp.params.beta;
  const double k = sp.params.scale();
  const int n = sp.n;
  const cplx w = std::pow(z, n);
  const cplx fa = one_minus(a, w);
  const cplx fb = one_minus(b, w);
  if (std::abs(fa) < kPoleTol || std::abs(fb) < kPoleTol) {
    throw Error(ErrorCode::BoundaryPole, "extremal function hits a pole");
  }
  QuotientJet j;
  if (a == b) {
    j.q = std::exp(k * w / (static_cast<double>(n) * fa));
  } else {
    j.q = std::exp(psi_exponent(sp) * std::log(fb / fa));
  }
  const cplx zn1 = n == 1 ? cplx(1.0) : std::pow(z, n - 1);
  const cplx d = fa * fb;
  j.s = k * zn1 / d;
  if (want_ds) {
    const cplx dprime = static_cast<double>(n) * zn1 * (-(a + b) + 2.0 * a * b * w);
    const cplx zn2 = n == 1 ? cplx(0.0) : (n == 2 ? cplx(1.0) : std::pow(z, n - 2));
    j.ds = k * (static_cast<double>(n - 1) * zn2 * d - zn1 * dprime) / (d * d);
  }
  return j;
}

inline void check_closed_disk(cplx z) {
  if (!(std::abs(z) <= 1.0 + 1e-15)) {
    throw Error(ErrorCode::OutOfRange, "evaluation point outside the closed unit disk");
  }
}

}  // namespace detail

inline cplx psi_eval(const ExtremalSpec& spec, cplx z) {
  detail::check_spec(spec);
  detail::check_closed_disk(z);
  if (z == cplx(0.0)) return 0.0;
  return z * detail::psi_quotient(spec, z, false).q;
}

inline cplx psi_derivative(const ExtremalSpec& spec, cplx z) {
  detail::check_spec(spec);
  detail::check_closed_disk(z);
  const auto j = detail::psi_quotient(spec, z, false);
  return j.q * (1.0 + z * j.s);
}

inline cplx psi_second_derivative(const ExtremalSpec& spec, cplx z) {
  detail::check_spec(spec);
  detail::check_closed_disk(z);
  const auto j = detail::psi_quotient(spec, z, true);
  const cplx q1 = j.q * j.s;
  const cplx q2 = j.q * (j.s * j.s + j.ds);
  return 2.0 * q1 + z * q2;
}

// K' in the selected form
inline cplx k_derivative(const ExtremalSpec& spec, cplx z) {
  detail::check_spec(spec);
  detail::check_closed_disk(z);
  const auto j = detail::psi_quotient(spec, z, false);
  if (spec.k_form == KForm::AsPrinted && spec.params.alpha != spec.params.beta) return 1.0 / j.q;
  return j.q;
}

inline cplx k_second_derivative(const ExtremalSpec& spec, cplx z) {
  detail::check_spec(spec);
  detail::check_closed_disk(z);
  const auto j = detail::psi_quotient(spec, z, false);
  if (spec.k_form == KForm::AsPrinted && spec.params.alpha != spec.params.beta) {
    return -j.s / j.q;
  }
  return j.q * j.s;
}

inline cplx k_eval(const ExtremalSpec& spec, cplx z, double abs_tol = 1e-12) {
  detail::check_spec(spec);
  detail::check_closed_disk(z);
  if (std::abs(z) >= 1.0 && !spec.params.bounded()) {
    throw Error(ErrorCode::BoundaryPole, "K needs |z| < 1 when the map has a boundary pole");
  }
  return integrate_segment([&](cplx t) { return k_derivative(spec, t); }, z, abs_tol).value;
}

inline cplx extremal_eval(const ExtremalSpec& spec, cplx z) {
  return spec.family == ExtremalFamily::Psi ? psi_eval(spec, z) : k_eval(spec, z);
}

struct CoveredRadius {
  double minus_f_minus_one = 0.0;
  double limit_value = 0.0;
  double boundary_min = 0.0;
  double boundary_argmin = 0.0;
  bool discrepancy = false;
};

// -f(-r) extrapolated linearly in (1 - r) from two radii just inside the circle
inline double minus_f_minus_one_limit(const ExtremalSpec& spec) {
  const double h = 1e-6;
  const double f1 = -extremal_eval(spec, cplx(-(1.0 - h), 0.0)).real();
  const double f2 = -extremal_eval(spec, cplx(-(1.0 - 2.0 * h), 0.0)).real();
  return 2.0 * f1 - f2;
}

inline CoveredRadius covered_radius(const ExtremalSpec& spec, int n_samples = 0) {
  detail::check_spec(spec);
  if (!spec.params.bounded()) {
    throw Error(ErrorCode::Unbounded, "covered radius needs a bounded image domain");
  }
  const bool is_psi = spec.family == ExtremalFamily::Psi;
  if (n_samples <= 0) n_samples = is_psi ? 8192 : 720;
  CoveredRadius out;
  out.minus_f_minus_one = -extremal_eval(spec, cplx(-1.0, 0.0)).real();
  out.limit_value = minus_f_minus_one_limit(spec);
  auto modulus = [&](double t) { return std::abs(extremal_eval(spec, std::polar(1.0, t))); };
  int best = 0;
  double best_val = modulus(0.0);
  for (int i = 1; i < n_samples; ++i) {
    const double v = modulus(kTwoPi * i / n_samples);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double h = kTwoPi / n_samples;
  const double t0 = kTwoPi * best / n_samples;
  const GoldenResult g = golden_min(modulus, t0 - h, t0 + h, 1e-10);
  if (g.fx < best_val) {
    out.boundary_min = g.fx;
    out.boundary_argmin = wrap_angle(g.x);
  } else {
    out.boundary_min = best_val;
    out.boundary_argmin = t0;
  }
  out.discrepancy = out.minus_f_minus_one > out.boundary_min + 1e-9;
  return out;
}

struct BoundaryProfile {
  std::vector<double> critical_angles;
  std::vector<double> critical_values;
  std::vector<std::string> labels;
};

inline BoundaryProfile boundary_modulus_profile(const ExtremalSpec& spec) {
  detail::check_spec(spec);
  if (!spec.params.bounded()) {
    throw Error(ErrorCode::Unbounded, "profile needs a bounded image domain");
  }
  const double a = spec.params.alpha;
  const double b = spec.params.beta;
  const int n = spec.n;
  double even_val;
  double odd_val;
  if (a == b) {
    const double k = spec.params.scale();
    even_val = std::exp(k / (n * (1.0 - a)));
    odd_val = std::exp(-k / (n * (1.0 + a)));
  } else {
    const double p2 = detail::psi_exponent(spec);
    even_val = std::pow((1.0 - b) / (1.0 - a), p2);
    odd_val = std::pow((1.0 + b) / (1.0 + a), p2);
  }
  BoundaryProfile out;
  for (int k = 0; k < 2 * n; ++k) {
    const bool even = k % 2 == 0;
    const double v = even ? even_val : odd_val;
    const double other = even ? odd_val : even_val;
    out.critical_angles.push_back(k * kPi / n);
    out.critical_values.push_back(v);
    out.labels.push_back(v > other ? "max" : v < other ? "min" : "flat");
  }
  return out;
}

inline double boundary_arg_profile(const ExtremalSpec& spec, double t) {
  detail::check_spec(spec);
  const double a = spec.params.alpha;
  const double b = spec.params.beta;
  const int n = spec.n;
  const double snt = std::sin(n * t);
  const double cnt = std::cos(n * t);
  if (a == b) {
    return t + spec.params.scale() * snt / (n * (1.0 + a * a - 2.0 * a * cnt));
  }
  return t - detail::psi_exponent(spec) * std::atan((b - a) * snt / (1.0 + a * b - (a + b) * cnt));
}

struct TaylorHead {
  double c_n1 = 0.0;
  double c_2n1 = 0.0;
};

inline TaylorHead taylor_head(const ExtremalSpec& spec) {
  detail::check_spec(spec);
  const double g1 = 1.0 - spec.params.gamma;
  const int n = spec.n;
  return {2.0 * g1 / n, g1 * (2.0 * g1 + n * (spec.params.alpha + spec.params.beta)) / (n * n)};
}

}  // namespace snail
