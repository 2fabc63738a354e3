#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "snail/error.hpp"
#include "snail/extrema.hpp"
#include "snail/extremal.hpp"
#include "snail/function.hpp"
#include "snail/mapping.hpp"
#include "snail/numeric.hpp"
#include "snail/oracle.hpp"
#include "snail/params.hpp"

namespace snail {

struct Thresholds {
  double T0 = 0.0;
  double gamma0 = 0.0;
  bool in_B1 = false;
};

inline Thresholds thresholds(double alpha, double beta) {
  if (!(alpha > -1.0 && alpha <= beta && beta < 1.0)) {
    throw Error(ErrorCode::OutOfRange, "thresholds need -1 < alpha <= beta < 1");
  }
  Thresholds t;
  t.in_B1 = region_flags(alpha, beta).in_B1;
  if (t.in_B1) {
    const double ab = alpha * beta;
    const double lead = (1.0 - ab) *
                        (2.0 * std::sqrt(ab * (1.0 - alpha * alpha) * (1.0 - beta * beta)) +
                         (alpha + beta) * (1.0 - ab)) /
                        ((1.0 + ab) * (1.0 + ab));
    t.T0 = 1.0 - lead;
    t.gamma0 = 1.0 - 1.5 * lead;
  } else {
    const double prod = (1.0 + alpha) * (1.0 + beta);
    t.T0 = 1.0 - prod / 2.0;
    t.gamma0 = 1.0 - 3.0 * prod / 4.0;
  }
  return t;
}

enum class ClassKind { Starlike, Convex };

constexpr std::string_view to_string(ClassKind k) {
  return k == ClassKind::Starlike ? "Starlike" : "Convex";
}

struct ClassSpec {
  SnailParams params;
  ClassKind kind = ClassKind::Starlike;
};

struct Admissibility {
  bool admissible = false;
  std::optional<double> T0;
  std::string diagnostic;
};

inline Admissibility class_admissible(const ClassSpec& spec) {
  const SnailParams& p = spec.params;
  Admissibility out;
  if (!p.interior()) {
    out.diagnostic = "class needs -1 < alpha <= beta < 1";
    return out;
  }
  const Thresholds t = thresholds(p.alpha, p.beta);
  out.T0 = t.T0;
  out.admissible = p.gamma >= t.T0;
  if (out.admissible) {
    out.diagnostic = "gamma >= T0";
  } else if (p.alpha + p.beta == 0.0 && p.gamma == 0.5) {
    out.diagnostic = "gamma = 1/2 with beta = -alpha requires alpha^2 <= 0";
  } else {
    out.diagnostic = "gamma below T0; 1 + L0 < 0 so T(D) leaves the right half-plane";
  }
  return out;
}

inline void require_admissible(const ClassSpec& spec) {
  const Admissibility a = class_admissible(spec);
  if (!a.admissible) throw Error(ErrorCode::InadmissibleClass, a.diagnostic);
}

struct MembershipVerdict {
  bool member = false;
  double value = 0.0;
  double bound = 0.0;
  double L = 0.0;
  int item = 0;
};

inline MembershipVerdict membership(const ClassSpec& spec, const FunctionHandle& f) {
  require_admissible(spec);
  MembershipVerdict v;
  v.L = membership_L(spec.params);
  const double L = v.L;
  const bool star = spec.kind == ClassKind::Starlike;
  const auto& r = f.repr();
  if (const auto* m = std::get_if<fam::Monomial>(&r)) {
    if (m->n < 2) throw Error(ErrorCode::OutOfRange, "monomial degree must be at least 2");
    v.item = star ? 1 : 2;
    v.value = (star ? 1.0 : m->n) * std::abs(m->a);
    v.bound = L / (m->n - 1 + L);
  } else if (const auto* k = std::get_if<fam::KoebeLike>(&r); k && star) {
    v.item = 3;
    v.value = std::abs(k->A);
    v.bound = 2.0 / (2.0 + L);
  } else if (const auto* il = std::get_if<fam::InverseLinear>(&r); il && !star) {
    v.item = 4;
    v.value = std::abs(il->A);
    v.bound = 2.0 / (2.0 + L);
  } else if (const auto* e = std::get_if<fam::ExpLinear>(&r); e && star) {
    v.item = 5;
    v.value = std::abs(e->A);
    v.bound = L;
  } else if (const auto* e1 = std::get_if<fam::ExpMinusOne>(&r); e1 && !star) {
    v.item = 6;
    v.value = std::abs(e1->A);
    v.bound = L;
  } else {
    throw Error(ErrorCode::UnsupportedFamily,
                std::string(to_string(f.family())) + " has no closed-form criterion for " +
                    std::string(to_string(spec.kind)));
  }
  v.member = v.value <= v.bound;
  return v;
}

enum class Field { Raw, ZfPrimeOverF, OnePlusZfSecondOverFPrime };

constexpr std::string_view to_string(Field f) {
  switch (f) {
    case Field::Raw: return "raw";
    case Field::ZfPrimeOverF: return "zf'_over_f";
    case Field::OnePlusZfSecondOverFPrime: return "one_plus_zf''_over_f'";
  }
  return "unknown";
}

inline cplx field_value(const FunctionHandle& f, Field field, cplx z) {
  switch (field) {
    case Field::Raw:
      return f.value(z);
    case Field::ZfPrimeOverF: {
      if (z == cplx(0.0)) return 1.0;
      return z * f.derivative(z) / f.value(z);
    }
    case Field::OnePlusZfSecondOverFPrime:
      return 1.0 + z * f.second_derivative(z) / f.derivative(z);
  }
  return 0.0;
}

struct SubordinationOptions {
  std::vector<double> radii{0.5, 0.9, 0.99, 1.0};
  int boundary_points = 4096;
  int theta_samples = 2048;
  double tol = 1e-7;
};

struct SubordinationVerdict {
  bool accepted = false;
  double worst_margin = 0.0;
  int samples_used = 0;
  cplx worst_value;
  bool analytic_fallback = false;
};

namespace detail {

// Target boundary oracle: polyline winding plus exact refinement near the curve
class TargetRegion {
 public:
  TargetRegion(const SnailParams& p, int n_points)
      : p_(p), poly_(boundary_polyline(p, n_points)), index_(polyline_vertices(poly_, 1.0)) {}

  double margin(cplx w, double cap = std::numeric_limits<double>::infinity()) const {
    const double coarse = index_.margin(w, cap);
    if (std::abs(coarse) > 4.0 * index_.max_edge()) return coarse;
    // nearest segment, then golden refinement of the distance to the true curve
    const auto near = index_.nearest(w);
    const std::size_t n = poly_.points.size();
    const double h = kTwoPi / n;
    const double t0 = poly_.points[static_cast<std::size_t>(near.segment) % n].theta;
    auto dist = [&](double t) { return std::abs(boundary_point(p_, t).w() + 1.0 - w); };
    const GoldenResult g = golden_min(dist, t0 - h, t0 + 2.0 * h, 1e-13);
    const double bd = std::min(dist(t0), dist(t0 + h));
    const double d = std::min(bd, g.fx);
    const double side = implicit_residual(p_, w - 1.0).value;
    if (side == 0.0) return 0.0;
    return side > 0.0 ? d : -d;
  }

 private:
  SnailParams p_;
  Polyline poly_;
  RegionIndex index_;
};

}  // namespace detail

inline SubordinationVerdict subordination_check(const SnailParams& p, const FunctionHandle& f,
                                                Field field,
                                                const SubordinationOptions& opt = {}) {
  SubordinationVerdict out;
  out.worst_margin = std::numeric_limits<double>::infinity();
  std::optional<detail::TargetRegion> region;
  std::optional<ReExtrema> re;
  if (p.bounded()) {
    region.emplace(p, opt.boundary_points);
  } else {
    out.analytic_fallback = true;
    re = re_extrema(p);
  }
  auto margin_of = [&](cplx w) -> double {
    if (region) return region->margin(w, std::max(out.worst_margin, 0.0));
    if (re->L0) return w.real() - (1.0 + *re->L0);
    return (1.0 + *re->M0) - w.real();
  };
  auto consider = [&](cplx w) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
      throw Error(ErrorCode::SampleSingularity, "field is not finite at a sample");
    }
    const double m = margin_of(w);
    ++out.samples_used;
    if (m < out.worst_margin) {
      out.worst_margin = m;
      out.worst_value = w;
    }
  };
  if (const auto* g = std::get_if<fam::SampledGrid>(&f.repr())) {
    if (field != Field::Raw) {
      throw Error(ErrorCode::UnsupportedFamily, "sampled grids carry raw field values only");
    }
    for (const auto& ring : g->rings)
      for (const cplx& w : ring.values) consider(w);
  } else {
    for (double r : opt.radii) {
      if (r >= 1.0 && f.analytic_radius() <= 1.0) continue;
      for (int j = 0; j < opt.theta_samples; ++j) {
        const cplx z = std::polar(r, kTwoPi * j / opt.theta_samples);
        cplx w;
        try {
          w = field_value(f, field, z);
        } catch (const Error& e) {
          if (r >= 1.0 && (e.code() == ErrorCode::BoundaryPole ||
                           e.code() == ErrorCode::SampleSingularity)) {
            break;
          }
          if (e.code() == ErrorCode::BoundaryPole) {
            throw Error(ErrorCode::SampleSingularity, e.what());
          }
          throw;
        }
        consider(w);
      }
    }
  }
  out.accepted = out.samples_used > 0 && out.worst_margin >= -opt.tol;
  return out;
}

inline SubordinationVerdict subordination_check(const ClassSpec& spec, const FunctionHandle& f,
                                                const SubordinationOptions& opt = {}) {
  const Field field =
      spec.kind == ClassKind::Starlike ? Field::ZfPrimeOverF : Field::OnePlusZfSecondOverFPrime;
  return subordination_check(spec.params, f, field, opt);
}

inline FunctionHandle phi_transform(const SnailParams& p, FunctionPtr f) {
  const ReExtrema re = re_extrema(p);
  if (!re.L0 || *re.L0 == 0.0) {
    throw Error(ErrorCode::ConditionUnmet, "phi transform needs a finite nonzero L0");
  }
  return FunctionHandle(fam::PhiTransform{std::move(f), -1.0 / *re.L0});
}

struct StDecomposition {
  FunctionHandle h;
  FunctionHandle g;
  double q = 0.0;
  FunctionHandle structural;

  cplx reconstruct(cplx z) const {
    if (z == cplx(0.0)) return 0.0;
    return z * std::exp(q * std::log(h.value(z) / g.value(z)));
  }
};

inline StDecomposition st_decomposition(const SnailParams& p, FunctionPtr omega) {
  if (p.alpha == 0.0 || p.beta == 0.0 || p.alpha == p.beta) {
    throw Error(ErrorCode::ConditionUnmet, "decomposition needs alpha, beta nonzero and distinct");
  }
  if (std::abs(omega->value(0.0)) > 1e-14) throw Error(ErrorCode::NotSchwarz, "omega(0) != 0");
  for (int j = 0; j < 256; ++j) {
    if (std::abs(omega->value(std::polar(0.999, kTwoPi * j / 256))) >= 1.0) {
      throw Error(ErrorCode::NotSchwarz, "|omega| >= 1 on the sampling circle");
    }
  }
  return {FunctionHandle(fam::StarlikeFactor{omega, p.beta}),
          FunctionHandle(fam::StarlikeFactor{omega, p.alpha}), p.scale() / (p.beta - p.alpha),
          FunctionHandle(fam::StructuralST{p, omega})};
}

struct GrowthBounds {
  double f_min = 0.0;
  double f_max = 0.0;
  std::optional<double> fprime_min;
  std::optional<double> fprime_max;
  double arg_bound = 0.0;
  std::optional<double> covered_radius;
};

// max over |z| = r of |arg (Psi(z)/z)|
inline double quotient_arg_max(const SnailParams& p, double r) {
  const double a = p.alpha;
  const double b = p.beta;
  if (a == b) return p.scale() * r / (1.0 - a * a * r * r);
  const double x = r * (b - a) / (1.0 - r * r * a * b);
  return p.scale() / (b - a) * std::asin(std::min(1.0, x));
}

inline GrowthBounds growth_distortion_bounds(const ClassSpec& spec, double r) {
  require_admissible(spec);
  if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorCode::OutOfRange, "radius must lie in (0, 1]");
  const SnailParams& p = spec.params;
  const double a = p.alpha;
  const double b = p.beta;
  GrowthBounds g;
  g.arg_bound = quotient_arg_max(p, r);
  if (spec.kind == ClassKind::Starlike) {
    const ExtremalSpec es{p, 1, ExtremalFamily::Psi};
    g.f_max = psi_eval(es, r).real();
    g.f_min = -psi_eval(es, -r).real();
    const double dp = psi_derivative(es, r).real();
    const double dm = psi_derivative(es, -r).real();
    if ((a * b > 0.0 && a + b > 0.0) || a == 0.0) {
      g.fprime_min = dm;
      g.fprime_max = dp;
    } else if ((a * b > 0.0 && a + b < 0.0) || b == 0.0) {
      g.fprime_min = dp;
      g.fprime_max = dm;
    }
    g.covered_radius = -psi_eval(es, -1.0).real();
  } else {
    const ExtremalSpec es{p, 1, ExtremalFamily::K};
    g.f_max = k_eval(es, r).real();
    g.f_min = -k_eval(es, -r).real();
    g.fprime_min = k_derivative(es, -r).real();
    g.fprime_max = k_derivative(es, r).real();
    g.covered_radius = -k_eval(es, -1.0).real();
  }
  return g;
}

struct AnalyticBounds {
  std::optional<double> re_fz_lower;
  double re_root_lower = 0.0;
  double arg_bound = 0.0;
  double q = 0.0;
  std::string condition;

  double require_re_fz_lower() const {
    if (!re_fz_lower) throw Error(ErrorCode::ConditionUnmet, condition);
    return *re_fz_lower;
  }
};

inline AnalyticBounds analytic_bounds(const ClassSpec& spec, double r) {
  const SnailParams& p = spec.params;
  if (!(p.alpha < p.beta)) {
    throw Error(ErrorCode::DegenerateExponent, "bounds need alpha < beta");
  }
  if (!p.interior()) throw Error(ErrorCode::OutOfRange, "bounds need -1 < alpha < beta < 1");
  if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorCode::OutOfRange, "radius must lie in [0, 1]");
  const double a = p.alpha;
  const double b = p.beta;
  AnalyticBounds out;
  out.q = p.scale() / (b - a);
  out.re_root_lower = (1.0 + a) / (1.0 + b);
  out.arg_bound = out.q * std::asin(std::min(1.0, r * (b - a) / (1.0 - r * r * a * b)));
  const double T0 = thresholds(a, b).T0;
  const double mid = 1.0 - (b - a) / 2.0;
  if (T0 <= mid && mid <= p.gamma) {
    out.re_fz_lower = std::pow(out.re_root_lower, out.q);
    out.condition = "T0 <= 1 - (beta - alpha)/2 <= gamma holds";
  } else {
    out.condition = "T0 <= 1 - (beta - alpha)/2 <= gamma fails";
  }
  return out;
}

}  // namespace snail
