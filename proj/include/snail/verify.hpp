#pragma once

#include <gsl/gsl_errno.h>
#include <gsl/gsl_roots.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "snail/classes.hpp"
#include "snail/constants.hpp"
#include "snail/oracle.hpp"

namespace snail {

struct CheckRecord {
  std::string check_id;
  int criterion = 0;
  std::array<double, 3> params{};
  double formula_value = 0.0;
  double oracle_value = 0.0;
  double abs_gap = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct VerificationReport {
  std::vector<CheckRecord> records;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> flagged_discrepancies;

  void add(CheckRecord r) {
    r.pass = r.pass && std::isfinite(r.abs_gap) && r.abs_gap <= r.tolerance;
    (r.pass ? passed : failed) += 1;
    records.push_back(std::move(r));
  }

  // passed/failed counts restricted to one criterion
  std::pair<int, int> tally(int criterion) const {
    int p = 0, f = 0;
    for (const auto& r : records) {
      if (r.criterion != criterion) continue;
      (r.pass ? p : f) += 1;
    }
    return {p, f};
  }
};

struct VerifyGrid {
  int residual_triples = 0;
  int residual_samples = 0;
  bool re_grid = false;
  int re_samples = 0;
  std::vector<double> modulus_radii;
  int modulus_samples = 0;
  int taylor_triples = 0;
  std::vector<int> taylor_orders;
  int alternation_triples = 0;
  std::vector<int> alternation_orders;
  int identity_points = 0;
  int identity_k_points = 0;
  int covered_triples = 0;
  bool sharpness = false;
  std::vector<int> sharpness_orders;
  int two_inequality_triples = 0;
  bool thresholds = false;
  int power_samples = 0;
  // thinning factor for the Re-extrema grid (1 keeps every pair)
  int re_stride = 1;

  static VerifyGrid standard() {
    VerifyGrid g;
    g.residual_triples = 64;
    g.residual_samples = 10000;
    g.re_grid = true;
    g.re_samples = 1000000;
    g.modulus_radii = {0.3, 0.7, 0.95};
    g.modulus_samples = 20000;
    g.taylor_triples = 20;
    g.taylor_orders = {1, 2, 3, 5};
    g.alternation_triples = 12;
    g.alternation_orders = {1, 2, 3, 5};
    g.identity_points = 1000;
    g.identity_k_points = 1000;
    g.covered_triples = 12;
    g.sharpness = true;
    g.sharpness_orders = {2, 3, 5};
    g.two_inequality_triples = 16;
    g.thresholds = true;
    g.power_samples = 10000;
    return g;
  }

  static VerifyGrid quick() {
    VerifyGrid g;
    g.residual_triples = 16;
    g.residual_samples = 500;
    g.re_grid = true;
    g.re_samples = 20000;
    g.re_stride = 8;
    g.modulus_radii = {0.3, 0.95};
    g.modulus_samples = 2000;
    g.taylor_triples = 3;
    g.taylor_orders = {1, 3};
    g.alternation_triples = 2;
    g.alternation_orders = {2};
    g.identity_points = 50;
    g.identity_k_points = 10;
    g.covered_triples = 2;
    g.sharpness = false;
    g.two_inequality_triples = 2;
    g.thresholds = true;
    g.power_samples = 1000;
    return g;
  }

  static VerifyGrid empty() { return {}; }
};

namespace verify_detail {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

inline std::array<double, 3> triple(const SnailParams& p) { return {p.alpha, p.beta, p.gamma}; }

inline std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// -1 < alpha <= beta < 1
inline SnailParams random_interior(Rng& rng, double lim = 0.9) {
  double a = uniform(rng, -lim, lim);
  double b = uniform(rng, -lim, lim);
  const double g = uniform(rng, 0.0, 0.95);
  return validate_params(std::min(a, b), std::max(a, b), g);
}

inline std::vector<SnailParams> residual_triples(Rng& rng, int count) {
  // one per kind first, then random draws cycling through the kinds
  std::vector<SnailParams> out;
  auto g = [&] { return uniform(rng, 0.0, 0.95); };
  for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
    const double a = uniform(rng, 0.05, 0.9);
    const double b = uniform(rng, 0.05, 0.9);
    switch (i % 9) {
      case 0: out.push_back(validate_params(0.0, 0.0, g())); break;
      case 1: out.push_back(validate_params(i % 2 ? -a : 0.0, i % 2 ? 0.0 : a, g())); break;
      case 2: out.push_back(validate_params(i % 2 ? 0.0 : -1.0, i % 2 ? 1.0 : 0.0, g())); break;
      case 3: out.push_back(validate_params(i % 2 ? a : -a, i % 2 ? a : -a, g())); break;
      case 4: out.push_back(validate_params(-a, a, g())); break;
      case 5: out.push_back(validate_params(i % 2 ? -a : a, 1.0, g())); break;
      case 6: out.push_back(validate_params(-1.0, i % 2 ? -b : b, g())); break;
      case 7: out.push_back(validate_params(-a, b, g())); break;
      default: out.push_back(random_interior(rng, 0.97)); break;
    }
  }
  return out;
}

inline std::vector<std::pair<double, double>> re_pairs(Rng& rng) {
  std::vector<std::pair<double, double>> out;
  auto push = [&](double a, double b) {
    if (a >= -1.0 && a <= b && b <= 1.0 && !(a == -1.0 && b == 1.0)) out.emplace_back(a, b);
  };
  constexpr int kAlphas = 38;
  for (int i = 0; i < kAlphas; ++i) {
    const double a = -0.95 + 1.9 * (i + 0.5) / kAlphas;
    push(a, a);
    push(a, -a);
    push(a, 1.0);
    if (a > 0.0) {
      const double b1 = beta1_of(a);
      push(a, b1 - 1e-3);
      push(a, b1 + 1e-3);
      push(a, 0.5 * (b1 + 1.0));
    } else {
      const double b2 = beta2_of(a);
      push(a, b2 - 1e-3);
      push(a, b2 + 1e-3);
      push(a, 0.5 * (a + b2));
    }
    push(a, uniform(rng, a, 1.0));
  }
  for (double b : {-0.9, -0.6, -0.3, 0.0, 0.2, 0.45, 0.7, 0.9}) push(-1.0, b);
  return out;
}

inline std::vector<SnailParams> re_grid(Rng& rng, int stride) {
  std::vector<SnailParams> out;
  const auto pairs = re_pairs(rng);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double g = uniform(rng, 0.0, 0.95);
    if (i % static_cast<std::size_t>(std::max(1, stride)) != 0) continue;
    out.push_back(validate_params(pairs[i].first, pairs[i].second, g));
  }
  return out;
}

inline double brent_root(const std::function<double(double)>& f, double lo, double hi) {
  struct Ctx {
    const std::function<double(double)>* f;
  } ctx{&f};
  gsl_function F;
  F.function = [](double x, void* p) { return (*static_cast<Ctx*>(p)->f)(x); };
  F.params = &ctx;
  detail::gsl_quiet();
  gsl_root_fsolver* s = gsl_root_fsolver_alloc(gsl_root_fsolver_brent);
  gsl_root_fsolver_set(s, &F, lo, hi);
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    gsl_root_fsolver_iterate(s);
    x = gsl_root_fsolver_root(s);
    const double a = gsl_root_fsolver_x_lower(s);
    const double b = gsl_root_fsolver_x_upper(s);
    if (gsl_root_test_interval(a, b, 1e-15, 0.0) == GSL_SUCCESS) break;
  }
  gsl_root_fsolver_free(s);
  return x;
}

inline bool accepted_all(const ClassSpec& cs, int n, double mod, const std::vector<double>& signs,
                         double& worst) {
  bool ok = true;
  worst = std::numeric_limits<double>::infinity();
  for (double s : signs) {
    const auto v = subordination_check(cs, FunctionHandle::monomial(n, s * mod));
    worst = std::min(worst, v.worst_margin);
    ok = ok && v.accepted;
  }
  return ok;
}

}  // namespace verify_detail

// 1: implicit boundary equation
inline void verify_residual(VerificationReport& rep, const VerifyGrid& g, verify_detail::Rng& rng) {
  if (g.residual_triples <= 0) return;
  for (const SnailParams& p : verify_detail::residual_triples(rng, g.residual_triples)) {
    double worst = 0.0;
    for (int j = 0; j < g.residual_samples; ++j) {
      const double t = kTwoPi * (j + 0.5) / g.residual_samples;
      try {
        const BoundaryPoint bp = boundary_point(p, t);
        worst = std::max(worst, std::abs(implicit_residual(p, bp.w()).value));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BoundaryPole) throw;
      }
    }
    rep.add({"residual", 1, verify_detail::triple(p), 0.0, worst, worst, 1e-9, true,
             std::string(to_string(classify_domain(p).kind))});
  }
}

// 2: extrema of the real part on the unit circle
inline void verify_re_extrema(VerificationReport& rep, const VerifyGrid& g, verify_detail::Rng& rng,
                              const std::vector<SnailParams>& grid) {
  if (!g.re_grid) return;
  (void)rng;
  for (const SnailParams& p : grid) {
    const ReExtrema re = re_extrema(p);
    const CircleExtremum ex = oracle_extremum_on_circle(FunctionHandle::map_L(p),
                                                        Functional::RealPart, 1.0, g.re_samples);
    if (re.L0) {
      rep.add({"re_min", 2, verify_detail::triple(p), *re.L0, ex.min, std::abs(*re.L0 - ex.min),
               1e-6, true, re.branch});
    }
    if (re.M0) {
      rep.add({"re_max", 2, verify_detail::triple(p), *re.M0, ex.max, std::abs(*re.M0 - ex.max),
               1e-6, true, re.branch});
    }
  }
}

// 3: modulus extrema on |z| = r
inline void verify_modulus(VerificationReport& rep, const VerifyGrid& g,
                           const std::vector<SnailParams>& grid) {
  if (g.modulus_radii.empty()) return;
  std::vector<SnailParams> all = grid;
  all.push_back(validate_params(-0.5, 0.25, 0.0));
  for (const SnailParams& p : all) {
    for (double r : g.modulus_radii) {
      const ModulusExtrema m = modulus_extrema(p, r);
      const CircleExtremum ex = oracle_extremum_on_circle(FunctionHandle::map_L(p),
                                                          Functional::Modulus, r,
                                                          g.modulus_samples);
      const std::string note = m.branch + verify_detail::fmt(", r=%.2f", r);
      rep.add({"mod_min", 3, verify_detail::triple(p), m.min_mod, ex.min,
               std::abs(m.min_mod - ex.min), 1e-8, true, note});
      rep.add({"mod_max", 3, verify_detail::triple(p), m.max_mod, ex.max,
               std::abs(m.max_mod - ex.max), 1e-8, true, note});
    }
  }
}

// 4: leading coefficients of the starlike extremal function
inline void verify_taylor_heads(VerificationReport& rep, const VerifyGrid& g,
                                verify_detail::Rng& rng) {
  for (int i = 0; i < g.taylor_triples; ++i) {
    const SnailParams p = verify_detail::random_interior(rng);
    for (int n : g.taylor_orders) {
      const ExtremalSpec spec{p, n, ExtremalFamily::Psi};
      const TaylorHead head = taylor_head(spec);
      const TaylorExtraction tx = oracle_taylor(FunctionHandle::psi(p, n), 2 * n + 1, 0.5);
      const std::string note = verify_detail::fmt("n=%.0f", n);
      const cplx o1 = tx.coefficients[n + 1];
      const cplx o2 = tx.coefficients[2 * n + 1];
      rep.add({"taylor_c_n+1", 4, verify_detail::triple(p), head.c_n1, o1.real(),
               std::abs(o1 - head.c_n1), 1e-8, true, note});
      rep.add({"taylor_c_2n+1", 4, verify_detail::triple(p), head.c_2n1, o2.real(),
               std::abs(o2 - head.c_2n1), 1e-8, true, note});
    }
  }
}

// 5: alternation of |Psi| on the unit circle
inline void verify_alternation(VerificationReport& rep, const VerifyGrid& g,
                               verify_detail::Rng& rng) {
  for (int i = 0; i < g.alternation_triples; ++i) {
    const SnailParams p = verify_detail::random_interior(rng, 0.85);
    for (int n : g.alternation_orders) {
      const ExtremalSpec spec{p, n, ExtremalFamily::Psi};
      const BoundaryProfile prof = boundary_modulus_profile(spec);
      // d/dt log|Psi(e^{it})| = -Im(z Psi'/Psi)
      auto dlog = [&](double t) {
        const cplx z = std::polar(1.0, t);
        return -(z * psi_derivative(spec, z) / psi_eval(spec, z)).imag();
      };
      const int grid = 512 * n;
      const double h = kTwoPi / grid;
      // offset keeps the exact critical angles away from the scan nodes
      const double t0 = 0.37 * h;
      std::vector<double> roots;
      double prev = dlog(t0);
      for (int j = 1; j <= grid; ++j) {
        const double t = t0 + j * h;
        const double cur = dlog(t);
        if ((prev < 0.0) != (cur < 0.0)) {
          roots.push_back(wrap_angle(verify_detail::brent_root(dlog, t - h, t)));
        }
        prev = cur;
      }
      std::sort(roots.begin(), roots.end());
      const std::string note = verify_detail::fmt("n=%.0f", n);
      const int expected = 2 * n;
      const int found = static_cast<int>(roots.size());
      rep.add({"alternation_count", 5, verify_detail::triple(p), static_cast<double>(expected),
               static_cast<double>(found), std::abs(static_cast<double>(found - expected)), 0.0, true, note});
      if (found != expected) continue;
      double ang_gap = 0.0;
      double val_gap = 0.0;
      for (int k = 0; k < expected; ++k) {
        const double ta = prof.critical_angles[k];
        // closest located root
        double best = kTwoPi;
        double at = roots[0];
        for (double r : roots) {
          const double d = std::abs(wrap_angle(r - ta + kPi) - kPi);
          if (d < best) {
            best = d;
            at = r;
          }
        }
        ang_gap = std::max(ang_gap, best);
        const double v = std::abs(psi_eval(spec, std::polar(1.0, at)));
        val_gap = std::max(val_gap, std::abs(v - prof.critical_values[k]));
      }
      rep.add({"alternation_angles", 5, verify_detail::triple(p), 0.0, ang_gap, ang_gap, 1e-10,
               true, note});
      rep.add({"alternation_values", 5, verify_detail::triple(p), 0.0, val_gap, val_gap, 1e-9,
               true, note});
    }
  }
}

// 6: zPsi'/Psi = T(z^n) and 1 + zK''/K' = T(z^n)
inline void verify_identities(VerificationReport& rep, const VerifyGrid& g,
                              verify_detail::Rng& rng) {
  if (g.identity_points <= 0) return;
  const std::vector<std::pair<SnailParams, int>> specs = {
      {validate_params(-0.4, 0.6, 0.3), 1},
      {validate_params(0.3, 0.3, 0.5), 2},
      {validate_params(-0.7, -0.2, 0.1), 3},
  };
  for (const auto& [p, n] : specs) {
    const ExtremalSpec ps{p, n, ExtremalFamily::Psi};
    const ExtremalSpec ks{p, n, ExtremalFamily::K, KForm::Structural};
    auto psi = [&](cplx z) { return psi_eval(ps, z); };
    auto kf = [&](cplx z) { return k_eval(ks, z, 1e-12); };
    double gap_psi = 0.0;
    double gap_k = 0.0;
    const int pts = std::max(g.identity_points, g.identity_k_points);
    for (int j = 0; j < pts; ++j) {
      const double r = 0.9 * std::sqrt(verify_detail::uniform(rng, 0.01, 1.0));
      const double t = verify_detail::uniform(rng, 0.0, kTwoPi);
      const cplx z = std::polar(r, t);
      const cplx target = eval_T(p, std::pow(z, n));
      const double scale = std::max(1.0, std::abs(target));
      if (j < g.identity_points) {
        const cplx d1 = cauchy_derivative(psi, z, 1);
        gap_psi = std::max(gap_psi, std::abs(z * d1 / psi(z) - target) / scale);
      }
      if (j < g.identity_k_points) {
        const cplx k1 = cauchy_derivative(kf, z, 1);
        const cplx k2 = cauchy_derivative(kf, z, 2);
        gap_k = std::max(gap_k, std::abs(1.0 + z * k2 / k1 - target) / scale);
      }
    }
    const std::string note = verify_detail::fmt("n=%.0f", n);
    if (g.identity_points > 0) {
      rep.add({"identity_psi", 6, verify_detail::triple(p), 0.0, gap_psi, gap_psi, 1e-11, true,
               note});
    }
    if (g.identity_k_points > 0) {
      rep.add({"identity_k", 6, verify_detail::triple(p), 0.0, gap_k, gap_k, 1e-11, true, note});
    }
  }
}

// 7: covered radius of the extremal functions
inline void verify_covered(VerificationReport& rep, const VerifyGrid& g, verify_detail::Rng& rng) {
  if (g.covered_triples <= 0) return;
  for (int i = 0; i < g.covered_triples; ++i) {
    const SnailParams p = verify_detail::random_interior(rng, 0.85);
    const int n = 1 + i % 3;
    const ExtremalSpec spec{p, n, ExtremalFamily::Psi};
    const double closed = -psi_eval(spec, -1.0).real();
    const double lim = minus_f_minus_one_limit(spec);
    rep.add({"covered_limit", 7, verify_detail::triple(p), closed, lim, std::abs(closed - lim),
             1e-8, true, verify_detail::fmt("n=%.0f", n)});
  }
  const SnailParams p = validate_params(0.0, 0.5, 0.5);
  const ExtremalSpec ps{p, 1, ExtremalFamily::Psi};
  const double v = -psi_eval(ps, -1.0).real();
  rep.add({"covered_value", 7, verify_detail::triple(p), 4.0 / 9.0, v, std::abs(v - 4.0 / 9.0),
           1e-12, true, "Psi"});
  const ExtremalSpec kp{p, 1, ExtremalFamily::K, KForm::AsPrinted};
  const CoveredRadius cr = covered_radius(kp);
  rep.add({"covered_k_flag", 7, verify_detail::triple(p), cr.minus_f_minus_one, cr.boundary_min,
           cr.discrepancy ? 0.0 : 1.0, 0.0, true,
           "printed K: -K(-1) against boundary minimum"});
  if (cr.discrepancy) {
    rep.flagged_discrepancies.push_back(verify_detail::fmt(
        "K in printed form at (0, 0.5, 0.5): -K(-1) = %.9f exceeds the boundary minimum %.9f",
        cr.minus_f_minus_one, cr.boundary_min));
  }
}

// 8: sharpness of the monomial criteria on circular domains
inline void verify_sharpness(VerificationReport& rep, const VerifyGrid& g) {
  if (!g.sharpness) return;
  const std::vector<std::array<double, 3>> specs = {
      {0.0, 0.0, 0.5},  {0.0, 0.0, 0.7},  {0.0, 0.0, 0.9},  {0.0, 0.5, 0.3},  {0.0, 0.5, 0.6},
      {0.0, 0.3, 0.5},  {0.0, 0.8, 0.2},  {-0.3, 0.0, 0.7}, {-0.5, 0.0, 0.8}, {-0.4, 0.0, 0.75}};
  const std::vector<double> signs = {1.0, -1.0};
  for (const auto& t : specs) {
    const SnailParams p = validate_params(t[0], t[1], t[2]);
    for (ClassKind kind : {ClassKind::Starlike, ClassKind::Convex}) {
      const ClassSpec cs{p, kind};
      for (int n : g.sharpness_orders) {
        const MembershipVerdict mv = membership(cs, FunctionHandle::monomial(n, 0.0));
        // bound is on |a| (starlike) or n|a| (convex)
        const double a_bound = kind == ClassKind::Starlike ? mv.bound : mv.bound / n;
        double m_in = 0.0;
        double m_out = 0.0;
        const bool in_ok = verify_detail::accepted_all(cs, n, (1.0 - 1e-3) * a_bound, signs, m_in);
        const bool out_all =
            verify_detail::accepted_all(cs, n, (1.0 + 1e-3) * a_bound, signs, m_out);
        const double gap = in_ok && !out_all
                               ? 0.0
                               : std::max(in_ok ? 0.0 : -m_in, out_all ? std::abs(m_out) + 1e-16 : 0.0);
        rep.add({kind == ClassKind::Starlike ? "sharpness_st" : "sharpness_cv", 8, t, mv.bound,
                 m_in, gap, 0.0, in_ok && !out_all,
                 verify_detail::fmt("n=%.0f, L=%.9g", n, mv.L)});
      }
    }
  }
}

// 9: lower bound on Re(Psi/z) and the argument bound
inline void verify_two_inequality(VerificationReport& rep, const VerifyGrid& g,
                                  verify_detail::Rng& rng) {
  int made = 0;
  int tries = 0;
  while (made < g.two_inequality_triples && tries < 100000) {
    ++tries;
    const double a = verify_detail::uniform(rng, -0.9, 0.9);
    const double b = verify_detail::uniform(rng, -0.9, 0.9);
    if (std::abs(a - b) < 0.05) continue;
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    const double mid = 1.0 - (hi - lo) / 2.0;
    const bool want_window = made % 2 == 0;
    double gamma;
    if (want_window) {
      if (thresholds(lo, hi).T0 > mid || mid >= 0.99) continue;
      gamma = verify_detail::uniform(rng, mid, 0.99);
    } else {
      gamma = verify_detail::uniform(rng, 0.0, 0.95);
    }
    const SnailParams p = validate_params(lo, hi, gamma);
    const ClassSpec cs{p, ClassKind::Starlike};
    const ExtremalSpec spec{p, 1, ExtremalFamily::Psi};
    const AnalyticBounds ab0 = analytic_bounds(cs, 0.0);
    double inf_re = std::numeric_limits<double>::infinity();
    double arg_excess = -std::numeric_limits<double>::infinity();
    constexpr int kRadii = 64;
    constexpr int kAngles = 512;
    for (int i = 1; i <= kRadii; ++i) {
      const double r = 0.999 * i / kRadii;
      const double bound = analytic_bounds(cs, r).arg_bound;
      for (int j = 0; j < kAngles; ++j) {
        const cplx z = std::polar(r, kTwoPi * j / kAngles);
        const cplx q = psi_eval(spec, z) / z;
        inf_re = std::min(inf_re, q.real());
        arg_excess = std::max(arg_excess, std::abs(std::arg(q)) - bound);
      }
    }
    if (ab0.re_fz_lower) {
      const double lower = *ab0.re_fz_lower;
      rep.add({"re_quotient_lower", 9, verify_detail::triple(p), lower, inf_re,
               std::max(0.0, lower - inf_re), 1e-6, true, ab0.condition});
    }
    rep.add({"arg_quotient", 9, verify_detail::triple(p), 0.0, arg_excess,
             std::max(0.0, arg_excess), 1e-9, true, "max |arg| minus bound"});
    ++made;
  }
}

// 10: convexity thresholds against the curvature oracle
inline void verify_thresholds(VerificationReport& rep, const VerifyGrid& g) {
  if (!g.thresholds) return;
  const double s = kSnailThreshold;
  const double bt = kBoothThreshold;
  std::vector<SnailParams> cases;
  for (double d : {-0.01, 0.01}) {
    cases.push_back(validate_params(s + d, s + d, 0.5));
    cases.push_back(validate_params(-(s + d), -(s + d), 0.5));
    cases.push_back(validate_params(-(bt + d), bt + d, 0.5));
  }
  for (const SnailParams& p : cases) {
    const DomainClass dc = classify_domain(p);
    const CurvatureSign cs = oracle_curvature_sign(p);
    const bool convex = dc.shape == Shape::Convex;
    const bool oracle_convex = cs == CurvatureSign::ConvexEverywhere;
    rep.add({"curvature_vs_class", 10, verify_detail::triple(p), convex ? 1.0 : 0.0,
             oracle_convex ? 1.0 : 0.0, convex == oracle_convex ? 0.0 : 1.0, 0.0, true,
             std::string(to_string(dc.kind)) + " " + std::string(to_string(dc.shape))});
    if (p.alpha == p.beta) {
      const double t0 = starlike_convex_orders(p).convex_order;
      const bool inside = std::abs(p.alpha) <= s;
      const bool nonneg = t0 >= 0.0;
      rep.add({"t0_window", 10, verify_detail::triple(p), inside ? 1.0 : 0.0, t0,
               inside == nonneg ? 0.0 : 1.0, 0.0, true, "t0 >= 0 iff |alpha| <= 2 - sqrt 3"});
    }
  }
}

// 11: Re z^t >= (Re z)^t for Re z > 0 and t in [0, 1]
inline void verify_power_property(VerificationReport& rep, const VerifyGrid& g,
                                  verify_detail::Rng& rng) {
  if (g.power_samples <= 0) return;
  int violations = 0;
  double worst = 0.0;
  for (int i = 0; i < g.power_samples; ++i) {
    const double mod = std::exp(verify_detail::uniform(rng, -6.0, 6.0));
    const double arg = verify_detail::uniform(rng, -0.5, 0.5) * kPi * (1.0 - 1e-12);
    const double t = verify_detail::uniform(rng, 0.0, 1.0);
    const cplx z = std::polar(mod, arg);
    if (!(z.real() > 0.0)) continue;
    const double lhs = std::pow(z, t).real();
    const double rhs = std::pow(z.real(), t);
    const double slack = 1e-13 * std::max(1.0, std::abs(rhs));
    if (lhs < rhs - slack) ++violations;
    worst = std::max(worst, rhs - lhs);
  }
  rep.add({"power_property", 11, {0.0, 0.0, 0.0}, 0.0, static_cast<double>(violations),
           static_cast<double>(violations), 0.0, true,
           verify_detail::fmt("%.0f samples", g.power_samples)});
}

inline VerificationReport verify_suite(const VerifyGrid& g, std::uint64_t seed = 0x5A11) {
  VerificationReport rep;
  verify_detail::Rng rng(seed);
  verify_residual(rep, g, rng);
  std::vector<SnailParams> grid;
  if (g.re_grid) grid = verify_detail::re_grid(rng, g.re_stride);
  verify_re_extrema(rep, g, rng, grid);
  verify_modulus(rep, g, g.modulus_radii.empty() ? std::vector<SnailParams>{} : grid);
  verify_taylor_heads(rep, g, rng);
  verify_alternation(rep, g, rng);
  verify_identities(rep, g, rng);
  verify_covered(rep, g, rng);
  verify_sharpness(rep, g);
  verify_two_inequality(rep, g, rng);
  verify_thresholds(rep, g);
  verify_power_property(rep, g, rng);
  return rep;
}

}  // namespace snail
