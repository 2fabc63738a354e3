#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_fft_complex.h>

#include "snail/error.hpp"
#include "snail/function.hpp"
#include "snail/mapping.hpp"
#include "snail/numeric.hpp"
#include "snail/params.hpp"

namespace snail {

enum class Functional { RealPart, Modulus };

struct CircleExtremum {
  double min = 0.0;
  double max = 0.0;
  double argmin = 0.0;
  double argmax = 0.0;
  int excluded = 0;
};

// value of f at r e^{i theta}; the map itself goes through the stable polar form
inline cplx value_on_circle(const FunctionHandle& f, double r, double theta) {
  if (const auto* m = std::get_if<fam::MapL>(&f.repr()); m != nullptr && m->m == 1) {
    return m->offset + m->factor * eval_L_polar(m->params, r, theta);
  }
  return f.value(std::polar(r, theta));
}

namespace detail {

inline std::vector<int> best_local(const std::vector<double>& v, int count) {
  const int n = static_cast<int>(v.size());
  std::vector<int> idx;
  for (int j = 0; j < n; ++j) {
    const double a = v[(j + n - 1) % n];
    const double b = v[(j + 1) % n];
    if (std::isfinite(v[j]) && v[j] <= a && v[j] <= b) idx.push_back(j);
  }
  std::sort(idx.begin(), idx.end(), [&](int x, int y) { return v[x] < v[y]; });
  if (static_cast<int>(idx.size()) > count) idx.resize(count);
  if (idx.empty()) {
    int best = -1;
    for (int j = 0; j < n; ++j) {
      if (std::isfinite(v[j]) && (best < 0 || v[j] < v[best])) best = j;
    }
    if (best >= 0) idx.push_back(best);
  }
  return idx;
}

}  // namespace detail

inline CircleExtremum oracle_extremum_on_circle(const FunctionHandle& f, Functional functional,
                                                double r, int n_samples) {
  if (n_samples < 1000) throw Error(ErrorCode::OutOfRange, "need at least 1000 samples");
  auto eval = [&](double t) -> double {
    try {
      const cplx w = value_on_circle(f, r, t);
      const double v = functional == Functional::RealPart ? w.real() : std::abs(w);
      return std::isfinite(v) ? v : std::numeric_limits<double>::quiet_NaN();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BoundaryPole || e.code() == ErrorCode::SampleSingularity) {
        return std::numeric_limits<double>::quiet_NaN();
      }
      throw;
    }
  };
  std::vector<double> lo(n_samples);
  std::vector<double> hi(n_samples);
  CircleExtremum out;
  const double h = kTwoPi / n_samples;
  for (int j = 0; j < n_samples; ++j) {
    const double v = eval(h * j);
    if (std::isnan(v)) {
      ++out.excluded;
      lo[j] = hi[j] = std::numeric_limits<double>::quiet_NaN();
    } else {
      lo[j] = v;
      hi[j] = -v;
    }
  }
  if (out.excluded == n_samples) {
    throw Error(ErrorCode::SampleSingularity, "every sample hit a singularity");
  }
  auto refine = [&](const std::vector<double>& vals, double sign, double& best_v, double& best_t) {
    best_v = std::numeric_limits<double>::infinity();
    for (int j : detail::best_local(vals, 3)) {
      auto g = [&](double t) {
        const double v = eval(t);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : sign * v;
      };
      double t = h * j;
      double v = vals[j];
      const GoldenResult gr = golden_min(g, t - h, t + h, 1e-12);
      if (gr.fx < v) {
        t = gr.x;
        v = gr.fx;
      }
      if (v < best_v) {
        best_v = v;
        best_t = wrap_angle(t);
      }
    }
  };
  double vmin = 0.0;
  double vmax = 0.0;
  refine(lo, 1.0, vmin, out.argmin);
  refine(hi, -1.0, vmax, out.argmax);
  out.min = vmin;
  out.max = -vmax;
  return out;
}

// Forward radix-2 FFT (kernel e^{-2 pi i jk/N})
inline void fft(std::vector<cplx>& a) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw Error(ErrorCode::OutOfRange, "FFT size must be 2^k");
  static_assert(sizeof(cplx) == 2 * sizeof(double));
  detail::gsl_quiet();
  if (gsl_fft_complex_radix2_forward(reinterpret_cast<double*>(a.data()), 1, n) != GSL_SUCCESS) {
    throw Error(ErrorCode::OutOfRange, "FFT failed");
  }
}

struct TaylorExtraction {
  std::vector<cplx> coefficients;
  double tail_bound = 0.0;
};

// Coefficients c_0..c_m from N samples on |z| = rho
inline TaylorExtraction oracle_taylor(const std::function<cplx(cplx)>& f, int m, double rho,
                                      int fft_size = 1024, double target = 1e-8) {
  if (!(rho > 0.0 && rho < 1.0)) throw Error(ErrorCode::OutOfRange, "rho must lie in (0, 1)");
  if (m < 0 || m > fft_size / 2) throw Error(ErrorCode::OutOfRange, "m exceeds half the FFT size");
  std::vector<cplx> s(fft_size);
  for (int j = 0; j < fft_size; ++j) s[j] = f(std::polar(rho, kTwoPi * j / fft_size));
  fft(s);
  TaylorExtraction out;
  double upper = 0.0;
  for (int k = fft_size / 2; k < fft_size; ++k) {
    upper = std::max(upper, std::abs(s[k]) / fft_size);
  }
  double rk = 1.0;
  for (int k = 0; k <= m; ++k) {
    out.coefficients.push_back(s[k] / (static_cast<double>(fft_size) * rk));
    rk *= rho;
  }
  out.tail_bound = upper / std::pow(rho, m);
  if (out.tail_bound > target) {
    throw Error(ErrorCode::TailBoundExceeded, "estimated truncation error above target");
  }
  return out;
}

inline TaylorExtraction oracle_taylor(const FunctionHandle& f, int m, double rho,
                                      int fft_size = 1024, double target = 1e-8) {
  return oracle_taylor([&](cplx z) { return f.value(z); }, m, rho, fft_size, target);
}

// k-th derivative from the trapezoid rule on a small Cauchy circle
inline cplx cauchy_derivative(const std::function<cplx(cplx)>& f, cplx z, int order,
                              double radius = 0.05, int points = 64) {
  cplx acc = 0.0;
  for (int j = 0; j < points; ++j) {
    const double t = kTwoPi * j / points;
    acc += f(z + std::polar(radius, t)) * std::polar(1.0, -order * t);
  }
  double fact = 1.0;
  for (int k = 2; k <= order; ++k) fact *= k;
  return acc * fact / (points * std::pow(radius, order));
}

// Point-in-region index for a closed polyline: signed crossing count over
// horizontal bands plus a bucketed nearest-segment distance.
class RegionIndex {
 public:
  explicit RegionIndex(std::vector<cplx> verts, int bands = 512, int grid = 96)
      : v_(std::move(verts)) {
    if (v_.size() < 3) throw Error(ErrorCode::EmptyPolyline, "region needs at least 3 vertices");
    lo_ = hi_ = v_[0];
    for (const cplx& p : v_) {
      lo_ = {std::min(lo_.real(), p.real()), std::min(lo_.imag(), p.imag())};
      hi_ = {std::max(hi_.real(), p.real()), std::max(hi_.imag(), p.imag())};
    }
    const double pad = 1e-9 * (1.0 + std::abs(hi_ - lo_));
    lo_ -= cplx(pad, pad);
    hi_ += cplx(pad, pad);
    nb_ = bands;
    band_.assign(nb_, {});
    ng_ = grid;
    cell_.assign(static_cast<std::size_t>(ng_) * ng_, {});
    const std::size_t n = v_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const cplx a = v_[i];
      const cplx b = v_[(i + 1) % n];
      max_edge_ = std::max(max_edge_, std::abs(b - a));
      const int y0 = band_of(std::min(a.imag(), b.imag()));
      const int y1 = band_of(std::max(a.imag(), b.imag()));
      for (int k = y0; k <= y1; ++k) band_[k].push_back(static_cast<int>(i));
      const int cx0 = cell_x(std::min(a.real(), b.real()));
      const int cx1 = cell_x(std::max(a.real(), b.real()));
      const int cy0 = cell_y(std::min(a.imag(), b.imag()));
      const int cy1 = cell_y(std::max(a.imag(), b.imag()));
      for (int x = cx0; x <= cx1; ++x)
        for (int y = cy0; y <= cy1; ++y) cell_[x * ng_ + y].push_back(static_cast<int>(i));
    }
  }

  double max_edge() const { return max_edge_; }

  int winding(cplx w) const {
    if (w.imag() < lo_.imag() || w.imag() > hi_.imag()) return 0;
    int wn = 0;
    const std::size_t n = v_.size();
    for (int i : band_[band_of(w.imag())]) {
      const cplx a = v_[i];
      const cplx b = v_[(i + 1) % n];
      if (a.imag() <= w.imag()) {
        if (b.imag() > w.imag() && cross(a, b, w) > 0) ++wn;
      } else if (b.imag() <= w.imag() && cross(a, b, w) < 0) {
        --wn;
      }
    }
    return wn;
  }

  struct Nearest {
    double distance;
    int segment;
  };

  // search stops once every unvisited segment is provably farther than cap
  Nearest nearest(cplx w, double cap = std::numeric_limits<double>::infinity()) const {
    const double cw = (hi_.real() - lo_.real()) / ng_;
    const double ch = (hi_.imag() - lo_.imag()) / ng_;
    const double step = std::min(cw, ch);
    int cx = std::clamp(cell_x(w.real()), 0, ng_ - 1);
    int cy = std::clamp(cell_y(w.imag()), 0, ng_ - 1);
    const double outside = std::max({lo_.real() - w.real(), w.real() - hi_.real(),
                                     lo_.imag() - w.imag(), w.imag() - hi_.imag(), 0.0});
    double best = std::numeric_limits<double>::infinity();
    int seg = 0;
    const std::size_t n = v_.size();
    for (int ring = 0; ring <= ng_; ++ring) {
      auto visit = [&](int x, int y) {
        if (x < 0 || y < 0 || x >= ng_ || y >= ng_) return;
        for (int i : cell_[x * ng_ + y]) {
          const double d = seg_dist(v_[i], v_[(i + 1) % n], w);
          if (d < best) {
            best = d;
            seg = i;
          }
        }
      };
      if (ring == 0) {
        visit(cx, cy);
      } else {
        for (int x = cx - ring; x <= cx + ring; ++x) {
          visit(x, cy - ring);
          visit(x, cy + ring);
        }
        for (int y = cy - ring + 1; y <= cy + ring - 1; ++y) {
          visit(cx - ring, y);
          visit(cx + ring, y);
        }
      }
      if (best <= std::max(outside, ring * step)) break;
      if (ring * step >= cap) return {std::min(best, ring * step), seg};
    }
    return {best, seg};
  }

  double distance(cplx w) const { return nearest(w).distance; }

  double margin(cplx w, double cap = std::numeric_limits<double>::infinity()) const {
    if (winding(w) != 0) return nearest(w, cap).distance;
    return -distance(w);
  }

 private:
  static double cross(cplx a, cplx b, cplx w) {
    return (b.real() - a.real()) * (w.imag() - a.imag()) -
           (w.real() - a.real()) * (b.imag() - a.imag());
  }
  static double seg_dist(cplx a, cplx b, cplx w) {
    const cplx ab = b - a;
    const double len2 = std::norm(ab);
    double t = len2 > 0 ? ((w - a) * std::conj(ab)).real() / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(w - (a + t * ab));
  }
  int band_of(double y) const {
    const int k = static_cast<int>((y - lo_.imag()) / (hi_.imag() - lo_.imag()) * nb_);
    return std::clamp(k, 0, nb_ - 1);
  }
  int cell_x(double x) const {
    return std::clamp(static_cast<int>((x - lo_.real()) / (hi_.real() - lo_.real()) * ng_), 0,
                      ng_ - 1);
  }
  int cell_y(double y) const {
    return std::clamp(static_cast<int>((y - lo_.imag()) / (hi_.imag() - lo_.imag()) * ng_), 0,
                      ng_ - 1);
  }

  std::vector<cplx> v_;
  cplx lo_;
  cplx hi_;
  int nb_ = 0;
  int ng_ = 0;
  double max_edge_ = 0.0;
  std::vector<std::vector<int>> band_;
  std::vector<std::vector<int>> cell_;
};

inline std::vector<cplx> polyline_vertices(const Polyline& pl, cplx shift = 0.0) {
  std::vector<cplx> out;
  out.reserve(pl.points.size());
  for (const auto& b : pl.points) out.push_back(b.w() + shift);
  return out;
}

inline double oracle_region_membership(const Polyline& target, cplx w) {
  if (target.open) throw Error(ErrorCode::OpenCurve, "membership needs a closed boundary");
  if (target.points.empty()) throw Error(ErrorCode::EmptyPolyline, "empty boundary");
  return RegionIndex(polyline_vertices(target)).margin(w);
}

enum class CurvatureSign { ConvexEverywhere, SignChanges };

struct CurvatureReport {
  CurvatureSign sign = CurvatureSign::ConvexEverywhere;
  double min_relative = 0.0;
};

// Central differences of the boundary parametrization in theta
inline CurvatureReport oracle_curvature_report(const SnailParams& p, int n_samples = 4096,
                                               double h = 1e-4) {
  if (!p.bounded()) throw Error(ErrorCode::Unbounded, "curvature test needs a bounded domain");
  double kmin = std::numeric_limits<double>::infinity();
  double kmax = 0.0;
  for (int j = 0; j < n_samples; ++j) {
    const double t = kTwoPi * j / n_samples;
    const BoundaryPoint m = boundary_point(p, t - h);
    const BoundaryPoint c = boundary_point(p, t);
    const BoundaryPoint q = boundary_point(p, t + h);
    const double du = (q.u - m.u) / (2 * h);
    const double dv = (q.v - m.v) / (2 * h);
    const double ddu = (q.u - 2 * c.u + m.u) / (h * h);
    const double ddv = (q.v - 2 * c.v + m.v) / (h * h);
    const double speed = std::hypot(du, dv);
    const double kappa = (du * ddv - dv * ddu) / (speed * speed * speed);
    kmin = std::min(kmin, kappa);
    kmax = std::max(kmax, std::abs(kappa));
  }
  CurvatureReport r;
  r.min_relative = kmin / kmax;
  r.sign = r.min_relative < -1e-6 ? CurvatureSign::SignChanges : CurvatureSign::ConvexEverywhere;
  return r;
}

inline CurvatureSign oracle_curvature_sign(const SnailParams& p, int n_samples = 4096) {
  return oracle_curvature_report(p, n_samples).sign;
}

}  // namespace snail
