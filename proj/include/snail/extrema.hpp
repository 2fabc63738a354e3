#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "snail/error.hpp"
#include "snail/params.hpp"

namespace snail {

struct RegionFlags {
  bool in_B1 = false;
  bool in_B2 = false;
  std::optional<double> beta1_of_alpha;
  std::optional<double> beta2_of_alpha;
};

inline double beta1_of(double a) {
  return ((1.0 + a) * std::sqrt(a * a + 14.0 * a + 1.0) - (a * a + 6.0 * a + 1.0)) /
         (2.0 * a * (1.0 - a));
}

inline double beta2_of(double a) {
  return ((1.0 - a) * std::sqrt(a * a - 14.0 * a + 1.0) - a * a + 6.0 * a - 1.0) /
         (2.0 * a * (1.0 + a));
}

inline RegionFlags region_flags(double alpha, double beta) {
  RegionFlags f;
  if (alpha > 0.0 && alpha < 1.0) {
    f.beta1_of_alpha = beta1_of(alpha);
    f.in_B1 = beta > *f.beta1_of_alpha && beta < 1.0;
  } else if (alpha < 0.0 && alpha > -1.0) {
    f.beta2_of_alpha = beta2_of(alpha);
    f.in_B2 = beta > alpha && beta < *f.beta2_of_alpha;
  }
  return f;
}

namespace detail {

inline double off_axis_root(double a, double b) {
  return 2.0 * std::sqrt(a * b * (1.0 - a * a) * (1.0 - b * b));
}

// interior-angle maximum of Re of the unscaled map (region B2)
inline double b2_max(double a, double b) {
  const double ab = a * b;
  return (1.0 + ab) * (1.0 + ab) /
         (2.0 * (1.0 - ab) * (off_axis_root(a, b) - (a + b) * (1.0 - ab)));
}

// interior-angle minimum of Re of the unscaled map (region B1)
inline double b1_min(double a, double b) {
  const double ab = a * b;
  return -(1.0 + ab) * (1.0 + ab) /
         (2.0 * (1.0 - ab) * (off_axis_root(a, b) + (a + b) * (1.0 - ab)));
}

}  // namespace detail

struct ReExtrema {
  double min_re = 0.0;
  double max_re = 0.0;
  std::optional<double> L0;
  std::optional<double> M0;
  std::string branch;
};

namespace detail {

struct RawRe {
  double min_re;
  double max_re;
  std::string branch;
};

inline RawRe conchoid_right_re(double a) {
  const double at_pole = -(1.0 + a) / (2.0 * (1.0 - a) * (1.0 - a));
  const double opposite = -1.0 / (2.0 * (1.0 + a));
  if (a <= 0.0) return {opposite, at_pole, "beta=1,alpha<=0"};
  return {at_pole, opposite, "beta=1,alpha>0"};
}

inline RawRe raw_re_extrema(double a, double b) {
  if (a == -1.0) {
    const RawRe m = conchoid_right_re(-b);
    return {-m.max_re, -m.min_re, "alpha=-1(mirror of " + m.branch + ")"};
  }
  if (b == 1.0) return conchoid_right_re(a);
  if (b == -a) {
    const double v = 1.0 / (1.0 - a * a);
    return {-v, v, "beta=-alpha"};
  }
  if (a == b) {
    const double loop = -((1.0 + a * a) / (1.0 - a * a)) * ((1.0 + a * a) / (1.0 - a * a)) /
                        (8.0 * a);
    RawRe r{0.0, 0.0, "beta=alpha"};
    r.max_re = a <= -kSnailThreshold ? loop : 1.0 / ((1.0 - a) * (1.0 - a));
    r.min_re = a >= kSnailThreshold ? loop : -1.0 / ((1.0 + a) * (1.0 + a));
    r.branch += a >= kSnailThreshold    ? ",min-interior"
                : a <= -kSnailThreshold ? ",max-interior"
                                        : ",axis";
    return r;
  }
  const RegionFlags f = region_flags(a, b);
  RawRe r{-1.0 / ((1.0 + a) * (1.0 + b)), 1.0 / ((1.0 - a) * (1.0 - b)), "general"};
  if (f.in_B1) {
    r.min_re = b1_min(a, b);
    r.branch = "B1";
  } else if (f.in_B2) {
    r.max_re = b2_max(a, b);
    r.branch = "B2";
  }
  return r;
}

}  // namespace detail

// Extrema of Re of the unscaled map on the unit circle, plus the scaled
// half-plane bounds of the image domain (absent where the domain is
// unbounded in that direction).
inline ReExtrema re_extrema(const SnailParams& p) {
  const detail::RawRe raw = detail::raw_re_extrema(p.alpha, p.beta);
  ReExtrema out;
  out.min_re = raw.min_re;
  out.max_re = raw.max_re;
  out.branch = raw.branch;
  const double k = p.scale();
  if (p.alpha > -1.0) out.L0 = k * raw.min_re;
  if (p.beta < 1.0) out.M0 = k * raw.max_re;
  return out;
}

struct ModulusExtrema {
  double min_mod = 0.0;
  double max_mod = 0.0;
  std::string branch;
};

inline ModulusExtrema modulus_extrema(const SnailParams& p, double r) {
  if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorCode::OutOfRange, "radius must lie in (0, 1)");
  const double a = p.alpha;
  const double b = p.beta;
  const double k = p.scale();
  if (r == 1.0 && !p.bounded()) {
    throw Error(ErrorCode::Unbounded, "modulus is unbounded on the unit circle");
  }
  auto real_val = [&](double x) { return k * x / ((1.0 - a * x) * (1.0 - b * x)); };
  const double at_plus = real_val(r);
  const double at_minus = -real_val(-r);
  ModulusExtrema m;
  if (a + b == 0.0) {
    m.max_mod = k * r / (1.0 - a * a * r * r);
    m.min_mod = k * r / (1.0 + a * a * r * r);
    m.branch = "alpha+beta=0";
  } else if (a * b >= 0.0) {
    if (a + b > 0.0) {
      m.max_mod = at_plus;
      m.min_mod = at_minus;
      m.branch = "ab>=0,sum>0";
    } else {
      m.max_mod = at_minus;
      m.min_mod = at_plus;
      m.branch = "ab>=0,sum<0";
    }
  } else {
    m.max_mod = a + b > 0.0 ? at_plus : at_minus;
    const double cstar = (a + b) * (1.0 + a * b * r * r) / (4.0 * a * b * r);
    if (std::abs(cstar) <= 1.0) {
      m.min_mod = 2.0 * k * r * std::sqrt(std::abs(a * b)) / ((b - a) * (1.0 - a * b * r * r));
      m.branch = "ab<0,interior";
    } else {
      m.min_mod = std::min(at_plus, at_minus);
      m.branch = "ab<0,axis";
    }
  }
  return m;
}

struct Orders {
  double star_order = 0.0;
  double convex_order = 0.0;
};

inline Orders starlike_convex_orders(const SnailParams& p) {
  const double a = p.alpha;
  const double b = p.beta;
  const double aa = std::abs(a);
  const double ab_ = std::abs(b);
  const double ab = a * b;
  Orders o;
  o.star_order = (1.0 - std::abs(ab)) / ((1.0 + aa) * (1.0 + ab_));
  const double head = (1.0 - aa) / (1.0 + aa) + (1.0 - ab_) / (1.0 + ab_);
  o.convex_order = ab >= 0.0 ? head - (1.0 + ab) / (1.0 - ab) : head - (1.0 - ab) / (1.0 + ab);
  return o;
}

inline double membership_L(const SnailParams& p) {
  const double a = p.alpha;
  const double b = p.beta;
  const double k = p.scale();
  if (a + b == 0.0) return k / (1.0 + a * a);
  if (a * b < 0.0) return 2.0 * k * std::sqrt(std::abs(a * b)) / ((b - a) * (1.0 - a * b));
  if ((a * b > 0.0 && a + b < 0.0) || b == 0.0) return k / ((1.0 + a) * (1.0 + b));
  return k / ((1.0 - a) * (1.0 - b));
}

struct DiskRadii {
  double inscribed = 0.0;
  double circumscribed = 0.0;
  double membership_L = 0.0;
};

inline DiskRadii disk_radii(const SnailParams& p) {
  if (!p.bounded()) throw Error(ErrorCode::Unbounded, "image domain is unbounded");
  const ModulusExtrema m = modulus_extrema(p, 1.0);
  return {m.min_mod, m.max_mod, membership_L(p)};
}

struct CircularImage {
  double center = 0.0;
  double radius = 0.0;
};

// Image disc of the map when one parameter vanishes
inline CircularImage circular_image(const SnailParams& p) {
  if (p.alpha * p.beta != 0.0 || !p.bounded()) {
    throw Error(ErrorCode::UnsupportedFamily, "circular image needs a zero parameter");
  }
  const double c = p.alpha + p.beta;
  const double k = p.scale();
  return {k * c / (1.0 - c * c), k / (1.0 - c * c)};
}

}  // namespace snail
