#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "snail/error.hpp"
#include "snail/numeric.hpp"

namespace snail {

struct SnailParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  bool swapped = false;

  double scale() const { return 2.0 * (1.0 - gamma); }
  bool bounded() const { return beta < 1.0 && alpha > -1.0; }
  bool interior() const { return alpha > -1.0 && beta < 1.0; }
};

inline SnailParams validate_params(double alpha, double beta, double gamma) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || alpha < -1.0 || alpha > 1.0 ||
      beta < -1.0 || beta > 1.0) {
    throw Error(ErrorCode::OutOfRange, "alpha and beta must lie in [-1, 1]");
  }
  if (!std::isfinite(gamma) || gamma < 0.0 || gamma >= 1.0) {
    throw Error(ErrorCode::GammaOutOfRange, "gamma must lie in [0, 1)");
  }
  if (std::abs(alpha * beta) == 1.0) {
    throw Error(ErrorCode::ForbiddenCorner, "alpha*beta must differ from +1 and -1");
  }
  SnailParams p{alpha, beta, gamma, false};
  if (alpha > beta) {
    std::swap(p.alpha, p.beta);
    p.swapped = true;
  }
  // ordered: alpha = 1 or beta = -1 would be a corner, so endpoints left here are
  // conchoids or half-planes
  return p;
}

enum class DomainKind {
  Disc,
  OffCenterDisc,
  HalfPlane,
  PascalSnail,
  BoothLemniscate,
  ConchoidRight,
  ConchoidLeft,
  GeneralizedSnail,
};

enum class Shape { Convex, FlattenedBoundary, Concave, NotApplicable };

constexpr std::string_view to_string(DomainKind k) {
  switch (k) {
    case DomainKind::Disc: return "Disc";
    case DomainKind::OffCenterDisc: return "OffCenterDisc";
    case DomainKind::HalfPlane: return "HalfPlane";
    case DomainKind::PascalSnail: return "PascalSnail";
    case DomainKind::BoothLemniscate: return "BoothLemniscate";
    case DomainKind::ConchoidRight: return "ConchoidRight";
    case DomainKind::ConchoidLeft: return "ConchoidLeft";
    case DomainKind::GeneralizedSnail: return "GeneralizedSnail";
  }
  return "Unknown";
}

constexpr std::string_view to_string(Shape s) {
  switch (s) {
    case Shape::Convex: return "Convex";
    case Shape::FlattenedBoundary: return "FlattenedBoundary";
    case Shape::Concave: return "Concave";
    case Shape::NotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

struct DomainClass {
  DomainKind kind = DomainKind::Disc;
  Shape shape = Shape::NotApplicable;
  std::optional<double> witness;
};

// Re(1 + z L''/L') on |z| = 1 written in t = cos(theta); the image domain is
// convex iff this stays nonnegative on [-1, 1].
inline double convexity_functional(double alpha, double beta, double t) {
  auto term = [t](double c) {
    if (std::abs(c) == 1.0) return 0.0;
    return (1.0 - c * c) / (1.0 + c * c - 2.0 * c * t);
  };
  const double ab = alpha * beta;
  const double tail = (1.0 - ab * ab) / ((1.0 + ab) * (1.0 + ab) - 4.0 * ab * t * t);
  return term(alpha) + term(beta) - tail;
}

inline GoldenResult convexity_minimum(double alpha, double beta) {
  constexpr int kGrid = 4000;
  // stay clear of the pole of a unit-modulus factor
  const double lo = alpha == -1.0 ? -1.0 + 1e-9 : -1.0;
  const double hi = beta == 1.0 ? 1.0 - 1e-9 : 1.0;
  auto g = [&](double t) { return convexity_functional(alpha, beta, t); };
  int best = 0;
  double best_val = g(lo);
  for (int i = 1; i <= kGrid; ++i) {
    double v = g(lo + (hi - lo) * i / kGrid);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double h = (hi - lo) / kGrid;
  const double a = std::max(lo, lo + (best - 1) * h);
  const double b = std::min(hi, lo + (best + 1) * h);
  GoldenResult r = golden_min(g, a, b);
  if (best_val < r.fx) r = {lo + best * h, best_val};
  return r;
}

inline Shape shape_from_margin(double margin, double tol) {
  if (std::abs(margin) <= tol) return Shape::FlattenedBoundary;
  return margin > 0 ? Shape::Convex : Shape::Concave;
}

inline DomainClass classify_domain(const SnailParams& p) {
  const double a = p.alpha;
  const double b = p.beta;
  DomainClass out;
  if (a == 0.0 && b == 0.0) {
    out.kind = DomainKind::Disc;
    return out;
  }
  if ((a == 0.0 && b == 1.0) || (a == -1.0 && b == 0.0)) {
    out.kind = DomainKind::HalfPlane;
    return out;
  }
  if (a == 0.0 || b == 0.0) {
    out.kind = DomainKind::OffCenterDisc;
    return out;
  }
  if (b == 1.0) {
    out.kind = DomainKind::ConchoidRight;
  } else if (a == -1.0) {
    out.kind = DomainKind::ConchoidLeft;
  } else if (a == b) {
    out.kind = DomainKind::PascalSnail;
    out.witness = kSnailThreshold;
    const double m = std::abs(a);
    out.shape = m < kSnailThreshold ? Shape::Convex
                : m == kSnailThreshold ? Shape::FlattenedBoundary
                                       : Shape::Concave;
    return out;
  } else if (b == -a) {
    out.kind = DomainKind::BoothLemniscate;
    out.witness = kBoothThreshold;
    const double m = std::abs(a);
    out.shape = m < kBoothThreshold ? Shape::Convex
                : m == kBoothThreshold ? Shape::FlattenedBoundary
                                       : Shape::Concave;
    return out;
  } else {
    out.kind = DomainKind::GeneralizedSnail;
  }
  const GoldenResult m = convexity_minimum(a, b);
  out.witness = m.fx;
  out.shape = shape_from_margin(m.fx, 1e-12);
  return out;
}

}  // namespace snail
