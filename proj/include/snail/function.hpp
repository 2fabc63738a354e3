#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <string_view>
#include <variant>
#include <vector>

#include "snail/error.hpp"
#include "snail/extremal.hpp"
#include "snail/mapping.hpp"
#include "snail/numeric.hpp"
#include "snail/params.hpp"
#include "snail/quadrature.hpp"

namespace snail {

class FunctionHandle;
using FunctionPtr = std::shared_ptr<const FunctionHandle>;

namespace fam {

// offset + factor * L(z^m)
struct MapL {
  SnailParams params;
  int m = 1;
  double factor = 1.0;
  double offset = 0.0;
};
struct Psi {
  ExtremalSpec spec;
};
struct K {
  ExtremalSpec spec;
};
// z + a z^n
struct Monomial {
  int n = 2;
  cplx a;
};
// z / (1 - A z)^2
struct KoebeLike {
  cplx A;
};
// z / (1 - A z)
struct InverseLinear {
  cplx A;
};
// z exp(A z)
struct ExpLinear {
  cplx A;
};
// (exp(A z) - 1) / A
struct ExpMinusOne {
  cplx A;
};
// c z^k
struct Power {
  cplx c = 1.0;
  int k = 1;
};
// integral_0^z (f(t)/t)^exponent dt
struct PhiTransform {
  FunctionPtr source;
  double exponent = 0.0;
};
// z exp integral_0^z (1/(1 - c w(t)) - 1)/t dt
struct StarlikeFactor {
  FunctionPtr omega;
  double c = 0.0;
};
// z exp integral_0^z (T(w(t)) - 1)/t dt
struct StructuralST {
  SnailParams params;
  FunctionPtr omega;
};
// values on concentric rings, theta_j = 2 pi j / size
struct Ring {
  double r = 0.0;
  std::vector<cplx> values;
};
struct SampledGrid {
  std::vector<Ring> rings;
};

}  // namespace fam

enum class Family {
  MapL,
  MapT,
  Psi,
  K,
  Monomial,
  KoebeLike,
  InverseLinear,
  ExpLinear,
  ExpMinusOne,
  Power,
  PhiTransform,
  StarlikeFactor,
  StructuralST,
  SampledGrid,
};

constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::MapL: return "MapL";
    case Family::MapT: return "MapT";
    case Family::Psi: return "Psi";
    case Family::K: return "K";
    case Family::Monomial: return "Monomial";
    case Family::KoebeLike: return "KoebeLike";
    case Family::InverseLinear: return "InverseLinear";
    case Family::ExpLinear: return "ExpLinear";
    case Family::ExpMinusOne: return "ExpMinusOne";
    case Family::Power: return "Power";
    case Family::PhiTransform: return "PhiTransform";
    case Family::StarlikeFactor: return "StarlikeFactor";
    case Family::StructuralST: return "StructuralST";
    case Family::SampledGrid: return "SampledGrid";
  }
  return "Unknown";
}

class FunctionHandle {
 public:
  using Repr = std::variant<fam::MapL, fam::Psi, fam::K, fam::Monomial, fam::KoebeLike,
                            fam::InverseLinear, fam::ExpLinear, fam::ExpMinusOne, fam::Power,
                            fam::PhiTransform, fam::StarlikeFactor, fam::StructuralST,
                            fam::SampledGrid>;

  explicit FunctionHandle(Repr r) : repr_(std::move(r)) {}

  static FunctionHandle map_L(const SnailParams& p) { return FunctionHandle(fam::MapL{p}); }
  static FunctionHandle map_T(const SnailParams& p, int m = 1, double factor = 1.0) {
    return FunctionHandle(fam::MapL{p, m, factor, 1.0});
  }
  static FunctionHandle psi(const SnailParams& p, int n = 1) {
    return FunctionHandle(fam::Psi{ExtremalSpec{p, n, ExtremalFamily::Psi}});
  }
  static FunctionHandle k(const SnailParams& p, int n = 1, KForm form = KForm::Structural) {
    return FunctionHandle(fam::K{ExtremalSpec{p, n, ExtremalFamily::K, form}});
  }
  static FunctionHandle monomial(int n, cplx a) { return FunctionHandle(fam::Monomial{n, a}); }
  static FunctionHandle koebe_like(cplx A) { return FunctionHandle(fam::KoebeLike{A}); }
  static FunctionHandle inverse_linear(cplx A) { return FunctionHandle(fam::InverseLinear{A}); }
  static FunctionHandle exp_linear(cplx A) { return FunctionHandle(fam::ExpLinear{A}); }
  static FunctionHandle exp_minus_one(cplx A) {
    if (A == cplx(0.0)) throw Error(ErrorCode::OutOfRange, "(e^{Az}-1)/A needs A != 0");
    return FunctionHandle(fam::ExpMinusOne{A});
  }
  static FunctionHandle power(cplx c, int k) { return FunctionHandle(fam::Power{c, k}); }
  static FunctionHandle constant(cplx c) { return FunctionHandle(fam::Power{c, 0}); }
  static FunctionHandle sampled(std::vector<fam::Ring> rings) {
    return FunctionHandle(fam::SampledGrid{std::move(rings)});
  }

  const Repr& repr() const { return repr_; }

  Family family() const {
    return std::visit(
        [](const auto& f) -> Family {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, fam::MapL>) {
            return f.offset == 1.0 ? Family::MapT : Family::MapL;
          } else if constexpr (std::is_same_v<T, fam::Psi>) {
            return Family::Psi;
          } else if constexpr (std::is_same_v<T, fam::K>) {
            return Family::K;
          } else if constexpr (std::is_same_v<T, fam::Monomial>) {
            return Family::Monomial;
          } else if constexpr (std::is_same_v<T, fam::KoebeLike>) {
            return Family::KoebeLike;
          } else if constexpr (std::is_same_v<T, fam::InverseLinear>) {
            return Family::InverseLinear;
          } else if constexpr (std::is_same_v<T, fam::ExpLinear>) {
            return Family::ExpLinear;
          } else if constexpr (std::is_same_v<T, fam::ExpMinusOne>) {
            return Family::ExpMinusOne;
          } else if constexpr (std::is_same_v<T, fam::Power>) {
            return Family::Power;
          } else if constexpr (std::is_same_v<T, fam::PhiTransform>) {
            return Family::PhiTransform;
          } else if constexpr (std::is_same_v<T, fam::StarlikeFactor>) {
            return Family::StarlikeFactor;
          } else if constexpr (std::is_same_v<T, fam::StructuralST>) {
            return Family::StructuralST;
          } else {
            return Family::SampledGrid;
          }
        },
        repr_);
  }

  bool is_sampled() const { return std::holds_alternative<fam::SampledGrid>(repr_); }

  cplx value(cplx z) const { return std::visit([&](const auto& f) { return eval(f, z, 0); }, repr_); }
  cplx derivative(cplx z) const {
    return std::visit([&](const auto& f) { return eval(f, z, 1); }, repr_);
  }
  cplx second_derivative(cplx z) const {
    return std::visit([&](const auto& f) { return eval(f, z, 2); }, repr_);
  }

  // Upper bound on |z| where the handle is known analytic (1 = whole disk).
  double analytic_radius() const {
    return std::visit(
        [](const auto& f) -> double {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, fam::KoebeLike> || std::is_same_v<T, fam::InverseLinear>) {
            return std::abs(f.A) > 0.0 ? 1.0 / std::abs(f.A) : INFINITY;
          } else if constexpr (std::is_same_v<T, fam::MapL>) {
            return f.params.bounded() ? INFINITY : 1.0;
          } else {
            return INFINITY;
          }
        },
        repr_);
  }

 private:
  static cplx eval(const fam::MapL& f, cplx z, int order) {
    const cplx w = f.m == 1 ? z : std::pow(z, f.m);
    if (order == 0) return f.offset + f.factor * eval_L(f.params, w);
    const cplx dw = f.m == 1 ? cplx(1.0) : static_cast<double>(f.m) * std::pow(z, f.m - 1);
    const cplx l1 = eval_L_derivative(f.params, w);
    if (order == 1) return f.factor * l1 * dw;
    const cplx ddw = f.m <= 1 ? cplx(0.0)
                              : static_cast<double>(f.m * (f.m - 1)) *
                                    (f.m == 2 ? cplx(1.0) : std::pow(z, f.m - 2));
    return f.factor * (eval_L_second_derivative(f.params, w) * dw * dw + l1 * ddw);
  }
  static cplx eval(const fam::Psi& f, cplx z, int order) {
    if (order == 0) return psi_eval(f.spec, z);
    if (order == 1) return psi_derivative(f.spec, z);
    return psi_second_derivative(f.spec, z);
  }
  static cplx eval(const fam::K& f, cplx z, int order) {
    if (order == 0) return k_eval(f.spec, z);
    if (order == 1) return k_derivative(f.spec, z);
    return k_second_derivative(f.spec, z);
  }
  static cplx eval(const fam::Monomial& f, cplx z, int order) {
    const double n = f.n;
    if (order == 0) return z + f.a * std::pow(z, f.n);
    if (order == 1) return 1.0 + n * f.a * std::pow(z, f.n - 1);
    return n * (n - 1) * f.a * (f.n == 2 ? cplx(1.0) : std::pow(z, f.n - 2));
  }
  static cplx eval(const fam::KoebeLike& f, cplx z, int order) {
    const cplx d = 1.0 - f.A * z;
    if (std::abs(d) < kPoleTol) throw Error(ErrorCode::SampleSingularity, "pole of z/(1-Az)^2");
    if (order == 0) return z / (d * d);
    if (order == 1) return (1.0 + f.A * z) / (d * d * d);
    return 2.0 * f.A * (2.0 + f.A * z) / (d * d * d * d);
  }
  static cplx eval(const fam::InverseLinear& f, cplx z, int order) {
    const cplx d = 1.0 - f.A * z;
    if (std::abs(d) < kPoleTol) throw Error(ErrorCode::SampleSingularity, "pole of z/(1-Az)");
    if (order == 0) return z / d;
    if (order == 1) return 1.0 / (d * d);
    return 2.0 * f.A / (d * d * d);
  }
  static cplx eval(const fam::ExpLinear& f, cplx z, int order) {
    const cplx e = std::exp(f.A * z);
    if (order == 0) return z * e;
    if (order == 1) return e * (1.0 + f.A * z);
    return e * f.A * (2.0 + f.A * z);
  }
  static cplx eval(const fam::ExpMinusOne& f, cplx z, int order) {
    const cplx e = std::exp(f.A * z);
    if (order == 0) return (e - 1.0) / f.A;
    if (order == 1) return e;
    return f.A * e;
  }
  static cplx eval(const fam::Power& f, cplx z, int order) {
    const double k = f.k;
    if (order == 0) return f.k == 0 ? f.c : f.c * std::pow(z, f.k);
    if (order == 1) return f.k < 1 ? cplx(0.0) : k * f.c * std::pow(z, f.k - 1);
    return f.k < 2 ? cplx(0.0) : k * (k - 1) * f.c * std::pow(z, f.k - 2);
  }
  static cplx quotient_power(const FunctionHandle& src, cplx t, double e) {
    const cplx ratio = t == cplx(0.0) ? src.derivative(t) : src.value(t) / t;
    if (!(ratio.real() > 0.0)) {
      throw Error(ErrorCode::NonpositiveRealPart, "f(t)/t left the right half-plane");
    }
    return std::exp(e * std::log(ratio));
  }
  static cplx eval(const fam::PhiTransform& f, cplx z, int order) {
    if (order == 0) {
      return integrate_segment([&](cplx t) { return quotient_power(*f.source, t, f.exponent); },
                               z)
          .value;
    }
    const cplx d1 = quotient_power(*f.source, z, f.exponent);
    if (order == 1) return d1;
    if (z == cplx(0.0)) {
      return f.exponent * f.source->second_derivative(z) / 2.0;
    }
    const cplx fv = f.source->value(z);
    return d1 * f.exponent * (f.source->derivative(z) / fv - 1.0 / z);
  }
  static cplx starlike_log_integrand(const fam::StarlikeFactor& f, cplx t) {
    const cplx w = f.omega->value(t);
    if (!(std::abs(w) < 1.0)) throw Error(ErrorCode::NotSchwarz, "|omega| >= 1 at a sample");
    if (t == cplx(0.0)) return f.c * f.omega->derivative(t);
    return (1.0 / (1.0 - f.c * w) - 1.0) / t;
  }
  static cplx eval(const fam::StarlikeFactor& f, cplx z, int order) {
    const cplx h = z * std::exp(integrate_segment(
                           [&](cplx t) { return starlike_log_integrand(f, t); }, z)
                                    .value);
    if (order == 0) return h;
    const cplx w = f.omega->value(z);
    if (order == 1) return z == cplx(0.0) ? cplx(1.0) : h / (z * (1.0 - f.c * w));
    throw Error(ErrorCode::UnsupportedFamily, "second derivative not provided");
  }
  static cplx structural_log_integrand(const fam::StructuralST& f, cplx t) {
    const cplx w = f.omega->value(t);
    if (!(std::abs(w) < 1.0)) throw Error(ErrorCode::NotSchwarz, "|omega| >= 1 at a sample");
    if (t == cplx(0.0)) return f.params.scale() * f.omega->derivative(t);
    return eval_L(f.params, w) / t;
  }
  static cplx eval(const fam::StructuralST& f, cplx z, int order) {
    const cplx g = z * std::exp(integrate_segment(
                           [&](cplx t) { return structural_log_integrand(f, t); }, z)
                                    .value);
    if (order == 0) return g;
    if (order == 1) {
      return z == cplx(0.0) ? cplx(1.0) : g / z * eval_T(f.params, f.omega->value(z));
    }
    throw Error(ErrorCode::UnsupportedFamily, "second derivative not provided");
  }
  static cplx eval(const fam::SampledGrid&, cplx, int) {
    throw Error(ErrorCode::UnsupportedFamily, "sampled grids have no pointwise evaluation");
  }

  Repr repr_;
};

inline FunctionPtr share(FunctionHandle f) { return std::make_shared<const FunctionHandle>(std::move(f)); }

}  // namespace snail
