#pragma once

#include <cmath>
#include <optional>

#include "snail/error.hpp"
#include "snail/extrema.hpp"
#include "snail/params.hpp"

namespace snail {

struct CurveConstants {
  std::optional<double> a;
  std::optional<double> c;
  std::optional<double> d;
  std::optional<double> e;
  std::optional<double> snail_a;
  std::optional<double> q;
  std::optional<double> L0;
  std::optional<double> M0;
  double alpha_minus_beta = 0.0;
  double one_minus_gamma = 1.0;

  double require_q() const {
    if (!q) throw Error(ErrorCode::DegenerateExponent, "exponent q needs alpha != beta");
    return *q;
  }

  double p(int n) const {
    if (alpha_minus_beta == 0.0) {
      throw Error(ErrorCode::DegenerateExponent, "exponent p needs alpha != beta");
    }
    if (n < 1) throw Error(ErrorCode::OutOfRange, "n must be positive");
    return one_minus_gamma / (n * alpha_minus_beta);
  }
};

inline CurveConstants curve_constants(const SnailParams& p) {
  const double al = p.alpha;
  const double be = p.beta;
  const double k = p.scale();
  CurveConstants cc;
  cc.alpha_minus_beta = al - be;
  cc.one_minus_gamma = 1.0 - p.gamma;
  if (p.bounded()) {
    const double pa = 1.0 - al * al;
    const double pb = 1.0 - be * be;
    cc.a = k * (al + be) / (pa * pb);
    cc.c = k * (1.0 + al * be) / (pa * pb);
    cc.d = k * (1.0 + al * be) / ((1.0 - al * be) * std::sqrt(pa * pb));
  }
  if (al == be) {
    cc.e = 2.0 * al / (1.0 + al * al);
    cc.snail_a = k * (1.0 + al * al) / ((1.0 - al * al) * (1.0 - al * al));
  } else {
    cc.q = k / (al - be);
  }
  const ReExtrema re = re_extrema(p);
  cc.L0 = re.L0;
  cc.M0 = re.M0;
  return cc;
}

}  // namespace snail
