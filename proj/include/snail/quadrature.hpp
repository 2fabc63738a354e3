#pragma once

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <complex>
#include <functional>
#include <memory>
#include <string>

#include "snail/error.hpp"
#include "snail/numeric.hpp"

namespace snail {

struct QuadResult {
  cplx value;
  double error = 0.0;
  int intervals = 0;
};

using RealToComplex = std::function<cplx(double)>;

namespace detail {

inline void gsl_quiet() {
  static const bool once = [] {
    gsl_set_error_handler_off();
    return true;
  }();
  (void)once;
}

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};

struct PartCtx {
  const RealToComplex* f;
  bool imag;
  std::unique_ptr<Error> caught;
};

inline double part_trampoline(double x, void* data) {
  auto* ctx = static_cast<PartCtx*>(data);
  if (ctx->caught) return 0.0;
  try {
    const cplx v = (*ctx->f)(x);
    return ctx->imag ? v.imag() : v.real();
  } catch (const Error& e) {
    ctx->caught = std::make_unique<Error>(e);
    return 0.0;
  }
}

}  // namespace detail

// Adaptive 21-point Gauss-Kronrod (GSL QAG) on the real and imaginary parts
inline QuadResult integrate(const RealToComplex& f, double a, double b, double abs_tol = 1e-12,
                            int max_intervals = 1 << 15) {
  detail::gsl_quiet();
  std::unique_ptr<gsl_integration_workspace, detail::WorkspaceDeleter> ws(
      gsl_integration_workspace_alloc(static_cast<std::size_t>(max_intervals)));
  QuadResult out;
  double parts[2] = {0.0, 0.0};
  for (int k = 0; k < 2; ++k) {
    detail::PartCtx ctx{&f, k == 1, nullptr};
    gsl_function F{&detail::part_trampoline, &ctx};
    double err = 0.0;
    const int status = gsl_integration_qag(&F, a, b, abs_tol / 2.0, 0.0,
                                           static_cast<std::size_t>(max_intervals),
                                           GSL_INTEG_GAUSS21, ws.get(), &parts[k], &err);
    if (ctx.caught) throw *ctx.caught;
    if (status != GSL_SUCCESS) {
      throw Error(ErrorCode::QuadratureFailure, gsl_strerror(status));
    }
    out.error += err;
    out.intervals += static_cast<int>(ws->size);
  }
  out.value = {parts[0], parts[1]};
  return out;
}

// Integral of g along the straight segment from 0 to z
inline QuadResult integrate_segment(const std::function<cplx(cplx)>& g, cplx z,
                                    double abs_tol = 1e-12, int max_intervals = 1 << 15) {
  if (z == cplx(0.0)) return {0.0, 0.0, 0};
  return integrate([&](double s) { return g(s * z) * z; }, 0.0, 1.0, abs_tol, max_intervals);
}

}  // namespace snail
