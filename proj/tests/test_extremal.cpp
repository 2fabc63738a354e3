#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "snail/extremal.hpp"
#include "snail/oracle.hpp"

using namespace snail;

namespace {

ExtremalSpec psi(double a, double b, double g, int n = 1) {
  return {validate_params(a, b, g), n, ExtremalFamily::Psi};
}

ExtremalSpec kfun(double a, double b, double g, int n = 1, KForm form = KForm::Structural) {
  return {validate_params(a, b, g), n, ExtremalFamily::K, form};
}

}  // namespace

TEST(PsiEval, Examples) {
  EXPECT_NEAR(std::abs(psi_eval(psi(0, 0.5, 0.5), 0.5) - 0.5 / 0.5625), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(psi_eval(psi(0.5, 0.5, 0.5), 0.5) - 0.5 * std::exp(2.0 / 3.0)), 0.0,
              1e-15);
  EXPECT_EQ(psi_eval(psi(-0.3, 0.6, 0.2, 3), 0.0), cplx(0.0));
  EXPECT_NEAR(std::abs(psi_derivative(psi(-0.3, 0.6, 0.2, 3), 0.0) - 1.0), 0.0, 1e-15);
}

TEST(PsiEval, PoleOnConchoid) {
  try {
    psi_eval(psi(0.2, 1.0, 0.5), 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundaryPole);
  }
}

TEST(KEval, PrintedFormExample) {
  // printed integrand (1 - t/2)^2
  const ExtremalSpec k = kfun(0, 0.5, 0.5, 1, KForm::AsPrinted);
  EXPECT_NEAR(k_eval(k, 1.0).real(), 1.0 - 0.5 + 1.0 / 12.0, 1e-12);
  EXPECT_NEAR(-k_eval(k, -1.0).real(), 1.0 + 0.5 + 1.0 / 12.0, 1e-12);
}

TEST(KEval, StructuralForm) {
  // K' = Psi/z = (1 - z/2)^-2, so K = z/(1 - z/2)
  const ExtremalSpec k = kfun(0, 0.5, 0.5);
  for (cplx z : {cplx(0.5), cplx(-0.7, 0.2), cplx(0.1, 0.9)}) {
    EXPECT_NEAR(std::abs(k_eval(k, z) - z / (1.0 - 0.5 * z)), 0.0, 1e-12);
  }
  EXPECT_EQ(k_eval(k, 0.0), cplx(0.0));
  EXPECT_NEAR(std::abs(k_derivative(k, 0.0) - 1.0), 0.0, 1e-15);
}

TEST(KEval, SnailAgainstSeries) {
  // exp(t/(1 - t/2)) = sum e_j t^j; integrate term by term
  constexpr int N = 200;
  std::vector<double> g(N + 1, 0.0), e(N + 1, 0.0);
  for (int j = 1; j <= N; ++j) g[j] = std::pow(0.5, j - 1);
  e[0] = 1.0;
  for (int k = 1; k <= N; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * g[j] * e[k - j];
    e[k] = s / k;
  }
  double series = 0.0;
  for (int j = N; j >= 0; --j) series += e[j] * std::pow(0.5, j + 1) / (j + 1);
  EXPECT_NEAR(k_eval(kfun(0.5, 0.5, 0.5), 0.5).real(), series, 1e-10);
}

TEST(KEval, FormsCoincideOnDiagonal) {
  const ExtremalSpec a = kfun(0.3, 0.3, 0.4, 2, KForm::Structural);
  const ExtremalSpec b = kfun(0.3, 0.3, 0.4, 2, KForm::AsPrinted);
  const cplx z(0.4, 0.3);
  EXPECT_EQ(k_eval(a, z), k_eval(b, z));
}

TEST(KEval, BoundaryNeedsBoundedDomain) {
  EXPECT_THROW(k_eval(kfun(0.2, 1.0, 0.5), 1.0), Error);
}

TEST(CoveredRadius, Examples) {
  CoveredRadius c = covered_radius(psi(0, 0.5, 0.5));
  EXPECT_NEAR(c.minus_f_minus_one, 4.0 / 9.0, 1e-14);
  EXPECT_NEAR(c.boundary_min, 4.0 / 9.0, 1e-10);
  EXPECT_FALSE(c.discrepancy);

  c = covered_radius(kfun(0, 0.5, 0.5, 1, KForm::AsPrinted));
  EXPECT_NEAR(c.minus_f_minus_one, 1.583333333333, 1e-10);
  EXPECT_NEAR(c.boundary_min, 0.583333333333, 1e-9);
  EXPECT_TRUE(c.discrepancy);

  c = covered_radius(kfun(0, 0.5, 0.5));
  EXPECT_NEAR(c.minus_f_minus_one, 2.0 / 3.0, 1e-11);
  EXPECT_FALSE(c.discrepancy);

  EXPECT_NEAR(covered_radius(psi(0, 0, 0.5)).minus_f_minus_one, std::exp(-1.0), 1e-15);
  EXPECT_THROW(covered_radius(psi(0.2, 1.0, 0.5)), Error);
}

TEST(CoveredRadius, LimitAgreesWithClosedForm) {
  for (int n : {1, 2, 4}) {
    const ExtremalSpec s = psi(-0.6, 0.3, 0.25, n);
    const CoveredRadius c = covered_radius(s);
    EXPECT_NEAR(c.limit_value, c.minus_f_minus_one, 1e-8);
  }
}

TEST(BoundaryProfile, OffCenterDisc) {
  const BoundaryProfile p = boundary_modulus_profile(psi(0, 0.5, 0.5));
  ASSERT_EQ(p.critical_angles.size(), 2u);
  EXPECT_NEAR(p.critical_values[0], 4.0, 1e-14);
  EXPECT_NEAR(p.critical_values[1], 4.0 / 9.0, 1e-14);
  EXPECT_EQ(p.labels[0], "max");
  EXPECT_EQ(p.labels[1], "min");
}

TEST(BoundaryProfile, Snail) {
  const BoundaryProfile p = boundary_modulus_profile(psi(0.5, 0.5, 0.5));
  EXPECT_NEAR(p.critical_values[0], std::exp(2.0), 1e-13);
  EXPECT_NEAR(std::abs(psi_eval(psi(0.5, 0.5, 0.5), 1.0)), std::exp(2.0), 1e-13);
}

TEST(BoundaryProfile, TenLobes) {
  const ExtremalSpec s = psi(-0.9, 0.4, 0.93, 5);
  const BoundaryProfile p = boundary_modulus_profile(s);
  ASSERT_EQ(p.critical_angles.size(), 10u);
  for (int k = 0; k < 10; ++k) {
    EXPECT_NEAR(p.critical_angles[k], k * kPi / 5, 1e-15);
    const double at = std::abs(psi_eval(s, std::polar(1.0, p.critical_angles[k])));
    EXPECT_NEAR(at, p.critical_values[k], 1e-12);
    const double left = std::abs(psi_eval(s, std::polar(1.0, p.critical_angles[k] - 1e-3)));
    const double right = std::abs(psi_eval(s, std::polar(1.0, p.critical_angles[k] + 1e-3)));
    if (p.labels[k] == "max") {
      EXPECT_GT(at, std::max(left, right));
    } else {
      EXPECT_LT(at, std::min(left, right));
    }
  }
}

TEST(ArgProfile, MatchesArgumentOfPsi) {
  const ExtremalSpec s = psi(-0.4, 0.7, 0.6, 2);
  EXPECT_EQ(boundary_arg_profile(s, 0.0), 0.0);
  for (double t = 0.05; t < kTwoPi; t += 0.3) {
    const double h = boundary_arg_profile(s, t);
    const double arg = std::arg(psi_eval(s, std::polar(1.0, t)));
    EXPECT_NEAR(std::remainder(h - arg, kTwoPi), 0.0, 1e-12);
  }
}

TEST(ArgProfile, Monotonicity) {
  auto monotone = [](const ExtremalSpec& s) {
    double prev = boundary_arg_profile(s, 0.0);
    for (int j = 1; j <= 20000; ++j) {
      const double h = boundary_arg_profile(s, kTwoPi * j / 20000);
      if (h < prev) return false;
      prev = h;
    }
    return true;
  };
  EXPECT_TRUE(monotone(psi(0.4, 0.5, 0.3, 5)));
  EXPECT_FALSE(monotone(psi(-0.9, 0.4, 0.2, 5)));
}

TEST(TaylorHead, Examples) {
  EXPECT_NEAR(taylor_head(psi(0.1, 0.3, 0.5, 2)).c_n1, 0.5, 1e-15);
  EXPECT_NEAR(taylor_head(psi(-0.3, 0.3, 0.5, 1)).c_2n1, 0.5, 1e-15);
  const TaylorHead t = taylor_head(psi(-0.3, 0.6, 1.0 - 1e-12, 3));
  EXPECT_LT(std::abs(t.c_n1) + std::abs(t.c_2n1), 1e-11);
}

TEST(TaylorHead, MatchesFft) {
  const SnailParams p = validate_params(-0.9, 0.4, 0.93);
  for (int n : {1, 2, 5}) {
    const TaylorHead h = taylor_head({p, n, ExtremalFamily::Psi});
    const TaylorExtraction tx = oracle_taylor(FunctionHandle::psi(p, n), 2 * n + 1, 0.5);
    EXPECT_NEAR(tx.coefficients[n + 1].real(), h.c_n1, 1e-10);
    EXPECT_NEAR(tx.coefficients[2 * n + 1].real(), h.c_2n1, 1e-10);
  }
}

TEST(Identities, LogDerivativeOfPsi) {
  const SnailParams p = validate_params(-0.5, 0.8, 0.2);
  for (int n : {1, 3}) {
    const ExtremalSpec s{p, n, ExtremalFamily::Psi};
    for (int j = 0; j < 50; ++j) {
      const cplx z = std::polar(0.85, kTwoPi * j / 50);
      const cplx lhs = z * psi_derivative(s, z) / psi_eval(s, z);
      EXPECT_NEAR(std::abs(lhs - eval_T(p, std::pow(z, n))), 0.0, 1e-12);
    }
  }
}

TEST(Identities, ConvexStructureOfK) {
  const SnailParams p = validate_params(-0.5, 0.8, 0.2);
  const ExtremalSpec s{p, 2, ExtremalFamily::K};
  const ExtremalSpec printed{p, 2, ExtremalFamily::K, KForm::AsPrinted};
  const cplx z(0.3, 0.5);
  const cplx target = eval_T(p, z * z);
  EXPECT_NEAR(std::abs(1.0 + z * k_second_derivative(s, z) / k_derivative(s, z) - target), 0.0,
              1e-13);
  EXPECT_GT(std::abs(1.0 + z * k_second_derivative(printed, z) / k_derivative(printed, z) - target),
            1e-2);
}
