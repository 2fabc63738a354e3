#include <gtest/gtest.h>

#include <cmath>

#include "snail/classes.hpp"

using namespace snail;

TEST(Thresholds, Examples) {
  Thresholds t = thresholds(0.0, 0.5);
  EXPECT_NEAR(t.T0, 0.25, 1e-15);
  EXPECT_NEAR(t.gamma0, -0.125, 1e-15);
  EXPECT_FALSE(t.in_B1);
  EXPECT_NEAR(thresholds(-0.5, 0.5).T0, 0.625, 1e-15);
  EXPECT_THROW(thresholds(0.0, 1.0), Error);
}

TEST(Thresholds, AgreeWithRealPartMinimum) {
  for (double a : {-0.7, -0.2, 0.1, 0.5}) {
    for (double b : {0.15, 0.55, 0.8}) {
      if (b < a) continue;
      const double T0 = thresholds(a, b).T0;
      const ReExtrema re = re_extrema(validate_params(a, b, 0.0));
      EXPECT_NEAR(T0, 1.0 + 1.0 / (2.0 * re.min_re), 1e-12) << a << " " << b;
    }
  }
}

TEST(ClassAdmissible, Examples) {
  EXPECT_TRUE(class_admissible({validate_params(-0.5, 0.5, 0.7), ClassKind::Starlike}).admissible);
  EXPECT_FALSE(class_admissible({validate_params(-0.5, 0.5, 0.6), ClassKind::Starlike}).admissible);
  EXPECT_TRUE(class_admissible({validate_params(0.0, 0.5, 0.3), ClassKind::Convex}).admissible);
  for (double a : {0.1, 0.4, 0.9}) {
    const Admissibility adm = class_admissible({validate_params(-a, a, 0.5), ClassKind::Starlike});
    EXPECT_FALSE(adm.admissible);
    EXPECT_FALSE(adm.diagnostic.empty());
  }
  // snail with gamma = 1/2: admissible up to the root of 8a(1 - a^2)^2 = (1 + a^2)^2
  EXPECT_TRUE(class_admissible({validate_params(0.61, 0.61, 0.5), ClassKind::Starlike}).admissible);
  EXPECT_FALSE(class_admissible({validate_params(0.62, 0.62, 0.5), ClassKind::Starlike}).admissible);
  EXPECT_FALSE(class_admissible({validate_params(0.2, 1.0, 0.5), ClassKind::Starlike}).admissible);
  EXPECT_THROW(require_admissible({validate_params(0.62, 0.62, 0.5), ClassKind::Starlike}), Error);
}

TEST(Membership, OffCenterDiscExamples) {
  const ClassSpec st{validate_params(0.0, 0.5, 0.5), ClassKind::Starlike};
  MembershipVerdict v = membership(st, FunctionHandle::monomial(2, 0.5));
  EXPECT_EQ(v.item, 1);
  EXPECT_NEAR(v.L, 2.0, 1e-15);
  EXPECT_NEAR(v.bound, 2.0 / 3.0, 1e-15);
  EXPECT_TRUE(v.member);
  EXPECT_FALSE(membership(st, FunctionHandle::monomial(2, 0.7)).member);

  v = membership(st, FunctionHandle::koebe_like(0.4));
  EXPECT_EQ(v.item, 3);
  EXPECT_NEAR(v.bound, 0.5, 1e-15);

  v = membership(st, FunctionHandle::exp_linear(cplx(0.0, 1.9)));
  EXPECT_EQ(v.item, 5);
  EXPECT_NEAR(v.bound, 2.0, 1e-15);
  EXPECT_TRUE(v.member);

  const ClassSpec cv{st.params, ClassKind::Convex};
  v = membership(cv, FunctionHandle::monomial(3, 0.2));
  EXPECT_EQ(v.item, 2);
  EXPECT_NEAR(v.value, 0.6, 1e-15);
  EXPECT_EQ(membership(cv, FunctionHandle::inverse_linear(0.1)).item, 4);
  EXPECT_EQ(membership(cv, FunctionHandle::exp_minus_one(0.1)).item, 6);

  try {
    membership(cv, FunctionHandle::koebe_like(0.1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedFamily);
  }
}

TEST(Membership, SharpOnCentredDisc) {
  // alpha = beta = 0: T(D) is the disc about 1 of radius 2(1 - gamma)
  const ClassSpec st{validate_params(0.0, 0.0, 0.5), ClassKind::Starlike};
  const double bound = membership(st, FunctionHandle::monomial(3, 0.0)).bound;
  EXPECT_TRUE(subordination_check(st, FunctionHandle::monomial(3, (1 - 1e-3) * bound)).accepted);
  EXPECT_FALSE(subordination_check(st, FunctionHandle::monomial(3, (1 + 1e-3) * bound)).accepted);
}

TEST(Membership, RotationInvariance) {
  const ClassSpec st{validate_params(0.0, 0.0, 0.6), ClassKind::Starlike};
  const double a = 0.2;
  for (cplx mu : {cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)}) {
    // conj(mu) f(mu z) for f = z + a z^3
    const cplx rotated = a * mu * mu;
    const MembershipVerdict v = membership(st, FunctionHandle::monomial(3, rotated));
    EXPECT_NEAR(v.value, a, 1e-15);
    const SubordinationVerdict s = subordination_check(st, FunctionHandle::monomial(3, rotated));
    EXPECT_TRUE(s.accepted);
  }
}

TEST(Subordination, Examples) {
  const SnailParams p = validate_params(0.0, 0.5, 0.5);
  EXPECT_TRUE(subordination_check(p, FunctionHandle::map_T(p), Field::Raw).accepted);
  EXPECT_TRUE(subordination_check(p, FunctionHandle::map_T(p, 2), Field::Raw).accepted);
  const SubordinationVerdict big =
      subordination_check(p, FunctionHandle::map_T(p, 1, 1.1), Field::Raw);
  EXPECT_FALSE(big.accepted);
  EXPECT_LT(big.worst_margin, 0.0);
}

TEST(Subordination, HalfPlaneFallback) {
  const SnailParams p = validate_params(0.3, 1.0, 0.5);
  const SubordinationVerdict v =
      subordination_check(p, FunctionHandle::map_T(p, 1, 0.9), Field::Raw);
  EXPECT_TRUE(v.analytic_fallback);
  EXPECT_TRUE(v.accepted);
}

TEST(Subordination, ExtremalFunctionsAreMembers) {
  const SnailParams p = validate_params(-0.3, 0.6, 0.6);
  const ClassSpec st{p, ClassKind::Starlike};
  const ClassSpec cv{p, ClassKind::Convex};
  EXPECT_TRUE(subordination_check(st, FunctionHandle::psi(p, 1)).accepted);
  SubordinationOptions o;
  o.theta_samples = 256;
  o.radii = {0.5, 0.9};
  EXPECT_TRUE(subordination_check(cv, FunctionHandle::k(p, 1), o).accepted);
}

TEST(PhiTransform, OffCenterDiscExample) {
  const SnailParams p = validate_params(0.0, 0.5, 0.5);
  const FunctionHandle phi = phi_transform(p, share(FunctionHandle::psi(p, 1)));
  EXPECT_NEAR(phi.value(0.5).real(), 1.0 / 0.5625 - 1.0, 1e-11);
  EXPECT_NEAR(std::abs(phi.derivative(0.0) - 1.0), 0.0, 1e-14);
  EXPECT_EQ(phi.value(0.0), cplx(0.0));
}

TEST(PhiTransform, ConvexOnSamples) {
  const SnailParams p = validate_params(-0.2, 0.5, 0.55);
  const FunctionHandle phi = phi_transform(p, share(FunctionHandle::psi(p, 1)));
  for (int i = 1; i <= 10; ++i) {
    for (int j = 0; j < 100; ++j) {
      const cplx z = std::polar(0.095 * i, kTwoPi * j / 100);
      EXPECT_GT(field_value(phi, Field::OnePlusZfSecondOverFPrime, z).real(), 0.0);
    }
  }
}

TEST(StDecomposition, ClosedForms) {
  const SnailParams p = validate_params(0.25, 0.5, 0.4);
  const StDecomposition d = st_decomposition(p, share(FunctionHandle::power(1.0, 1)));
  for (cplx z : {cplx(0.3, 0.1), cplx(-0.6, 0.2), cplx(0.0, 0.8)}) {
    EXPECT_NEAR(std::abs(d.h.value(z) - z / (1.0 - 0.5 * z)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(d.g.value(z) - z / (1.0 - 0.25 * z)), 0.0, 1e-12);
  }
  EXPECT_NEAR(d.q, 1.2 / 0.25, 1e-14);

  const StDecomposition d2 = st_decomposition(p, share(FunctionHandle::power(1.0, 2)));
  const cplx z(0.4, -0.3);
  EXPECT_NEAR(std::abs(d2.h.value(z) - z * std::pow(1.0 - 0.5 * z * z, -0.5)), 0.0, 1e-12);

  const StDecomposition d0 = st_decomposition(p, share(FunctionHandle::constant(0.0)));
  EXPECT_NEAR(std::abs(d0.reconstruct(z) - z), 0.0, 1e-14);
}

TEST(StDecomposition, RoundTripMatchesStructuralFormula) {
  const SnailParams p = validate_params(-0.4, 0.7, 0.3);
  const StDecomposition d = st_decomposition(p, share(FunctionHandle::power(cplx(0.6, 0.3), 2)));
  for (int i = 1; i <= 6; ++i) {
    for (int j = 0; j < 24; ++j) {
      const cplx z = std::polar(0.15 * i, kTwoPi * j / 24);
      EXPECT_NEAR(std::abs(d.reconstruct(z) - d.structural.value(z)), 0.0, 1e-9);
    }
  }
}

TEST(StDecomposition, Errors) {
  const SnailParams p = validate_params(0.25, 0.5, 0.4);
  try {
    st_decomposition(p, share(FunctionHandle::power(1.2, 1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSchwarz);
  }
  EXPECT_THROW(st_decomposition(validate_params(0.0, 0.5, 0.4),
                                share(FunctionHandle::power(1.0, 1))),
               Error);
}

TEST(GrowthBounds, StarlikeExample) {
  const GrowthBounds g = growth_distortion_bounds({validate_params(0.0, 0.5, 0.5),
                                                   ClassKind::Starlike},
                                                  0.5);
  EXPECT_NEAR(g.f_max, 0.5 / 0.5625, 1e-14);
  EXPECT_NEAR(g.f_min, 0.32, 1e-14);
  EXPECT_NEAR(*g.covered_radius, 4.0 / 9.0, 1e-14);
  ASSERT_TRUE(g.fprime_min && g.fprime_max);
  EXPECT_LT(*g.fprime_min, *g.fprime_max);
}

TEST(GrowthBounds, ConvexUsesStructuralK) {
  const GrowthBounds g = growth_distortion_bounds({validate_params(0.0, 0.5, 0.5),
                                                   ClassKind::Convex},
                                                  1.0);
  // K(z) = z/(1 - z/2): K(1) = 2 and -K(-1) = 2/3
  EXPECT_NEAR(g.f_max, 2.0, 1e-11);
  EXPECT_NEAR(g.f_min, 2.0 / 3.0, 1e-11);
}

TEST(GrowthBounds, ArgBoundVanishesAtOrigin) {
  const GrowthBounds g =
      growth_distortion_bounds({validate_params(-0.2, 0.5, 0.7), ClassKind::Starlike}, 1e-9);
  EXPECT_LT(g.arg_bound, 1e-8);
}

TEST(GrowthBounds, StarlikeModulusWithinBounds) {
  const SnailParams p = validate_params(0.2, 0.6, 0.5);
  const ExtremalSpec es{p, 2, ExtremalFamily::Psi};
  const GrowthBounds g = growth_distortion_bounds({p, ClassKind::Starlike}, 0.7);
  for (int j = 0; j < 360; ++j) {
    const double m = std::abs(psi_eval(es, std::polar(0.7, kTwoPi * j / 360)));
    EXPECT_LE(m, g.f_max + 1e-12);
    EXPECT_GE(m, g.f_min - 1e-12);
  }
}

TEST(AnalyticBounds, Examples) {
  const AnalyticBounds a = analytic_bounds({validate_params(0.0, 0.5, 0.75), ClassKind::Starlike},
                                           0.5);
  ASSERT_TRUE(a.re_fz_lower.has_value());
  EXPECT_NEAR(*a.re_fz_lower, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(a.re_root_lower, 2.0 / 3.0, 1e-15);

  const AnalyticBounds b =
      analytic_bounds({validate_params(-0.5, 0.5, 0.75), ClassKind::Starlike}, 1.0);
  EXPECT_NEAR(b.arg_bound, 0.5 * std::asin(0.8), 1e-15);
  EXPECT_NEAR(b.arg_bound, 0.463648, 1e-6);

  EXPECT_NEAR(analytic_bounds({validate_params(-0.5, 0.5, 0.75), ClassKind::Starlike}, 0.0)
                  .arg_bound,
              0.0, 1e-300);
}

TEST(AnalyticBounds, WindowFailureLeavesFieldAbsent) {
  const AnalyticBounds a = analytic_bounds({validate_params(0.0, 0.5, 0.5), ClassKind::Starlike},
                                           0.5);
  EXPECT_FALSE(a.re_fz_lower.has_value());
  try {
    a.require_re_fz_lower();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConditionUnmet);
  }
  EXPECT_THROW(analytic_bounds({validate_params(0.3, 0.3, 0.5), ClassKind::Starlike}, 0.5), Error);
}

TEST(AnalyticBounds, RootLowerBoundHoldsForPsi) {
  const SnailParams p = validate_params(-0.4, 0.6, 0.3);
  const AnalyticBounds a = analytic_bounds({p, ClassKind::Starlike}, 0.5);
  const ExtremalSpec es{p, 1, ExtremalFamily::Psi};
  for (int i = 1; i <= 20; ++i) {
    for (int j = 0; j < 90; ++j) {
      const cplx z = std::polar(0.999 * i / 20, kTwoPi * j / 90);
      const cplx root = std::exp(std::log(psi_eval(es, z) / z) / a.q);
      EXPECT_GT(root.real(), a.re_root_lower);
    }
  }
}
