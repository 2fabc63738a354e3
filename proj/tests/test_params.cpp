#include <gtest/gtest.h>

#include <cmath>

#include "snail/constants.hpp"
#include "snail/params.hpp"

using namespace snail;

namespace {

ErrorCode code_of(double a, double b, double g) {
  try {
    validate_params(a, b, g);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ConditionUnmet;
}

}  // namespace

TEST(ValidateParams, DiscIsValid) {
  const SnailParams p = validate_params(0.0, 0.0, 0.5);
  EXPECT_FALSE(p.swapped);
  EXPECT_EQ(classify_domain(p).kind, DomainKind::Disc);
  EXPECT_DOUBLE_EQ(p.scale(), 1.0);
}

TEST(ValidateParams, SwapsIntoOrder) {
  const SnailParams p = validate_params(0.4, -0.9, 0.93);
  EXPECT_TRUE(p.swapped);
  EXPECT_EQ(p.alpha, -0.9);
  EXPECT_EQ(p.beta, 0.4);
  EXPECT_EQ(p.gamma, 0.93);
}

TEST(ValidateParams, Rejections) {
  EXPECT_EQ(code_of(1.0, 1.0, 0.5), ErrorCode::ForbiddenCorner);
  EXPECT_EQ(code_of(-1.0, 1.0, 0.5), ErrorCode::ForbiddenCorner);
  EXPECT_EQ(code_of(-1.0, -1.0, 0.5), ErrorCode::ForbiddenCorner);
  EXPECT_EQ(code_of(1.2, 0.0, 0.5), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of(0.0, 0.0, 1.0), ErrorCode::GammaOutOfRange);
  EXPECT_EQ(code_of(0.0, 0.0, -0.1), ErrorCode::GammaOutOfRange);
  EXPECT_EQ(code_of(std::nan(""), 0.0, 0.5), ErrorCode::OutOfRange);
}

TEST(ValidateParams, AlphaOneSwapsToConchoid) {
  const SnailParams p = validate_params(1.0, 0.3, 0.2);
  EXPECT_TRUE(p.swapped);
  EXPECT_EQ(p.beta, 1.0);
  EXPECT_EQ(classify_domain(p).kind, DomainKind::ConchoidRight);
}

TEST(ErrorText, CarriesCode) {
  try {
    validate_params(1.0, 1.0, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("ForbiddenCorner"), std::string::npos);
  }
}

TEST(ClassifyDomain, Examples) {
  EXPECT_EQ(classify_domain(validate_params(0.0, 1.0, 0.5)).kind, DomainKind::HalfPlane);
  EXPECT_EQ(classify_domain(validate_params(-1.0, 0.0, 0.5)).kind, DomainKind::HalfPlane);

  const DomainClass s = classify_domain(validate_params(0.2, 0.2, 0.5));
  EXPECT_EQ(s.kind, DomainKind::PascalSnail);
  EXPECT_EQ(s.shape, Shape::Convex);
  EXPECT_NEAR(*s.witness, 0.267949192431, 1e-12);

  const DomainClass b = classify_domain(validate_params(-0.6, 0.6, 0.5));
  EXPECT_EQ(b.kind, DomainKind::BoothLemniscate);
  EXPECT_EQ(b.shape, Shape::Concave);
  EXPECT_NEAR(*b.witness, 0.414213562373, 1e-12);

  EXPECT_EQ(classify_domain(validate_params(0.0, 0.5, 0.5)).kind, DomainKind::OffCenterDisc);
  EXPECT_EQ(classify_domain(validate_params(0.0, 0.5, 0.5)).shape, Shape::NotApplicable);
  EXPECT_EQ(classify_domain(validate_params(0.3, 1.0, 0.5)).kind, DomainKind::ConchoidRight);
  EXPECT_EQ(classify_domain(validate_params(-1.0, -0.3, 0.5)).kind, DomainKind::ConchoidLeft);
  EXPECT_EQ(classify_domain(validate_params(-0.3, 0.6, 0.5)).kind, DomainKind::GeneralizedSnail);
}

TEST(ClassifyDomain, ThresholdsAreExact) {
  EXPECT_EQ(classify_domain(validate_params(kSnailThreshold, kSnailThreshold, 0.1)).shape,
            Shape::FlattenedBoundary);
  EXPECT_EQ(classify_domain(validate_params(-kBoothThreshold, kBoothThreshold, 0.1)).shape,
            Shape::FlattenedBoundary);
  EXPECT_EQ(classify_domain(validate_params(-0.41, 0.41, 0.1)).shape, Shape::Convex);
  EXPECT_EQ(classify_domain(validate_params(-0.42, 0.42, 0.1)).shape, Shape::Concave);
}

TEST(ClassifyDomain, GeneralizedSnailUsesConvexityMinimum) {
  // small parameters keep the functional positive
  const DomainClass c = classify_domain(validate_params(-0.1, 0.15, 0.3));
  EXPECT_EQ(c.shape, Shape::Convex);
  EXPECT_GT(*c.witness, 0.0);
  const DomainClass d = classify_domain(validate_params(0.6, 0.8, 0.3));
  EXPECT_EQ(d.shape, Shape::Concave);
  EXPECT_LT(*d.witness, 0.0);
}

TEST(ConvexityFunctional, SnailThresholdIsAZero) {
  // at |alpha| = 2 - sqrt 3 the minimum touches zero
  EXPECT_NEAR(convexity_minimum(kSnailThreshold, kSnailThreshold).fx, 0.0, 1e-10);
  EXPECT_NEAR(convexity_minimum(-kBoothThreshold, kBoothThreshold).fx, 0.0, 1e-10);
}

TEST(CurveConstants, Booth) {
  const CurveConstants cc = curve_constants(validate_params(-0.5, 0.5, 0.5));
  EXPECT_NEAR(*cc.a, 0.0, 1e-15);
  EXPECT_NEAR(*cc.c, 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(*cc.d, 0.8, 1e-14);
  EXPECT_NEAR(*cc.q, -1.0, 1e-15);
  EXPECT_FALSE(cc.e.has_value());
}

TEST(CurveConstants, SnailFields) {
  const CurveConstants cc = curve_constants(validate_params(0.5, 0.5, 0.0));
  EXPECT_NEAR(*cc.e, 0.8, 1e-15);
  EXPECT_NEAR(*cc.snail_a, 2.0 * 1.25 / 0.5625, 1e-13);
  EXPECT_FALSE(cc.q.has_value());
  EXPECT_THROW(cc.require_q(), Error);
  try {
    cc.p(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateExponent);
  }
}

TEST(CurveConstants, BoundsOfOffCenterDisc) {
  const CurveConstants cc = curve_constants(validate_params(0.0, 0.5, 0.5));
  EXPECT_NEAR(*cc.L0, -2.0 / 3.0, 1e-15);
  EXPECT_NEAR(*cc.M0, 2.0, 1e-15);
  EXPECT_NEAR(cc.p(2), 0.5 / (2.0 * -0.5), 1e-15);
}

TEST(CurveConstants, UnboundedLeavesFieldsAbsent) {
  const CurveConstants cc = curve_constants(validate_params(0.3, 1.0, 0.5));
  EXPECT_FALSE(cc.a.has_value());
  EXPECT_FALSE(cc.M0.has_value());
  EXPECT_TRUE(cc.L0.has_value());
}

TEST(CurveConstants, Invariants) {
  for (double a : {-0.8, -0.3, 0.0, 0.2, 0.7}) {
    for (double b : {-0.6, 0.0, 0.1, 0.5, 0.9}) {
      const SnailParams p = validate_params(a, b, 0.35);
      const CurveConstants cc = curve_constants(p);
      EXPECT_GT(*cc.c, 0.0);
      EXPECT_EQ(*cc.d > 0.0, 1.0 + p.alpha * p.beta > 0.0);
      EXPECT_EQ(std::abs(*cc.a) < 1e-15, p.alpha + p.beta == 0.0);
      // c = d exactly when alpha = beta
      EXPECT_EQ(std::abs(*cc.c - *cc.d) < 1e-12, p.alpha == p.beta);
      if (cc.q) EXPECT_NEAR(*cc.q * (p.beta - p.alpha), -p.scale(), 1e-14);
    }
  }
}
