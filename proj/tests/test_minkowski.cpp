#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <numbers>

#include "wedgegroup/errors.hpp"
#include "wedgegroup/minkowski.hpp"
#include "wedgegroup/sampling.hpp"

using namespace wg;

namespace {

// Symmetric positive square root through the eigendecomposition; the boost
// factor of Lambda = R B is sqrt(Lambda^T Lambda).
Mat4 eigen_sqrt(const Mat4& s)
{
  Eigen::SelfAdjointEigenSolver<Mat4> es(s);
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

TEST(Minkowski, InnerProductSignature)
{
  const FourVector a(2.0, 1.0, 0.5, -1.0);
  EXPECT_DOUBLE_EQ(minkowski_inner(a, a), 4.0 - 1.0 - 0.25 - 1.0);
  EXPECT_EQ(classify_vector({1, 0, 0, 0}), CausalClass::TimelikeFuture);
  EXPECT_EQ(classify_vector({-1, 0.5, 0, 0}), CausalClass::TimelikePast);
  EXPECT_EQ(classify_vector({0, 1, 0, 0}), CausalClass::Spacelike);
  EXPECT_EQ(classify_vector({1, 0, 1, 0}), CausalClass::LightlikeFuture);
  EXPECT_EQ(classify_vector({-1, 0, 0, 1}), CausalClass::LightlikePast);
  EXPECT_EQ(classify_vector({0, 0, 0, 0}), CausalClass::Zero);
}

TEST(Minkowski, FromMatrixValidates)
{
  Mat4 m = Mat4::Identity();
  m(1, 2) = 0.1;
  EXPECT_THROW(LorentzElement::from_matrix(m), Error);
  m = Mat4::Identity();
  m(2, 2) = std::numeric_limits<double>::quiet_NaN();
  try {
    LorentzElement::from_matrix(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonFinite);
  }
}

TEST(Minkowski, MetricPreservedForSampledElements)
{
  for (std::uint64_t i = 0; i < 500; ++i) {
    Sampler s(1, 100, i);
    const Mat4 m = s.lorentz(3.0).matrix();
    EXPECT_LE((m.transpose() * metric() * m - metric()).norm(), 10 * kDefaultTolerance * scale_of(m));
  }
}

TEST(Minkowski, PolarOfIdentityAndPureBoost)
{
  const PolarData id = polar_decompose(LorentzElement());
  EXPECT_EQ(id.angle, 0.0);
  EXPECT_EQ(id.rapidity, 0.0);
  EXPECT_FALSE(id.axis);
  EXPECT_FALSE(id.boost_dir);

  const PolarData b = polar_decompose(make_boost(Vec3::UnitX(), 1.0));
  EXPECT_NEAR(b.rapidity, 1.0, 1e-12);
  ASSERT_TRUE(b.boost_dir);
  EXPECT_NEAR((*b.boost_dir - Vec3::UnitX()).norm(), 0.0, 1e-12);
  EXPECT_NEAR(b.angle, 0.0, 1e-12);
}

TEST(Minkowski, PolarMatchesEigenSquareRootOracle)
{
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Sampler s(2, 100, i);
    const LorentzElement lambda = s.lorentz(3.0);
    const PolarData p = polar_decompose(lambda);
    const Mat4 b = eigen_sqrt(lambda.matrix().transpose() * lambda.matrix());
    const Mat4 r = lambda.matrix() * b.inverse();
    const double scale = lambda.matrix().norm();
    EXPECT_LE((p.boost.matrix() - b).norm(), 1e-9 * scale) << i;
    EXPECT_LE((p.rotation.matrix() - r).norm(), 1e-9 * scale) << i;
    EXPECT_LE((p.rotation.matrix() * p.boost.matrix() - lambda.matrix()).norm(), 1e-10 * std::max(1.0, scale));
  }
}

TEST(Minkowski, PolarFactorsHaveTheirShape)
{
  for (std::uint64_t i = 0; i < 300; ++i) {
    Sampler s(3, 100, i);
    const LorentzElement lambda = s.lorentz(3.0);
    const PolarData p = polar_decompose(lambda);
    const Mat4& b = p.boost.matrix();
    const Mat4& r = p.rotation.matrix();
    EXPECT_LE((b - b.transpose()).norm(), 1e-10 * b.norm());
    EXPECT_GT(Eigen::SelfAdjointEigenSolver<Mat4>(b).eigenvalues().minCoeff(), 0.0);
    const Mat4 gram = lambda.matrix().transpose() * lambda.matrix();
    EXPECT_LE((b * gram - gram * b).norm(), 1e-8 * gram.norm());
    EXPECT_LE((r.transpose() * r - Mat4::Identity()).norm(), 1e-10);
    EXPECT_LE((r.col(0) - Vec4::UnitX()).norm(), 1e-12);
    EXPECT_GE(p.angle, 0.0);
    EXPECT_LE(p.angle, std::numbers::pi);
  }
}

TEST(Minkowski, PolarRejectsImproperAndAntichronous)
{
  Mat4 parity = -Mat4::Identity();
  parity(0, 0) = 1.0;
  EXPECT_THROW(polar_decompose(LorentzElement::from_matrix(parity)), Error);
  EXPECT_THROW(polar_decompose(LorentzElement::from_matrix(-Mat4::Identity())), Error);
}

TEST(Minkowski, OneParameterGroupsAdd)
{
  const Vec3 axis = Vec3(0.3, -1.2, 0.7).normalized();
  for (double a : {0.2, 1.1, 2.5}) {
    for (double b : {-0.4, 0.9, 1.7}) {
      EXPECT_LE((make_rotation(axis, a).matrix() * make_rotation(axis, b).matrix() -
                 make_rotation(axis, a + b).matrix())
                  .norm(),
                1e-12);
      EXPECT_LE(
        (make_boost(axis, a).matrix() * make_boost(axis, b).matrix() - make_boost(axis, a + b).matrix()).norm(),
        1e-12 * make_boost(axis, a + b).matrix().norm());
    }
  }
}

TEST(Minkowski, RotationIsCounterclockwise)
{
  const LorentzElement r = make_rotation(Vec3::UnitZ(), std::numbers::pi / 2);
  const FourVector y = r * FourVector(0, 1, 0, 0);
  EXPECT_NEAR(y.y(), 1.0, 1e-15);
  EXPECT_THROW(make_rotation(Vec3::Zero(), 1.0), Error);
}

TEST(Minkowski, RestFrameBoostMapsToTimeAxis)
{
  for (std::uint64_t i = 0; i < 100; ++i) {
    Sampler s(4, 100, i);
    const FourVector v = s.timelike_future(2.0);
    const double tau = std::sqrt(minkowski_inner(v, v));
    const FourVector image = rest_frame_boost(v) * FourVector::time_axis();
    EXPECT_LE((image.vec() * tau - v.vec()).norm(), 1e-10 * v.vec().norm());
  }
  EXPECT_THROW(rest_frame_boost(FourVector(0, 1, 0, 0)), Error);
}

TEST(Minkowski, ConjugacyClassIsConjugationInvariant)
{
  for (std::uint64_t i = 0; i < 200; ++i) {
    Sampler s(5, 100, i);
    const LorentzElement lambda = s.lorentz(2.0);
    const LorentzElement g = s.lorentz(1.5);
    EXPECT_EQ(classify_conjugacy(lambda), classify_conjugacy(g * lambda * g.inverse()));
  }
  EXPECT_EQ(classify_conjugacy(LorentzElement()), ConjugacyClass::Identity);
  EXPECT_EQ(classify_conjugacy(make_rotation(Vec3::UnitY(), std::numbers::pi)), ConjugacyClass::Involution);
  EXPECT_EQ(classify_conjugacy(make_boost(Vec3::UnitY(), 0.5)), ConjugacyClass::ConjugateIntoL0);
}

TEST(Minkowski, NullRotationIsExceptional)
{
  // exp of a null-rotation generator: unipotent, not the identity
  const double a = 0.7;
  Mat4 m = Mat4::Identity();
  m(0, 0) = 1 + a * a / 2;
  m(0, 1) = a;
  m(0, 3) = -a * a / 2;
  m(1, 0) = a;
  m(1, 3) = -a;
  m(3, 0) = a * a / 2;
  m(3, 1) = a;
  m(3, 3) = 1 - a * a / 2;
  const LorentzElement lambda = LorentzElement::from_matrix(m);
  EXPECT_EQ(classify_conjugacy(lambda), ConjugacyClass::Exceptional);
  EXPECT_THROW(stability_conjugation(lambda), Error);
}

TEST(Minkowski, StabilityConjugationReconstructs)
{
  for (std::uint64_t i = 0; i < 200; ++i) {
    Sampler s(6, 100, i);
    const LorentzElement lambda = s.l0_conjugate(1.0);
    const StabilityConjugation sc = stability_conjugation(lambda);
    const LorentzElement l0 = make_rotation(Vec3::UnitZ(), sc.angle) * make_boost(Vec3::UnitZ(), sc.rapidity);
    const Mat4 rebuilt = sc.frame.matrix() * l0.matrix() * sc.frame.inverse().matrix();
    EXPECT_LE((rebuilt - lambda.matrix()).norm(), 1e-8 * lambda.matrix().squaredNorm());
  }
}
