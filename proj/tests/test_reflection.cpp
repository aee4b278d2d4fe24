#include <gtest/gtest.h>

#include <numbers>

#include "wedgegroup/errors.hpp"
#include "wedgegroup/reflection.hpp"
#include "wedgegroup/sampling.hpp"

using namespace wg;

TEST(Reflection, AxisReflectionIsAReflection)
{
  const Reflection r = reflection_about_axis(Vec3::UnitX());
  Mat4 expected = Mat4::Identity();
  expected(0, 0) = -1;
  expected(1, 1) = -1;
  EXPECT_EQ(r.linear().matrix(), expected);
  EXPECT_TRUE(is_reflection(r.element()));
}

TEST(Reflection, NonReflectionsAreRejected)
{
  EXPECT_FALSE(is_reflection(PoincareElement()));
  // total inversion fixes a point, not a plane
  EXPECT_FALSE(is_reflection(PoincareElement(LorentzElement::from_matrix(-Mat4::Identity()))));
  // rotation by pi: an involution but not time-reversing
  EXPECT_FALSE(is_reflection(PoincareElement(make_rotation(Vec3::UnitZ(), std::numbers::pi))));
  // translation along the fixed plane breaks the involution
  EXPECT_FALSE(is_reflection(PoincareElement(reflection_about_axis(Vec3::UnitX()).linear(), {0, 0, 1, 0})));
  EXPECT_TRUE(is_reflection(PoincareElement(reflection_about_axis(Vec3::UnitX()).linear(), {1, 2, 0, 0})));
  EXPECT_THROW(Reflection::from_element(PoincareElement()), Error);
}

TEST(Reflection, WedgeReflectionSwapsWithComplement)
{
  for (std::uint64_t i = 0; i < 100; ++i) {
    Sampler s(21, 0, i);
    const Wedge w = act(s.poincare(1.0, 1.5), standard_wedge(Vec3::UnitX()));
    const Reflection r = reflection_for_wedge(w);
    EXPECT_TRUE(is_reflection(r.element()));
    for (int k = 0; k < 20; ++k) {
      const FourVector x = s.vector(3.0);
      if (std::abs(w.slack(x)) < 1e-6) continue;
      EXPECT_TRUE(!w.contains(x) || causal_complement(w).contains(r.element() * x));
    }
    const EdgePlane plane = fixed_plane(r);
    for (double a : {-1.0, 0.3, 4.0}) {
      const FourVector x = plane.at(a, 2.0 - a);
      EXPECT_LE((r.element() * x - x).vec().norm(), 1e-9);
      EXPECT_TRUE(edge(w).contains(x, 1e-8));
    }
  }
}

TEST(Reflection, FactorizationOfSampledElements)
{
  for (std::uint64_t i = 0; i < 2000; ++i) {
    Sampler s(22, 0, i);
    const LorentzElement lambda = s.lorentz(3.0);
    const auto [l1, l2] = factor_into_reflections(lambda);
    EXPECT_TRUE(is_reflection(l1.element(), 1e-9));
    EXPECT_TRUE(is_reflection(l2.element(), 1e-9));
    EXPECT_LE((l1.linear().matrix() * l2.linear().matrix() - lambda.matrix()).norm(), 1e-9);
  }
}

TEST(Reflection, IdentityFactorsIntoEqualReflections)
{
  const auto [l1, l2] = factor_into_reflections(LorentzElement());
  EXPECT_EQ(l1.linear().matrix(), l2.linear().matrix());
  EXPECT_EQ(l1.linear().matrix(), reflection_about_axis(Vec3::UnitX()).linear().matrix());
}

TEST(Reflection, ReflectionInvertsPolarFactors)
{
  for (std::uint64_t i = 0; i < 300; ++i) {
    Sampler s(23, 0, i);
    const PolarData p = polar_decompose(s.lorentz(3.0));
    const Vec3 e = admissible_axis(p.axis, p.boost_dir);
    const Mat4 le = reflection_about_axis(e).linear().matrix();
    const Mat4& b = p.boost.matrix();
    const Mat4& r = p.rotation.matrix();
    EXPECT_LE((le * b - p.boost.inverse().matrix() * le).norm(), 1e-12 * b.norm());
    EXPECT_LE((r * le - le * p.rotation.inverse().matrix()).norm(), 1e-12 * b.norm());
  }
}

TEST(Reflection, ExplicitAxisMustBeAdmissible)
{
  const LorentzElement lambda = make_boost(Vec3::UnitX(), 0.5);
  EXPECT_NO_THROW(factor_into_reflections(lambda, Vec3::UnitY()));
  try {
    factor_into_reflections(lambda, Vec3::UnitX());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAdmissible);
  }
}

TEST(Reflection, FactorizationIsConjugationEquivariant)
{
  for (std::uint64_t i = 0; i < 200; ++i) {
    Sampler s(24, 0, i);
    const LorentzElement lambda = s.lorentz(2.0);
    const LorentzElement g = s.rotation();
    const LorentzElement conj = g * lambda * g.inverse();
    const PolarData p = polar_decompose(lambda);
    const Vec3 e = admissible_axis(p.axis, p.boost_dir);
    const Vec3 ge = g.matrix().bottomRightCorner<3, 3>() * e;
    const auto [l1, l2] = factor_into_reflections(lambda, e);
    const auto [c1, c2] = factor_into_reflections(conj, ge);
    const Mat4 gm = g.matrix();
    const Mat4 gi = g.inverse().matrix();
    EXPECT_LE((c1.linear().matrix() - gm * l1.linear().matrix() * gi).norm(), 1e-9 * lambda.matrix().norm());
    EXPECT_LE((c2.linear().matrix() - gm * l2.linear().matrix() * gi).norm(), 1e-9 * lambda.matrix().norm());
  }
}

TEST(Reflection, NullRotationStillFactors)
{
  const double a = 1.3;
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
  const auto [l1, l2] = factor_into_reflections(lambda);
  EXPECT_TRUE(is_reflection(l1.element()));
  EXPECT_TRUE(is_reflection(l2.element()));
  EXPECT_LE((l1.linear().matrix() * l2.linear().matrix() - m).norm(), 1e-9);
  EXPECT_THROW(verify_ambiguity_classification(lambda, 3, 1), Error);
}

TEST(Reflection, StabilityGroupParametersAdd)
{
  const StabilityGroupElement a{Vec3::UnitY(), 0.4, 0.3};
  const StabilityGroupElement b{Vec3::UnitY(), 1.1, -0.8};
  const StabilityGroupElement ab = a * b;
  EXPECT_NEAR(ab.angle, 1.5, 1e-15);
  EXPECT_NEAR(ab.rapidity, -0.5, 1e-15);
  EXPECT_LE((a.matrix().matrix() * b.matrix().matrix() - ab.matrix().matrix()).norm(), 1e-12);
  // commutes with lambda_{e0}
  const Mat4 l = reflection_about_axis(Vec3::UnitY()).linear().matrix();
  EXPECT_LE((a.matrix().matrix() * l - l * a.matrix().matrix()).norm(), 1e-12);
}

TEST(Reflection, AmbiguityConjugateRequiresCommuting)
{
  const LorentzElement lambda = stability_group_element(Vec3::UnitZ(), 0.7, 0.4);
  const ReflectionPair pair = factor_into_reflections(lambda);
  const LorentzElement c = stability_group_element(Vec3::UnitZ(), 1.2, -0.3);
  const auto [m1, m2] = ambiguity_conjugate(c, pair);
  EXPECT_TRUE(is_reflection(m1.element()));
  EXPECT_LE((m1.linear().matrix() * m2.linear().matrix() - lambda.matrix()).norm(), 1e-10);
  try {
    ambiguity_conjugate(make_boost(Vec3::UnitX(), 0.5), pair);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCommuting);
  }
}

TEST(Reflection, AmbiguityClassificationRecoversConjugators)
{
  for (std::uint64_t i = 0; i < 30; ++i) {
    Sampler s(25, 0, i);
    const CheckReport r = verify_ambiguity_classification(s.l0_conjugate(1.0), 10, i);
    EXPECT_TRUE(r.pass) << i << " " << r.max_residual;
    EXPECT_LE(r.max_residual, 1e-8);
  }
  EXPECT_THROW(verify_ambiguity_classification(make_rotation(Vec3::UnitX(), std::numbers::pi), 3, 1), Error);
}

TEST(Reflection, EveryReflectionIsConjugateToTheReference)
{
  const Reflection l0 = reflection_about_axis(Vec3::UnitX());
  for (std::uint64_t i = 0; i < 300; ++i) {
    Sampler s(26, 0, i);
    const Reflection r = s.reflection(2.0, 2.0);
    const PoincareElement g = reflection_conjugator(r);
    EXPECT_TRUE(g.lorentz().proper() && g.lorentz().orthochronous());
    EXPECT_LE((l0.conjugated_by(g).affine() - r.affine()).norm(), 1e-9 * r.affine().squaredNorm());
  }
}
