#include <gtest/gtest.h>

#include <numbers>

#include "wedgegroup/reflection.hpp"
#include "wedgegroup/sampling.hpp"

using namespace wg;

TEST(Sampling, SameSeedStreamIndexIsReproducible)
{
  Sampler a(42, 3, 17);
  Sampler b(42, 3, 17);
  for (int k = 0; k < 10; ++k) EXPECT_EQ(a.lorentz(3.0).matrix(), b.lorentz(3.0).matrix());
}

TEST(Sampling, StreamsAndIndicesDiffer)
{
  const double base = Sampler(42, 0, 0).normal();
  EXPECT_NE(base, Sampler(42, 1, 0).normal());
  EXPECT_NE(base, Sampler(42, 0, 1).normal());
  EXPECT_NE(base, Sampler(43, 0, 0).normal());
}

TEST(Sampling, LorentzSamplesAreProperOrthochronous)
{
  for (std::uint64_t i = 0; i < 500; ++i) {
    Sampler s(7, 0, i);
    const LorentzElement l = s.lorentz(3.0);
    EXPECT_TRUE(l.proper());
    EXPECT_TRUE(l.orthochronous());
    EXPECT_LE(polar_decompose(l).rapidity, 3.0 + 1e-9);
  }
}

TEST(Sampling, RotationAnglesAreUniform)
{
  double sum = 0.0;
  const int n = 4000;
  for (int i = 0; i < n; ++i) {
    Sampler s(8, 0, static_cast<std::uint64_t>(i));
    sum += polar_decompose(s.rotation()).angle;
  }
  // mean pi/2, standard error pi / sqrt(12 n)
  EXPECT_NEAR(sum / n, std::numbers::pi / 2, 5 * std::numbers::pi / std::sqrt(12.0 * n));
}

TEST(Sampling, UnitVectorsHaveZeroMean)
{
  Vec3 sum = Vec3::Zero();
  Sampler s(9, 0, 0);
  const int n = 5000;
  for (int i = 0; i < n; ++i) {
    const Vec3 u = s.unit_vector();
    EXPECT_NEAR(u.norm(), 1.0, 1e-14);
    sum += u;
  }
  EXPECT_LE((sum / n).norm(), 5.0 / std::sqrt(3.0 * n) * std::sqrt(3.0));
}

TEST(Sampling, ReflectionsAndL0Conjugates)
{
  for (std::uint64_t i = 0; i < 200; ++i) {
    Sampler s(10, 0, i);
    EXPECT_TRUE(is_reflection(s.reflection(1.5, 1.0).element()));
    EXPECT_EQ(classify_conjugacy(s.l0_conjugate(1.0)), ConjugacyClass::ConjugateIntoL0);
    const FourVector v = s.timelike_future(2.0);
    EXPECT_EQ(classify_vector(v), CausalClass::TimelikeFuture);
    const Vec3 u = s.unit_vector();
    EXPECT_NEAR(s.orthogonal_unit(u).dot(u), 0.0, 1e-14);
  }
}
