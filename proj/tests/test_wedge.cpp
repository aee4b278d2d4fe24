#include <gtest/gtest.h>

#include "wedgegroup/errors.hpp"
#include "wedgegroup/reflection.hpp"
#include "wedgegroup/sampling.hpp"
#include "wedgegroup/wedge.hpp"

using namespace wg;

TEST(Wedge, StandardWedgeMembershipCharacterizationsAgree)
{
  const Vec3 e = Vec3(1, 2, -0.5).normalized();
  const Wedge w = standard_wedge(e);
  const Wedge wc = causal_complement(w);
  Sampler s(11, 0, 0);
  std::vector<FourVector> complement_samples;
  for (int k = 0; k < 400; ++k) {
    const FourVector y = s.vector(3.0);
    if (wc.contains(y)) complement_samples.push_back(y);
  }
  ASSERT_GT(complement_samples.size(), 20u);

  int checked = 0;
  for (int k = 0; k < 10000; ++k) {
    const FourVector x = s.vector(3.0);
    const bool by_normals = w.contains(x);
    const bool by_direction = x.spatial().dot(e) > std::abs(x.t());
    if (std::abs(x.spatial().dot(e) - std::abs(x.t())) < 1e-9) continue;
    EXPECT_EQ(by_normals, by_direction);
    if (by_direction) {
      for (const FourVector& y : complement_samples) {
        const FourVector d = x - y;
        EXPECT_LT(minkowski_inner(d, d), 0.0);
      }
    }
    ++checked;
  }
  EXPECT_GT(checked, 9000);
}

TEST(Wedge, MakeRejectsBadNormals)
{
  EXPECT_THROW(Wedge::make({1, 0.5, 0, 0}, {1, -1, 0, 0}, {}), Error);
  EXPECT_THROW(Wedge::make({-1, 1, 0, 0}, {1, -1, 0, 0}, {}), Error);
  EXPECT_THROW(Wedge::make({1, 1, 0, 0}, {2, 2, 0, 0}, {}), Error);
  EXPECT_THROW(standard_wedge(Vec3::Zero()), Error);
}

TEST(Wedge, ActionTransportsMembership)
{
  const Wedge w = standard_wedge(Vec3::UnitX());
  for (std::uint64_t i = 0; i < 200; ++i) {
    Sampler s(12, 0, i);
    const PoincareElement g = s.poincare(1.5, 2.0);
    const Wedge gw = act(g, w);
    for (int k = 0; k < 20; ++k) {
      const FourVector x = s.vector(3.0);
      if (std::abs(w.slack(x)) < 1e-6) continue;
      EXPECT_EQ(w.contains(x), gw.contains(g * x));
    }
  }
}

TEST(Wedge, ActRejectsTimeReversal)
{
  Mat4 t = Mat4::Identity();
  t(0, 0) = -1;
  t(1, 1) = -1;
  const PoincareElement g(LorentzElement::from_matrix(t));
  EXPECT_THROW(act(g, standard_wedge(Vec3::UnitX())), Error);
  // the general transform maps onto a wedge nonetheless
  const Wedge image = transform(g, standard_wedge(Vec3::UnitX()));
  EXPECT_TRUE(image.contains(FourVector(0, -1, 0, 0)));
}

TEST(Wedge, TransitivityBySolveAndVerify)
{
  for (std::uint64_t i = 0; i < 200; ++i) {
    Sampler s(13, 0, i);
    const Wedge w1 = act(s.poincare(1.5, 2.0), standard_wedge(Vec3::UnitX()));
    const Wedge w2 = act(s.poincare(1.5, 2.0), standard_wedge(Vec3::UnitY()));
    const PoincareElement g = transform_between(w1, w2);
    EXPECT_LE(wedge_distance(act(g, w1), w2), 1e-9) << i;
  }
}

TEST(Wedge, EdgeIsEquivariant)
{
  for (std::uint64_t i = 0; i < 100; ++i) {
    Sampler s(14, 0, i);
    const Wedge w = act(s.poincare(1.0, 1.0), standard_wedge(Vec3::UnitZ()));
    const PoincareElement g = s.poincare(1.0, 1.0);
    const EdgePlane image = edge(act(g, w));
    const EdgePlane e = edge(w);
    for (int k = 0; k < 10; ++k) {
      const FourVector x = g * e.at(s.uniform(-2, 2), s.uniform(-2, 2));
      EXPECT_TRUE(image.contains(x, 1e-10)) << i;
    }
  }
}

TEST(Wedge, CausalComplementIsInvolutive)
{
  Sampler s(15, 0, 0);
  const Wedge w = act(s.poincare(1.0, 1.0), standard_wedge(Vec3::UnitX()));
  EXPECT_TRUE(same_wedge(causal_complement(causal_complement(w)), w));
  EXPECT_FALSE(same_wedge(causal_complement(w), w));
  EXPECT_TRUE(causal_complement(standard_wedge(Vec3::UnitX())).contains(FourVector(0, -1, 0, 0)));
}

TEST(Wedge, WedgeFrameMapsStandardWedge)
{
  for (std::uint64_t i = 0; i < 50; ++i) {
    Sampler s(16, 0, i);
    const Wedge w = act(s.poincare(1.0, 1.0), standard_wedge(Vec3::UnitY()));
    EXPECT_LE(wedge_distance(act(wedge_frame(w), standard_wedge(Vec3::UnitX())), w), 1e-9);
  }
}

TEST(DoubleCone, ContainmentInWedge)
{
  const Wedge w = standard_wedge(Vec3::UnitX());
  const DoubleCone inside = DoubleCone::make({-0.25, 2, 0, 0}, {0.25, 2, 0, 0});
  const DoubleCone straddling = DoubleCone::make({-0.25, 0, 0, 0}, {0.25, 0, 0, 0});
  EXPECT_TRUE(strictly_inside(inside, w));
  EXPECT_FALSE(strictly_inside(straddling, w));
  EXPECT_FALSE(strictly_inside(inside, causal_complement(w)));
  // touching the edge from inside is not strict containment
  const DoubleCone touching = DoubleCone::make({-0.5, 0.5, 0, 0}, {0.5, 0.5, 0, 0});
  EXPECT_FALSE(strictly_inside(touching, w));
  EXPECT_THROW(DoubleCone::make({0, 0, 0, 0}, {0, 1, 0, 0}), Error);
}

TEST(DoubleCone, StrictInsideMatchesBruteForce)
{
  // The slack is a minimum of two linear functions, so its minimum over the
  // cone sits on the apexes or the equatorial sphere; sample the sphere densely.
  int inside_count = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Sampler s(17, 0, i);
    const Wedge w = standard_wedge(Vec3::UnitX());
    const FourVector axis = s.timelike_future(0.8);
    const FourVector center(s.uniform(-0.5, 0.5), s.uniform(-0.5, 2.5), s.uniform(-1, 1), s.uniform(-1, 1));
    const DoubleCone c = DoubleCone::make(center - 0.5 * axis, center + 0.5 * axis);
    const LorentzElement frame = rest_frame_boost(axis);
    const double radius = 0.5 * c.proper_height();
    double worst = std::min(w.slack(c.past()), w.slack(c.future()));
    for (int k = 0; k < 5000; ++k) {
      worst = std::min(worst, w.slack(center + frame * FourVector::from_spatial(0.0, radius * s.unit_vector())));
    }
    const bool inside = strictly_inside(c, w);
    inside_count += inside;
    if (worst > 1e-3) {
      EXPECT_TRUE(inside) << i << " slack " << worst;
    }
    if (worst < 0.0) {
      EXPECT_FALSE(inside) << i << " slack " << worst;
    }
  }
  EXPECT_GT(inside_count, 30);
  EXPECT_LT(inside_count, 270);
}

TEST(Wedge, InterpolatingWedgesFollowTheFamily)
{
  const Wedge w0 = standard_wedge(Vec3::UnitX());
  const Reflection lambda0 = reflection_for_wedge(w0);
  std::vector<Reflection> family;
  std::vector<Wedge> expected;
  for (double t : {0.0, 0.01, 0.05, 0.2}) {
    const PoincareElement g(make_rotation(Vec3(0.2, 0.5, 1).normalized(), t) * make_boost(Vec3::UnitY(), 2 * t),
                            FourVector(0.3 * t, -t, 0.5 * t, 0));
    expected.push_back(act(g, w0));
    family.push_back(reflection_for_wedge(expected.back()));
  }
  const std::vector<InterpolatedWedge> out = interpolating_wedges(family, lambda0, w0);
  ASSERT_EQ(out.size(), family.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    EXPECT_LE(wedge_distance(act(out[k].transport, w0), out[k].wedge), 1e-8) << k;
    const Reflection again = reflection_for_wedge(out[k].wedge);
    EXPECT_LE((again.affine() - family[k].affine()).norm(), 1e-8) << k;
    const EdgePlane e = edge(out[k].wedge);
    for (double a : {-1.0, 0.5, 2.0}) {
      const FourVector x = e.at(a, 1.0 - a);
      EXPECT_LE(((family[k].element() * x) - x).vec().norm(), 1e-8);
    }
  }
  EXPECT_LE(wedge_distance(out[0].wedge, w0), 1e-10);
}
