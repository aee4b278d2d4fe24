#include "wedgegroup/sampling.hpp"

#include <numbers>

namespace wg {

Sampler::Sampler(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
{
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  rng_.seed(seq);
}

double Sampler::uniform(double lo, double hi)
{
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

double Sampler::normal()
{
  return std::normal_distribution<double>(0.0, 1.0)(rng_);
}

Vec3 Sampler::unit_vector()
{
  for (;;) {
    const Vec3 v(normal(), normal(), normal());
    const double n = v.norm();
    if (n > 1e-6) return v / n;
  }
}

Vec3 Sampler::orthogonal_unit(const Vec3& v)
{
  for (;;) {
    const Vec3 u = unit_vector();
    const Vec3 w = u - u.dot(v) * v;
    const double n = w.norm();
    if (n > 1e-3) return w / n;
  }
}

FourVector Sampler::vector(double scale)
{
  if (scale <= 0.0) return {};
  return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)};
}

FourVector Sampler::timelike_future(double scale)
{
  const Vec3 s = uniform(0.0, scale) * unit_vector();
  return FourVector::from_spatial(s.norm() + uniform(0.1, scale), s);
}

LorentzElement Sampler::rotation()
{
  const Vec3 axis = unit_vector();
  return make_rotation(axis, uniform(0.0, std::numbers::pi));
}

LorentzElement Sampler::boost(double max_rapidity)
{
  const Vec3 dir = unit_vector();
  return make_boost(dir, uniform(0.0, max_rapidity));
}

LorentzElement Sampler::lorentz(double max_rapidity)
{
  const LorentzElement r = rotation();
  return r * boost(max_rapidity);
}

PoincareElement Sampler::poincare(double max_rapidity, double max_translation)
{
  const LorentzElement l = lorentz(max_rapidity);
  return {l, vector(max_translation)};
}

Reflection Sampler::reflection(double max_rapidity, double max_translation)
{
  static const Reflection base = reflection_about_axis(Vec3::UnitX());
  return base.conjugated_by(poincare(max_rapidity, max_translation));
}

LorentzElement Sampler::l0_conjugate(double frame_rapidity)
{
  const LorentzElement g = lorentz(frame_rapidity);
  const double angle = uniform(0.3, std::numbers::pi - 0.3);
  const double rapidity = uniform(0.2, 1.5);
  return g * stability_group_element(Vec3::UnitZ(), angle, rapidity) * g.inverse();
}

}  // namespace wg
