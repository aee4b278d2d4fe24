#pragma once

#include <cstdint>
#include <random>

#include "wedgegroup/minkowski.hpp"
#include "wedgegroup/reflection.hpp"

namespace wg {

/// Random group elements for verification sweeps. Every (seed, stream,
/// index) triple names an independent generator, so sample i of a sweep is
/// the same no matter which thread draws it.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t index = 0);

  std::mt19937_64& engine() { return rng_; }

  double uniform(double lo, double hi);
  double normal();
  Vec3 unit_vector();
  /// Uniform among unit vectors orthogonal to the unit vector v.
  Vec3 orthogonal_unit(const Vec3& v);
  FourVector vector(double scale);
  FourVector timelike_future(double scale);

  /// Axis uniform on the sphere, angle uniform in [0, pi].
  LorentzElement rotation();
  /// Direction uniform on the sphere, rapidity uniform in [0, max_rapidity].
  LorentzElement boost(double max_rapidity);
  /// rotation() * boost(max_rapidity)
  LorentzElement lorentz(double max_rapidity);
  PoincareElement poincare(double max_rapidity, double max_translation);

  /// g lambda_{e_x} g^{-1} with g = poincare(max_rapidity, max_translation).
  Reflection reflection(double max_rapidity, double max_translation);

  /// G L0(e_z; angle, rapidity) G^{-1} with G = lorentz(frame_rapidity),
  /// angle in [0.3, pi - 0.3] and rapidity in [0.2, 1.5], so the element is
  /// well inside the class conjugate into L0 and not an involution.
  LorentzElement l0_conjugate(double frame_rapidity);

 private:
  std::mt19937_64 rng_;
};

}  // namespace wg
