#pragma once

#include <cstdint>
#include <utility>

#include "wedgegroup/minkowski.hpp"
#include "wedgegroup/report.hpp"
#include "wedgegroup/wedge.hpp"

namespace wg {

/// Proper, time-reversing Poincare involution whose fixed-point set is a
/// two-dimensional spacelike plane.
class Reflection {
 public:
  /// Throws NotReflection unless is_reflection(g, tol).
  static Reflection from_element(const PoincareElement& g, double tol = kDefaultTolerance);
  /// No validation; for elements that are reflections by construction.
  static Reflection trusted(const PoincareElement& g) { return Reflection(g); }

  const PoincareElement& element() const { return g_; }
  const LorentzElement& linear() const { return g_.lorentz(); }
  const FourVector& translation() const { return g_.translation(); }
  Mat5 affine() const { return g_.affine(); }

  /// h * this * h^{-1}
  Reflection conjugated_by(const PoincareElement& h) const { return Reflection(h * g_ * h.inverse()); }

 private:
  explicit Reflection(const PoincareElement& g) : g_(g) {}
  PoincareElement g_;
};

using ReflectionPair = std::pair<Reflection, Reflection>;

/// lambda_e: -1 on span{e_t, (0,e)}, +1 on its orthogonal complement.
Reflection reflection_about_axis(const Vec3& e, double tol = kDefaultTolerance);

/// Reflection fixing edge(W) pointwise; maps W onto its causal complement.
Reflection reflection_for_wedge(const Wedge& w);

bool is_reflection(const PoincareElement& g, double tol = kDefaultTolerance);

/// Pointwise fixed plane. The base point is the minimum-norm solution of
/// (1 - Lambda) x = a.
EdgePlane fixed_plane(const Reflection& r, double tol = kDefaultTolerance);

/// Unit vector orthogonal to every defined axis: r x b when both exist and
/// are independent; otherwise the lexicographically largest of the unit
/// candidates +-(e_i projected orthogonally to the defined axis); e_x when
/// neither axis is defined.
Vec3 admissible_axis(const std::optional<Vec3>& rotation_axis, const std::optional<Vec3>& boost_dir);

/// (R lambda_e, lambda_e B) for the polar decomposition Lambda = R B and
/// the admissible e chosen by admissible_axis.
ReflectionPair factor_into_reflections(const LorentzElement& lambda, double tol = kDefaultTolerance);

/// Same with an explicit e; throws NotAdmissible unless e is orthogonal to
/// both polar axes.
ReflectionPair factor_into_reflections(const LorentzElement& lambda, const Vec3& e,
                                       double tol = kDefaultTolerance);

/// Element R_0(angle about e0) B_0(rapidity along e0) of the stability group
/// of W_{e0}. Composition with a common axis adds the parameters.
struct StabilityGroupElement {
  Vec3 e0 = Vec3::UnitX();
  double angle = 0.0;
  double rapidity = 0.0;

  LorentzElement matrix() const;
  StabilityGroupElement operator*(const StabilityGroupElement& o) const;
};

LorentzElement stability_group_element(const Vec3& e0, double angle, double rapidity,
                                       double tol = kDefaultTolerance);

/// (C lambda1 C^{-1}, C lambda2 C^{-1}). Throws NotCommuting if C does not
/// commute with lambda1 lambda2.
ReflectionPair ambiguity_conjugate(const LorentzElement& c, const ReflectionPair& pair,
                                   double tol = kDefaultTolerance);

/// Draws `trials` alternative factorizations of lambda through random
/// elements of its centralizer, then recovers for each the conjugator from
/// the canonical pair alone and reports the worst residual.
/// Throws PreconditionViolated unless lambda is conjugate into L0 with
/// lambda^2 != 1.
CheckReport verify_ambiguity_classification(const LorentzElement& lambda, std::size_t trials,
                                            std::uint64_t seed, double tol = 1e-8);

/// Proper orthochronous g with g lambda_{e_x} g^{-1} = r.
PoincareElement reflection_conjugator(const Reflection& r);

}  // namespace wg
