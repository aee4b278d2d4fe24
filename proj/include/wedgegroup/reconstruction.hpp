#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wedgegroup/reflection.hpp"
#include "wedgegroup/report.hpp"
#include "wedgegroup/target.hpp"

namespace wg {

enum class MapKind { Tautological, Conjugated, SpinorialNegative };

const char* to_string(MapKind kind);

/// Descriptor of a built-in reflection map. For Conjugated, `g` is the 5x5
/// complex conjugating matrix (a 4x4 input is embedded as diag(G, 1)).
struct MapSpec {
  MapKind kind = MapKind::Tautological;
  CMat g;
};

/// lambda -> J(lambda) with a fixed target dimension. Evaluators are pure
/// and may be called concurrently.
class ReflectionMap {
 public:
  using Evaluator = std::function<TargetElement(const Reflection&)>;

  ReflectionMap(Evaluator evaluator, Eigen::Index dimension, MapSpec spec);

  TargetElement operator()(const Reflection& r) const { return evaluator_(r); }
  Eigen::Index dimension() const { return dimension_; }
  const MapSpec& spec() const { return spec_; }
  TargetElement identity() const { return TargetElement::identity(dimension_); }

 private:
  Evaluator evaluator_;
  Eigen::Index dimension_;
  MapSpec spec_;
};

/// Throws BadSpec for a singular or non-square conjugating matrix.
ReflectionMap builtin_map(const MapSpec& spec);

/// SL(2,C) element covering a proper orthochronous Lorentz transformation:
/// A (x0 + x.sigma) A^dagger = y0 + y.sigma for y = lambda x.
CMat spinor_lift(const LorentzElement& lambda);

/// Default value of the guard comparing two independent evaluations of the
/// same group element.
inline constexpr double kDefaultGuard = 1e-8;

/// The fixed reference reflection lambda_0 about the edge of W_{e_x}.
const Reflection& reference_reflection();

/// V_e(g) = J(g lambda_e) J(lambda_e). Throws NotAdmissible unless
/// g lambda_e is an involution.
TargetElement v_e(const ReflectionMap& j, const LorentzElement& g, const Vec3& e, double tol = kDefaultTolerance);

/// V(R) and V(B), each cross-checked against a second admissible e.
/// Throws AxiomViolation when the two evaluations differ by more than guard.
TargetElement v_of_rotation(const ReflectionMap& j, const LorentzElement& r, double guard = kDefaultGuard);
TargetElement v_of_boost(const ReflectionMap& j, const LorentzElement& b, double guard = kDefaultGuard);

/// V(lambda) = V(R) V(B) for the polar decomposition lambda = R B.
TargetElement v_of_lorentz(const ReflectionMap& j, const LorentzElement& lambda, double guard = kDefaultGuard);

/// V(B') V(R) for the left polar form lambda = B' R, B' = R B R^{-1}.
TargetElement v_of_lorentz_boost_first(const ReflectionMap& j, const LorentzElement& lambda,
                                       double guard = kDefaultGuard);

/// Orthochronous g: v_of_lorentz. Antichronous g: J(lambda0) V(lambda0 g).
TargetElement v_of_proper(const ReflectionMap& j, const LorentzElement& g, double guard = kDefaultGuard,
                          const Reflection& lambda0 = reference_reflection());

/// U_lambda(x) = J(lambda, x) J(lambda, 0) for x in the -1 eigenspace of
/// the linear part of lambda; the translation part of lambda is ignored.
TargetElement u_translation_fixed_reflection(const ReflectionMap& j, const Reflection& lambda, const FourVector& x,
                                             double tol = kDefaultTolerance);

/// U(1, x) for timelike x through the reflection about the edge of the
/// boosted W_{e_x}, cross-checked against the boosted W_{e_y}.
TargetElement u_timelike_translation(const ReflectionMap& j, const FourVector& x, double guard = kDefaultGuard);

/// U(1, z) = U(1, x) U(1, -y) with x = z/2 + shift, y = shift - z/2. Throws
/// PreconditionViolated unless both x and y are timelike.
TargetElement u_translation_split(const ReflectionMap& j, const FourVector& z, const FourVector& shift,
                                  double guard = kDefaultGuard);

/// u_translation_split with shift = (|z| + 1, 0, 0, 0).
TargetElement u_translation(const ReflectionMap& j, const FourVector& z, double guard = kDefaultGuard);

/// U(lambda, a) = U(1, a) V(lambda) for proper g of either time orientation.
TargetElement u_poincare(const ReflectionMap& j, const PoincareElement& g, double guard = kDefaultGuard);

/// Involution and J(l1) J(l2) J(l1) = J(l1 l2 l1) over random reflections
/// (translations included).
CheckReport verify_axioms(const ReflectionMap& j, std::size_t samples, std::uint64_t seed,
                          double tol = kDefaultTolerance, int threads = 1);

/// Group law over pairs from both components of L+ and from P+,
/// one-parameter subgroups, rotation-boost covariance, restriction to
/// reflections and agreement of rotation-first with boost-first order.
/// Skipped (reported as failing) when verify_axioms fails.
CheckReport verify_homomorphism(const ReflectionMap& j, std::size_t samples, std::uint64_t seed,
                                double tol = 1e-8, int threads = 1);

/// Largest pairwise distance among V_e(g) over `axes` random admissible e,
/// for random rotations (even samples) and boosts (odd samples).
CheckReport verify_e_independence(const ReflectionMap& j, std::size_t samples, std::size_t axes, std::uint64_t seed,
                                  double tol = kDefaultTolerance, int threads = 1);

/// J(l1') J(l2') against V(lambda) for ambiguity-conjugated factor pairs of
/// random elements conjugate into L0.
CheckReport verify_factorization_independence(const ReflectionMap& j, std::size_t samples, std::size_t pairs,
                                              std::uint64_t seed, double tol = 1e-8, int threads = 1);

/// Additivity, inverse, independence of the admissible reflection for
/// timelike x, independence of the split rule and Lorentz covariance.
CheckReport verify_translations(const ReflectionMap& j, std::size_t samples, std::uint64_t seed, double tol = 1e-8,
                                int threads = 1);

/// Successive distances of J along `path` and of V along the induced
/// family lambda(t) lambda(0). Flag mismatches count as infinite steps.
/// The report passes whenever every step is finite; the maxima are the
/// discrete modulus of continuity.
CheckReport verify_continuity_probe(const ReflectionMap& j, const std::vector<Reflection>& path);

/// |V_e(B_k) - 1|_F for boosts of rapidity 2^-k (k = 1..steps) along
/// rotating directions, each evaluated with an adversarially rotated
/// admissible e. Passes iff the sequence decreases strictly and ends below
/// `final_bound`.
CheckReport boost_continuity_probe(const ReflectionMap& j, int steps, std::uint64_t seed, double final_bound = 1e-5);

}  // namespace wg
