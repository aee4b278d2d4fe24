#pragma once

#include <cstdint>
#include <vector>

#include "wedgegroup/report.hpp"
#include "wedgegroup/sampling.hpp"
#include "wedgegroup/target.hpp"

namespace wg {

/// Unital *-subalgebra of M_d, stored as a Hilbert-Schmidt orthonormal
/// basis of its linear span.
class MatrixAlgebra {
 public:
  static constexpr Eigen::Index kMaxDimension = 16;

  /// Closure of span{1, generators} under products and adjoints.
  /// Throws DimensionCap for d > 16 and PreconditionViolated for mismatched
  /// or non-square generators.
  static MatrixAlgebra generated_by(const std::vector<CMat>& generators);

  /// Algebra whose span is span(basis); the caller guarantees closure. The
  /// basis is re-orthonormalized.
  static MatrixAlgebra from_basis(Eigen::Index d, const std::vector<CMat>& basis);

  Eigen::Index d() const { return d_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<CMat>& generators() const { return generators_; }
  const std::vector<CMat>& basis() const { return basis_; }

  /// |x - P x|_F for the orthogonal projection P onto the span.
  double distance_from_span(const CMat& x) const;

 private:
  MatrixAlgebra(Eigen::Index d, std::vector<CMat> generators, std::vector<CMat> basis)
    : d_(d), generators_(std::move(generators)), basis_(std::move(basis))
  {
  }

  Eigen::Index d_ = 0;
  std::vector<CMat> generators_;
  std::vector<CMat> basis_;
};

/// {X : XA = AX for all A in M}, from the null space of the stacked
/// commutator maps of the generators and their adjoints.
MatrixAlgebra commutant(const MatrixAlgebra& m);

/// Largest distance of a basis element of either algebra from the span of
/// the other.
double span_residual(const MatrixAlgebra& a, const MatrixAlgebra& b);

/// U M U^{-1} for a linear or antilinear U.
MatrixAlgebra conjugate_algebra(const MatrixAlgebra& m, const TargetElement& u);

/// h^z for a Hermitian positive definite h.
CMat hermitian_power(const CMat& h, Complex z);

struct ModularData {
  TargetElement j;  // antilinear
  CMat delta;
};

inline constexpr double kRankTolerance = 1e-9;

/// Polar decomposition S = J Delta^{1/2} of the Tomita operator
/// S(a Omega) = a* Omega. Throws NotSeparating, then NotCyclic, when the
/// relevant rank test at `rank_tol` (relative to the largest singular
/// value) fails.
ModularData modular_data(const MatrixAlgebra& m, const CVec& omega, double rank_tol = kRankTolerance);

struct ModularResiduals {
  double j_squared = 0.0;
  double j_omega = 0.0;
  double delta_omega = 0.0;
  double j_delta_j = 0.0;
  double duality = 0.0;  // span(J M J) against span(M')
  double flow = 0.0;     // Delta^{it} M Delta^{-it} against M

  double max() const;
};

ModularResiduals modular_residuals(const MatrixAlgebra& m, const CVec& omega, const ModularData& md,
                                   const std::vector<double>& flow_times = {0.37, -1.3, 2.9});

struct AlgebraVector {
  MatrixAlgebra algebra;
  CVec omega;
};

/// J_i J_j J_i = J_k
struct LabelAction {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
};

/// Per-pair Tomita identities and duality, then the label relations.
CheckReport verify_modular_relations(const std::vector<AlgebraVector>& pairs, const std::vector<LabelAction>& action,
                                     double tol = 1e-8, int threads = 1);

struct TakesakiOutcome {
  double invariance = 0.0;  // Delta^{it} N Delta^{-it} against N
  bool invariant = false;
  bool cyclic = false;  // N Omega spans M Omega
  bool spans_equal = false;

  bool consistent() const { return !(invariant && cyclic) || spans_equal; }
};

/// Checks the finite-dimensional form of Takesaki's criterion for a
/// subalgebra N of M.
TakesakiOutcome takesaki_check(const MatrixAlgebra& m, const MatrixAlgebra& n, const CVec& omega,
                               const ModularData& md, double tol = 1e-8,
                               const std::vector<double>& flow_times = {0.37, -1.3, 2.9});

/// M_n (x) 1 on C^n (x) C^n with Omega = sum_i sqrt(p_i) e_i (x) e_i.
AlgebraVector matrix_unit_instance(const std::vector<double>& p);

/// U (sum_k M_{n_k} (x) 1_{n_k}) U^dagger with n_k in {1, 2},
/// sum n_k^2 <= max_d, U Haar-random and a random faithful vector. Draws
/// again when Delta has condition number above 1e8.
AlgebraVector random_block_instance(Sampler& s, Eigen::Index max_d = 8);

/// Four qubits with the algebras of sites {0,1} and {1,2} and a
/// shift-invariant random vector, followed by M_2 = J_1 M_0 J_1.
/// The returned actions relate the three labels.
std::pair<std::vector<AlgebraVector>, std::vector<LabelAction>> shifted_pair_family(Sampler& s);

/// Haar-random unitary of size n.
CMat random_unitary(Sampler& s, Eigen::Index n);

}  // namespace wg
