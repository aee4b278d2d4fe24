#include "wedgegroup/modular.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "wedgegroup/errors.hpp"
#include "wedgegroup/sweep.hpp"

namespace wg {

namespace {

Complex hs_inner(const CMat& a, const CMat& b)
{
  return (a.conjugate().cwiseProduct(b)).sum();
}

// Gram-Schmidt step (two passes); appends x / |x| when the remainder
// exceeds `threshold`.
bool add_orthonormal(std::vector<CMat>& basis, CMat x, double threshold)
{
  for (int pass = 0; pass < 2; ++pass) {
    for (const CMat& b : basis) x -= hs_inner(b, x) * b;
  }
  const double n = x.norm();
  if (n <= threshold) return false;
  basis.push_back(x / n);
  return true;
}

CMat kron(const CMat& a, const CMat& b)
{
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

int numerical_rank(const CMat& m, double rel_tol)
{
  Eigen::JacobiSVD<CMat> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > rel_tol * sv[0]) ++r;
  }
  return r;
}

CMat vectors_of(const MatrixAlgebra& m, const CVec& omega)
{
  CMat xi(m.d(), static_cast<Eigen::Index>(m.dimension()));
  for (std::size_t k = 0; k < m.dimension(); ++k) xi.col(static_cast<Eigen::Index>(k)) = m.basis()[k] * omega;
  return xi;
}

double flow_residual(const MatrixAlgebra& target, const std::vector<CMat>& elements, const CMat& delta,
                     const std::vector<double>& times)
{
  double worst = 0.0;
  for (double t : times) {
    const CMat u = hermitian_power(delta, Complex(0.0, t));
    const CMat uinv = u.adjoint();
    for (const CMat& b : elements) worst = std::max(worst, target.distance_from_span(u * b * uinv));
  }
  return worst;
}

CMat shift_matrix(Eigen::Index n)
{
  CMat s = CMat::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) s(i, i + 1) = 1.0;
  return s;
}

CMat counting_diagonal(Eigen::Index n)
{
  CMat h = CMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) = static_cast<double>(i + 1);
  return h;
}

CVec random_complex_vector(Sampler& s, Eigen::Index n)
{
  CVec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex(s.normal(), s.normal());
  return v;
}

}  // namespace

MatrixAlgebra MatrixAlgebra::generated_by(const std::vector<CMat>& generators)
{
  if (generators.empty()) {
    throw Error(ErrorCode::PreconditionViolated, "at least one generator (possibly the identity) is required");
  }
  const Eigen::Index d = generators.front().rows();
  for (const CMat& g : generators) {
    if (g.rows() != d || g.cols() != d) throw Error(ErrorCode::PreconditionViolated, "generators must be square d x d");
    if (!g.allFinite()) throw Error(ErrorCode::NonFinite, "generator has non-finite entries");
  }
  if (d > kMaxDimension) {
    throw Error(ErrorCode::DimensionCap, "matrix size " + std::to_string(d) + " exceeds the cap of 16");
  }
  if (d == 0) throw Error(ErrorCode::PreconditionViolated, "empty matrices");

  std::vector<CMat> letters;
  for (const CMat& g : generators) {
    letters.push_back(g);
    letters.push_back(g.adjoint());
  }
  std::vector<CMat> basis;
  add_orthonormal(basis, CMat::Identity(d, d), 0.0);
  // Every word in the letters is reached by left multiplication from 1.
  for (std::size_t next = 0; next < basis.size(); ++next) {
    const CMat b = basis[next];
    for (const CMat& g : letters) add_orthonormal(basis, g * b, 1e-9 * std::max(1.0, g.norm()));
  }
  return MatrixAlgebra(d, generators, std::move(basis));
}

MatrixAlgebra MatrixAlgebra::from_basis(Eigen::Index d, const std::vector<CMat>& basis)
{
  if (d > kMaxDimension) {
    throw Error(ErrorCode::DimensionCap, "matrix size " + std::to_string(d) + " exceeds the cap of 16");
  }
  std::vector<CMat> ortho;
  for (const CMat& b : basis) add_orthonormal(ortho, b, 1e-9 * std::max(1.0, b.norm()));
  return MatrixAlgebra(d, basis, std::move(ortho));
}

double MatrixAlgebra::distance_from_span(const CMat& x) const
{
  CMat r = x;
  for (const CMat& b : basis_) r -= hs_inner(b, r) * b;
  return r.norm();
}

MatrixAlgebra commutant(const MatrixAlgebra& m)
{
  const Eigen::Index d = m.d();
  const CMat id = CMat::Identity(d, d);
  // With column-major vec: vec(gX - Xg) = (1 (x) g - g^T (x) 1) vec(X) = K vec(X).
  CMat h = CMat::Zero(d * d, d * d);
  auto accumulate = [&](const CMat& g) {
    const CMat k = kron(id, g) - kron(g.transpose(), id);
    h.noalias() += k.adjoint() * k;
  };
  for (const CMat& g : m.generators()) {
    accumulate(g);
    accumulate(g.adjoint());
  }
  Eigen::SelfAdjointEigenSolver<CMat> eig(h);
  const double top = std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<CMat> basis;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    if (eig.eigenvalues()[i] > 1e-10 * top) break;
    basis.push_back(eig.eigenvectors().col(i).reshaped(d, d));
  }
  return MatrixAlgebra::from_basis(d, basis);
}

double span_residual(const MatrixAlgebra& a, const MatrixAlgebra& b)
{
  double worst = 0.0;
  for (const CMat& x : a.basis()) worst = std::max(worst, b.distance_from_span(x));
  for (const CMat& x : b.basis()) worst = std::max(worst, a.distance_from_span(x));
  return worst;
}

MatrixAlgebra conjugate_algebra(const MatrixAlgebra& m, const TargetElement& u)
{
  const TargetElement uinv = u.inverse();
  auto conj = [&](const CMat& x) { return (u * TargetElement{x, false} * uinv).matrix; };
  std::vector<CMat> gens;
  for (const CMat& g : m.generators()) gens.push_back(conj(g));
  return MatrixAlgebra::generated_by(gens.empty() ? std::vector<CMat>{CMat::Identity(m.d(), m.d())} : gens);
}

CMat hermitian_power(const CMat& h, Complex z)
{
  Eigen::SelfAdjointEigenSolver<CMat> eig(0.5 * (h + h.adjoint()));
  CVec p(eig.eigenvalues().size());
  for (Eigen::Index i = 0; i < p.size(); ++i) p[i] = std::exp(z * std::log(eig.eigenvalues()[i]));
  return eig.eigenvectors() * p.asDiagonal() * eig.eigenvectors().adjoint();
}

ModularData modular_data(const MatrixAlgebra& m, const CVec& omega, double rank_tol)
{
  if (omega.size() != m.d()) throw Error(ErrorCode::PreconditionViolated, "vector size does not match the algebra");
  if (!omega.allFinite()) throw Error(ErrorCode::NonFinite, "vector has non-finite entries");
  const CMat xi = vectors_of(m, omega);
  const int rank = numerical_rank(xi, rank_tol);
  if (rank < static_cast<int>(m.dimension())) {
    throw Error(ErrorCode::NotSeparating, "a Omega = 0 for some nonzero a in the algebra");
  }
  if (rank < m.d()) throw Error(ErrorCode::NotCyclic, "M Omega does not span the space");

  CMat eta(m.d(), m.d());
  for (std::size_t k = 0; k < m.dimension(); ++k) eta.col(static_cast<Eigen::Index>(k)) = m.basis()[k].adjoint() * omega;
  // S x = A conj(x) with S(xi c) = eta conj(c).
  const CMat a = eta * xi.inverse().conjugate();
  const CMat delta_raw = a.transpose() * a.conjugate();
  ModularData md;
  md.delta = 0.5 * (delta_raw + delta_raw.adjoint());
  md.j = {a * hermitian_power(md.delta, -0.5).conjugate(), true};
  return md;
}

double ModularResiduals::max() const
{
  return std::max({j_squared, j_omega, delta_omega, j_delta_j, duality, flow});
}

ModularResiduals modular_residuals(const MatrixAlgebra& m, const CVec& omega, const ModularData& md,
                                   const std::vector<double>& flow_times)
{
  const CMat& a = md.j.matrix;
  const Eigen::Index d = m.d();
  ModularResiduals r;
  r.j_squared = ((md.j * md.j).matrix - CMat::Identity(d, d)).norm();
  r.j_omega = (md.j.apply(omega) - omega).norm();
  r.delta_omega = (md.delta * omega - omega).norm();
  r.j_delta_j = (a * md.delta.conjugate() * a.conjugate() - md.delta.inverse()).norm();
  r.duality = span_residual(conjugate_algebra(m, md.j), commutant(m));
  r.flow = flow_residual(m, m.basis(), md.delta, flow_times);
  return r;
}

CheckReport verify_modular_relations(const std::vector<AlgebraVector>& pairs, const std::vector<LabelAction>& action,
                                     double tol, int threads)
{
  std::vector<std::optional<TargetElement>> js(pairs.size());
  const SweepResult r = run_sweep(
    pairs.size(), 6,
    [&](std::size_t i, std::span<double> out) {
      const ModularData md = modular_data(pairs[i].algebra, pairs[i].omega);
      const ModularResiduals res = modular_residuals(pairs[i].algebra, pairs[i].omega, md);
      out[0] = res.j_squared;
      out[1] = res.j_omega;
      out[2] = res.delta_omega;
      out[3] = res.j_delta_j;
      out[4] = res.duality;
      out[5] = res.flow;
      js[i] = md.j;
    },
    threads);
  CheckReport report =
    summarize("modular-relations", tol, r, {"j-squared", "j-omega", "delta-omega", "j-delta-j", "duality", "flow"});

  double label = 0.0;
  for (const LabelAction& a : action) {
    if (a.i >= js.size() || a.j >= js.size() || a.k >= js.size() || !js[a.i] || !js[a.j] || !js[a.k]) {
      report.pass = false;
      report.diagnostics.push_back("label action refers to a missing or failed pair");
      continue;
    }
    label = std::max(label, distance(*js[a.i] * *js[a.j] * *js[a.i], *js[a.k]));
  }
  report.details["label-action"] = label;
  report.record(label);
  report.finalize();
  return report;
}

TakesakiOutcome takesaki_check(const MatrixAlgebra& m, const MatrixAlgebra& n, const CVec& omega,
                               const ModularData& md, double tol, const std::vector<double>& flow_times)
{
  TakesakiOutcome out;
  out.invariance = flow_residual(n, n.basis(), md.delta, flow_times);
  out.invariant = out.invariance <= tol;
  out.cyclic = numerical_rank(vectors_of(n, omega), kRankTolerance) == numerical_rank(vectors_of(m, omega), kRankTolerance);
  out.spans_equal = span_residual(m, n) <= tol;
  return out;
}

AlgebraVector matrix_unit_instance(const std::vector<double>& p)
{
  const auto n = static_cast<Eigen::Index>(p.size());
  const CMat id = CMat::Identity(n, n);
  std::vector<CMat> gens{kron(id, id)};
  if (n > 1) {
    gens.push_back(kron(shift_matrix(n), id));
    gens.push_back(kron(counting_diagonal(n), id));
  }
  CVec omega = CVec::Zero(n * n);
  for (Eigen::Index i = 0; i < n; ++i) omega[i * n + i] = std::sqrt(p[static_cast<std::size_t>(i)]);
  return {MatrixAlgebra::generated_by(gens), omega};
}

CMat random_unitary(Sampler& s, Eigen::Index n)
{
  CMat z(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) z(i, j) = Complex(s.normal(), s.normal());
  }
  Eigen::HouseholderQR<CMat> qr(z);
  const CMat q = qr.householderQ() * CMat::Identity(n, n);
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  CVec phase(n);
  for (Eigen::Index i = 0; i < n; ++i) phase[i] = r(i, i) / std::abs(r(i, i));
  return q * phase.asDiagonal();
}

AlgebraVector random_block_instance(Sampler& s, Eigen::Index max_d)
{
  for (;;) {
    const int max_twos = static_cast<int>(std::min<Eigen::Index>(2, max_d / 4));
    const int twos = std::uniform_int_distribution<int>(0, max_twos)(s.engine());
    const int max_ones = static_cast<int>(max_d) - 4 * twos;
    const int ones = std::uniform_int_distribution<int>(twos == 0 ? 1 : 0, max_ones)(s.engine());
    const Eigen::Index d = ones + 4 * twos;

    std::vector<CMat> gens;
    CVec omega = CVec::Zero(d);
    Eigen::Index offset = 0;
    for (int b = 0; b < twos + ones; ++b) {
      const Eigen::Index size = b < twos ? 4 : 1;
      CMat proj = CMat::Zero(d, d);
      proj.block(offset, offset, size, size).setIdentity();
      gens.push_back(proj);
      const double w = std::sqrt(s.uniform(0.2, 1.0));
      if (size == 4) {
        CMat unit = CMat::Zero(d, d);
        unit.block(offset, offset, 4, 4) = kron(shift_matrix(2), CMat::Identity(2, 2));
        gens.push_back(unit);
        const double p = s.uniform(0.2, 0.8);
        omega[offset] = w * std::sqrt(p);
        omega[offset + 3] = w * std::sqrt(1.0 - p);
      } else {
        omega[offset] = w;
      }
      offset += size;
    }
    const CMat u = random_unitary(s, d);
    for (CMat& g : gens) g = u * g * u.adjoint();
    omega = u * omega;
    omega.normalize();

    AlgebraVector out{MatrixAlgebra::generated_by(gens), omega};
    const ModularData md = modular_data(out.algebra, out.omega);
    Eigen::SelfAdjointEigenSolver<CMat> eig(md.delta, Eigen::EigenvaluesOnly);
    const auto& ev = eig.eigenvalues();
    if (ev[0] > 0.0 && ev[ev.size() - 1] / ev[0] <= 1e8) return out;
  }
}

std::pair<std::vector<AlgebraVector>, std::vector<LabelAction>> shifted_pair_family(Sampler& s)
{
  constexpr Eigen::Index d = 16;
  // (T x)(s3 s0 s1 s2) = x(s0 s1 s2 s3): site k moves to site k + 1.
  CMat t = CMat::Zero(d, d);
  for (Eigen::Index idx = 0; idx < d; ++idx) {
    const Eigen::Index s3 = idx & 1;
    t((s3 << 3) | (idx >> 1), idx) = 1.0;
  }
  const CVec psi = random_complex_vector(s, d);
  CVec omega = CVec::Zero(d);
  CVec shifted = psi;
  for (int k = 0; k < 4; ++k) {
    omega += shifted;
    shifted = t * shifted;
  }
  omega.normalize();

  const CMat id4 = CMat::Identity(4, 4);
  const std::vector<CMat> g0{kron(shift_matrix(4), id4), kron(counting_diagonal(4), id4)};
  std::vector<CMat> g1;
  for (const CMat& g : g0) g1.push_back(t * g * t.adjoint());
  MatrixAlgebra m0 = MatrixAlgebra::generated_by(g0);
  MatrixAlgebra m1 = MatrixAlgebra::generated_by(g1);
  const ModularData md1 = modular_data(m1, omega);
  MatrixAlgebra m2 = conjugate_algebra(m0, md1.j);

  std::vector<AlgebraVector> pairs{{m0, omega}, {m1, omega}, {m2, omega}};
  std::vector<LabelAction> action{{1, 0, 2}, {1, 2, 0}, {0, 0, 0}, {1, 1, 1}};
  return {std::move(pairs), std::move(action)};
}

}  // namespace wg
