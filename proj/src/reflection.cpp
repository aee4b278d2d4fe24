#include "wedgegroup/reflection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wedgegroup/errors.hpp"
#include "wedgegroup/frames.hpp"
#include "wedgegroup/sampling.hpp"

namespace wg {

namespace {

template <typename M>
double scale_of_any(const M& m)
{
  return std::max(1.0, m.squaredNorm());
}

Vec4 minkowski_unit(const Vec4& v)
{
  return v / std::sqrt(std::abs(minkowski_inner(v, v)));
}

bool involutive(const Mat4& m, double tol)
{
  return (m * m - Mat4::Identity()).norm() <= 10.0 * tol * scale_of(m);
}

}  // namespace

Reflection Reflection::from_element(const PoincareElement& g, double tol)
{
  if (!is_reflection(g, tol)) throw Error(ErrorCode::NotReflection, "element is not an edge reflection");
  return Reflection(g);
}

Reflection reflection_about_axis(const Vec3& e, double tol)
{
  const double n = e.norm();
  if (!std::isfinite(n) || n < tol) throw Error(ErrorCode::ZeroAxis, "reflection axis has zero length");
  const Vec3 u = e / n;
  Mat4 m = Mat4::Zero();
  m(0, 0) = -1.0;
  m.bottomRightCorner<3, 3>() = Mat3::Identity() - 2.0 * u * u.transpose();
  return Reflection::trusted(PoincareElement(LorentzElement::from_trusted(m)));
}

Reflection reflection_for_wedge(const Wedge& w)
{
  const Mat4 onto_t = null_pair_projector(w.l1().vec(), w.l2().vec());
  const LorentzElement m = LorentzElement::from_trusted(Mat4::Identity() - 2.0 * onto_t);
  return Reflection::trusted({m, w.p() - m * w.p()});
}

bool is_reflection(const PoincareElement& g, double tol)
{
  const Mat4& m = g.lorentz().matrix();
  if (!m.allFinite() || !g.translation().vec().allFinite()) return false;
  const double sc = scale_of(m);
  const Mat4 eta = metric();
  if ((m.transpose() * eta * m - eta).norm() > tol * sc) return false;
  if (std::abs(m.determinant() - 1.0) > tol * sc) return false;
  if (m(0, 0) > -1.0 + tol * sc) return false;

  const Mat5 a = g.affine();
  if ((a * a - Mat5::Identity()).norm() > tol * scale_of_any(a)) return false;

  // A projector's nonzero singular values are >= 1, so 1/2 separates them
  // from rounding noise.
  const Mat4 onto_s = 0.5 * (Mat4::Identity() + m);
  Eigen::JacobiSVD<Mat4> svd(onto_s, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  if (!(sv[1] > 0.5 && sv[2] < 0.5)) return false;
  const Vec4 b0 = svd.matrixU().col(0);
  const Vec4 b1 = svd.matrixU().col(1);
  const double g00 = minkowski_inner(b0, b0);
  const double g01 = minkowski_inner(b0, b1);
  const double g11 = minkowski_inner(b1, b1);
  return g00 < -tol && g00 * g11 - g01 * g01 > tol;
}

EdgePlane fixed_plane(const Reflection& r, double tol)
{
  if (!is_reflection(r.element(), tol)) throw Error(ErrorCode::NotReflection, "element is not an edge reflection");
  const Mat4& m = r.linear().matrix();
  Eigen::JacobiSVD<Mat4> svd(0.5 * (Mat4::Identity() + m), Eigen::ComputeFullU);
  const Vec4 s1 = minkowski_unit(svd.matrixU().col(0));
  const Vec4 v = svd.matrixU().col(1);
  const Vec4 s2 = minkowski_unit(Vec4(v + minkowski_inner(v, s1) * s1));
  const Vec4 point = (Mat4::Identity() - m).completeOrthogonalDecomposition().solve(r.translation().vec());
  return {FourVector(point), FourVector(s1), FourVector(s2)};
}

Vec3 admissible_axis(const std::optional<Vec3>& rotation_axis, const std::optional<Vec3>& boost_dir)
{
  if (rotation_axis && boost_dir) {
    const Vec3 c = rotation_axis->cross(*boost_dir);
    const double n = c.norm();
    if (n > 1e-8) return c / n;
  }
  const std::optional<Vec3>& v = rotation_axis ? rotation_axis : boost_dir;
  if (!v) return Vec3::UnitX();

  Vec3 best = Vec3::Constant(-2.0);
  for (int i = 0; i < 3; ++i) {
    const Vec3 c = Vec3::Unit(i) - v->dot(Vec3::Unit(i)) * *v;
    const double n = c.norm();
    if (n < 1e-8) continue;
    for (const Vec3& cand : {Vec3(c / n), Vec3(-c / n)}) {
      if (std::lexicographical_compare(best.begin(), best.end(), cand.begin(), cand.end())) best = cand;
    }
  }
  return best;
}

ReflectionPair factor_into_reflections(const LorentzElement& lambda, double tol)
{
  const PolarData polar = polar_decompose(lambda, tol);
  return factor_into_reflections(lambda, admissible_axis(polar.axis, polar.boost_dir), tol);
}

ReflectionPair factor_into_reflections(const LorentzElement& lambda, const Vec3& e, double tol)
{
  const PolarData polar = polar_decompose(lambda, tol);
  const LorentzElement le = reflection_about_axis(e, tol).linear();
  const LorentzElement first = polar.rotation * le;
  const LorentzElement second = le * polar.boost;
  if (!involutive(first.matrix(), tol) || !involutive(second.matrix(), tol)) {
    throw Error(ErrorCode::NotAdmissible, "e is not orthogonal to the rotation axis and boost direction");
  }
  return {Reflection::trusted(PoincareElement(first)), Reflection::trusted(PoincareElement(second))};
}

LorentzElement StabilityGroupElement::matrix() const
{
  return stability_group_element(e0, angle, rapidity);
}

StabilityGroupElement StabilityGroupElement::operator*(const StabilityGroupElement& o) const
{
  if ((e0 - o.e0).norm() > 1e-12) {
    throw Error(ErrorCode::PreconditionViolated, "stability group elements for different axes");
  }
  return {e0, std::remainder(angle + o.angle, 2.0 * std::numbers::pi), rapidity + o.rapidity};
}

LorentzElement stability_group_element(const Vec3& e0, double angle, double rapidity, double tol)
{
  return make_rotation(e0, angle, tol) * make_boost(e0, rapidity, tol);
}

ReflectionPair ambiguity_conjugate(const LorentzElement& c, const ReflectionPair& pair, double tol)
{
  const Mat4 lambda = pair.first.linear().matrix() * pair.second.linear().matrix();
  const Mat4& cm = c.matrix();
  if ((cm * lambda - lambda * cm).norm() > tol * std::max(1.0, cm.norm() * lambda.norm())) {
    throw Error(ErrorCode::NotCommuting, "conjugating element does not commute with the product");
  }
  const PoincareElement h(c);
  return {pair.first.conjugated_by(h), pair.second.conjugated_by(h)};
}

CheckReport verify_ambiguity_classification(const LorentzElement& lambda, std::size_t trials,
                                            std::uint64_t seed, double tol)
{
  if (classify_conjugacy(lambda) != ConjugacyClass::ConjugateIntoL0) {
    throw Error(ErrorCode::PreconditionViolated, "element must be conjugate into L0 with lambda^2 != 1");
  }
  const StabilityConjugation sc = stability_conjugation(lambda);
  const LorentzElement& f = sc.frame;
  const LorentzElement finv = f.inverse();
  const ReflectionPair canonical = factor_into_reflections(lambda);
  const Mat4& l = lambda.matrix();
  const Mat4 eta = metric();

  CheckReport report;
  report.check = "ambiguity-classification";
  report.samples = trials;
  report.tolerance = tol;
  for (std::size_t i = 0; i < trials; ++i) {
    Sampler s(seed, 0, i);
    const double phi = s.uniform(-std::numbers::pi, std::numbers::pi);
    const double eta_r = s.uniform(-1.0, 1.0);
    const LorentzElement commuting = f * stability_group_element(Vec3::UnitZ(), phi, eta_r) * finv;
    const ReflectionPair alt = ambiguity_conjugate(commuting, canonical, 1e-9);

    // lambda1 inverts the centralizer, so lambda1' lambda1 = C lambda1 C^{-1} lambda1 = C^2.
    const Mat4 sq = alt.first.linear().matrix() * canonical.first.linear().matrix();
    const Mat4 sq0 = finv.matrix() * sq * f.matrix();
    const double phi_m = std::atan2(sq0(2, 1), sq0(1, 1));
    const double eta_m = std::asinh(sq0(0, 3));
    const LorentzElement c = f * stability_group_element(Vec3::UnitZ(), 0.5 * phi_m, 0.5 * eta_m) * finv;
    const PoincareElement h(c);

    const Mat4& cm = c.matrix();
    const double r1 = (canonical.first.conjugated_by(h).affine() - alt.first.affine()).norm();
    const double r2 = (canonical.second.conjugated_by(h).affine() - alt.second.affine()).norm();
    const double r3 = (cm * l - l * cm).norm();
    const double r4 = (cm.transpose() * eta * cm - eta).norm();
    report.record(std::max({r1, r2, r3, r4}));
  }
  report.finalize();
  return report;
}

PoincareElement reflection_conjugator(const Reflection& r)
{
  const Mat4& m = r.linear().matrix();
  const Mat4 id = Mat4::Identity();
  const AdaptedFrame frame = adapted_frame(0.5 * (id - m), 0.5 * (id + m));
  return {LorentzElement::from_trusted(frame_matrix(frame, 1)), r.translation() * 0.5};
}

}  // namespace wg
