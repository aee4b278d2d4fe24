#include "wedgegroup/minkowski.hpp"

#include <cmath>
#include <numbers>

#include "wedgegroup/errors.hpp"
#include "wedgegroup/frames.hpp"

namespace wg {

namespace {

void require_finite(const Vec4& v)
{
  if (!v.allFinite()) throw Error(ErrorCode::NonFinite, "four-vector has NaN or Inf component");
}

Vec3 unit_or_throw(const Vec3& v, double tol, const char* what)
{
  const double n = v.norm();
  if (!std::isfinite(n) || n < tol) throw Error(ErrorCode::ZeroAxis, what);
  return v / n;
}

}  // namespace

FourVector::FourVector(double t, double x, double y, double z) : v_(t, x, y, z)
{
  require_finite(v_);
}

FourVector::FourVector(const Vec4& components) : v_(components)
{
  require_finite(v_);
}

FourVector FourVector::from_spatial(double t, const Vec3& spatial)
{
  return FourVector(t, spatial[0], spatial[1], spatial[2]);
}

double minkowski_inner(const Vec4& a, const Vec4& b)
{
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

double minkowski_inner(const FourVector& a, const FourVector& b)
{
  return minkowski_inner(a.vec(), b.vec());
}

const char* to_string(CausalClass c)
{
  switch (c) {
    case CausalClass::TimelikeFuture: return "timelike-future";
    case CausalClass::TimelikePast: return "timelike-past";
    case CausalClass::Spacelike: return "spacelike";
    case CausalClass::LightlikeFuture: return "lightlike-future";
    case CausalClass::LightlikePast: return "lightlike-past";
    case CausalClass::Zero: return "zero";
  }
  return "unknown";
}

CausalClass classify_vector(const FourVector& v, double tol)
{
  const double e2 = v.vec().squaredNorm();
  if (std::sqrt(e2) <= tol) return CausalClass::Zero;
  const double vv = minkowski_inner(v, v);
  if (std::abs(vv) <= tol * std::max(1.0, e2)) {
    return v.t() > 0.0 ? CausalClass::LightlikeFuture : CausalClass::LightlikePast;
  }
  if (vv < 0.0) return CausalClass::Spacelike;
  return v.t() > 0.0 ? CausalClass::TimelikeFuture : CausalClass::TimelikePast;
}

LorentzElement LorentzElement::from_matrix(const Mat4& m, double tol)
{
  if (!m.allFinite()) throw Error(ErrorCode::NonFinite, "matrix has NaN or Inf entry");
  const Mat4 g = metric();
  const double defect = (m.transpose() * g * m - g).norm();
  if (defect > 10.0 * tol * scale_of(m)) {
    throw Error(ErrorCode::NotLorentz, "matrix does not preserve the Minkowski metric (defect " +
                                         std::to_string(defect) + ")");
  }
  const double det = m.determinant();
  if (std::abs(std::abs(det) - 1.0) > 10.0 * tol * scale_of(m)) {
    throw Error(ErrorCode::NotLorentz, "determinant is not +-1");
  }
  return LorentzElement(m);
}

LorentzElement LorentzElement::from_trusted(const Mat4& m)
{
  return LorentzElement(m);
}

LorentzElement LorentzElement::inverse() const
{
  const Mat4 g = metric();
  return LorentzElement(g * m_.transpose() * g);
}

PoincareElement PoincareElement::operator*(const PoincareElement& o) const
{
  return {lorentz_ * o.lorentz_, translation_ + lorentz_ * o.translation_};
}

FourVector PoincareElement::operator*(const FourVector& x) const
{
  return lorentz_ * x + translation_;
}

PoincareElement PoincareElement::inverse() const
{
  const LorentzElement inv = lorentz_.inverse();
  return {inv, -(inv * translation_)};
}

Mat5 PoincareElement::affine() const
{
  Mat5 a = Mat5::Identity();
  a.topLeftCorner<4, 4>() = lorentz_.matrix();
  a.topRightCorner<4, 1>() = translation_.vec();
  return a;
}

void require_proper_orthochronous(const LorentzElement& lambda, double tol)
{
  if (lambda(0, 0) < 1.0 - tol) {
    throw Error(ErrorCode::NotOrthochronous, "time component m00 < 1");
  }
  if (lambda.determinant() < 0.0) throw Error(ErrorCode::NotProper, "determinant is negative");
}

LorentzElement make_rotation(const Vec3& axis, double angle, double tol)
{
  const Vec3 n = unit_or_throw(axis, tol, "rotation axis has zero length");
  Mat4 m = Mat4::Identity();
  m.bottomRightCorner<3, 3>() = Eigen::AngleAxisd(angle, n).toRotationMatrix();
  return LorentzElement::from_trusted(m);
}

LorentzElement make_boost(const Vec3& dir, double rapidity, double tol)
{
  const Vec3 n = unit_or_throw(dir, tol, "boost direction has zero length");
  const double sh = std::sinh(rapidity);
  const double half = std::sinh(0.5 * rapidity);
  const double gm1 = 2.0 * half * half;  // cosh - 1 without cancellation
  Mat4 m = Mat4::Identity();
  m(0, 0) = 1.0 + gm1;
  m.block<1, 3>(0, 1) = sh * n.transpose();
  m.block<3, 1>(1, 0) = sh * n;
  m.bottomRightCorner<3, 3>() += gm1 * n * n.transpose();
  return LorentzElement::from_trusted(m);
}

LorentzElement rest_frame_boost(const FourVector& v, double tol)
{
  const double vv = minkowski_inner(v, v);
  if (vv <= tol * std::max(1.0, v.vec().squaredNorm())) {
    throw Error(ErrorCode::PreconditionViolated, "rest frame requires a timelike vector");
  }
  Vec4 n = v.vec() / std::sqrt(vv);
  if (n[0] < 0.0) n = -n;
  const Vec3 s = n.tail<3>();
  const double sn = s.norm();
  if (sn <= 1e-300) return LorentzElement();
  return make_boost(s / sn, std::asinh(sn));
}

std::pair<double, std::optional<Vec3>> rotation_angle_axis(const Mat3& q, double tol)
{
  const Vec3 w = 0.5 * Vec3(q(2, 1) - q(1, 2), q(0, 2) - q(2, 0), q(1, 0) - q(0, 1));
  const double c = 0.5 * (q.trace() - 1.0);
  const double s = w.norm();
  const double angle = std::atan2(s, c);
  if (angle <= tol) return {0.0, std::nullopt};
  if (s > 1e-6) return {angle, Vec3(w / s)};

  // Near pi the antisymmetric part vanishes; the axis spans the top
  // eigenvector of the symmetric part.
  Eigen::SelfAdjointEigenSolver<Mat3> eig(0.5 * (q + q.transpose()));
  Vec3 axis = eig.eigenvectors().col(2).normalized();
  const double along = w.dot(axis);
  if (std::abs(along) > tol) {
    if (along < 0.0) axis = -axis;
  } else {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(axis[i]) > tol) {
        if (axis[i] < 0.0) axis = -axis;
        break;
      }
    }
  }
  return {angle, axis};
}

PolarData polar_decompose(const LorentzElement& lambda, double tol)
{
  require_proper_orthochronous(lambda, tol);

  // The boost factor shares the time row of lambda (the rotation fixes e_t),
  // and a boost is determined by its time row.
  const Vec3 v = lambda.matrix().block<1, 3>(0, 1).transpose();
  const double sv = v.norm();
  PolarData out;
  out.rapidity = std::asinh(sv);
  Mat4 r = lambda.matrix();
  if (out.rapidity > tol) {
    const Vec3 b = v / sv;
    out.boost_dir = b;
    out.boost = make_boost(b, out.rapidity);
    r = lambda.matrix() * make_boost(b, -out.rapidity).matrix();
  } else {
    out.rapidity = 0.0;
  }
  r.row(0) = Vec4::UnitX().transpose();
  r.col(0) = Vec4::UnitX();
  out.rotation = LorentzElement::from_trusted(r);

  const auto [angle, axis] = rotation_angle_axis(r.bottomRightCorner<3, 3>(), tol);
  out.angle = angle;
  out.axis = axis;
  return out;
}

const char* to_string(ConjugacyClass c)
{
  switch (c) {
    case ConjugacyClass::Identity: return "identity";
    case ConjugacyClass::Involution: return "involution";
    case ConjugacyClass::ConjugateIntoL0: return "conjugate-into-L0";
    case ConjugacyClass::Exceptional: return "exceptional";
  }
  return "unknown";
}

namespace {

// cosh(chi) and cos(theta) from tr(L) = 2cosh + 2cos and
// tr(L^2) = 4cosh^2 + 4cos^2 - 4.
std::pair<double, double> trace_invariants(const Mat4& m)
{
  const double sum = 0.5 * m.trace();
  const double sumsq = 0.25 * ((m * m).trace() + 4.0);
  const double disc = std::max(0.0, 2.0 * sumsq - sum * sum);
  const double root = std::sqrt(disc);
  return {0.5 * (sum + root), 0.5 * (sum - root)};
}

}  // namespace

ConjugacyClass classify_conjugacy(const LorentzElement& lambda, double tol)
{
  require_proper_orthochronous(lambda, tol);
  const Mat4& m = lambda.matrix();
  const Mat4 id = Mat4::Identity();
  const double sc = scale_of(m);
  if ((m - id).norm() <= 10.0 * tol) return ConjugacyClass::Identity;

  const double t1 = m.trace();
  const double t2 = (m * m).trace();
  if (std::abs(t1 - 4.0) <= 10.0 * tol * sc && std::abs(t2 - 4.0) <= 10.0 * tol * sc * sc) {
    return ConjugacyClass::Exceptional;
  }
  if ((m * m - id).norm() <= 10.0 * tol * sc) return ConjugacyClass::Involution;
  return ConjugacyClass::ConjugateIntoL0;
}

StabilityConjugation stability_conjugation(const LorentzElement& lambda, double tol)
{
  require_proper_orthochronous(lambda, tol);
  const Mat4& m = lambda.matrix();
  const auto [a, b] = trace_invariants(m);
  if (a - b <= std::sqrt(tol)) {
    throw Error(ErrorCode::PreconditionViolated,
                "all eigenvalues equal 1; element is not conjugate into a wedge stability group");
  }
  const Mat4 k = m + lambda.inverse().matrix();
  const Mat4 onto_t = (k - 2.0 * b * Mat4::Identity()) / (2.0 * (a - b));
  const Mat4 onto_s = Mat4::Identity() - onto_t;

  // T = span{e_t, e_z} in the standard frame, the stability plane of W_{e_z}.
  const Mat4 f = frame_matrix(adapted_frame(onto_t, onto_s), 3);
  StabilityConjugation out;
  out.frame = LorentzElement::from_trusted(f);
  const Mat4 l0 = out.frame.inverse().matrix() * m * f;
  out.angle = std::atan2(l0(2, 1), l0(1, 1));
  out.rapidity = std::asinh(l0(0, 3));
  return out;
}

}  // namespace wg
