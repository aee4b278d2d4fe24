#pragma once

#include <optional>

#include "wedgegroup/types.hpp"

namespace wg {

/// Point or direction in Minkowski space, time component first.
class FourVector {
 public:
  FourVector() = default;
  FourVector(double t, double x, double y, double z);
  explicit FourVector(const Vec4& components);

  static FourVector time_axis() { return {1.0, 0.0, 0.0, 0.0}; }
  static FourVector from_spatial(double t, const Vec3& spatial);

  double t() const { return v_[0]; }
  double x() const { return v_[1]; }
  double y() const { return v_[2]; }
  double z() const { return v_[3]; }
  double operator[](int i) const { return v_[i]; }
  Vec3 spatial() const { return v_.tail<3>(); }
  const Vec4& vec() const { return v_; }

  FourVector operator+(const FourVector& o) const { return FourVector(Vec4(v_ + o.v_)); }
  FourVector operator-(const FourVector& o) const { return FourVector(Vec4(v_ - o.v_)); }
  FourVector operator-() const { return FourVector(Vec4(-v_)); }
  FourVector operator*(double s) const { return FourVector(Vec4(v_ * s)); }

 private:
  Vec4 v_ = Vec4::Zero();
};

inline FourVector operator*(double s, const FourVector& v) { return v * s; }

/// a0 b0 - a.b
double minkowski_inner(const FourVector& a, const FourVector& b);
double minkowski_inner(const Vec4& a, const Vec4& b);

enum class CausalClass {
  TimelikeFuture,
  TimelikePast,
  Spacelike,
  LightlikeFuture,
  LightlikePast,
  Zero,
};

const char* to_string(CausalClass c);

/// Lightlike means |v.v| <= tol * max(1, |v|^2) in the Euclidean norm.
CausalClass classify_vector(const FourVector& v, double tol = kDefaultTolerance);

/// 4x4 real matrix preserving the Minkowski metric. Either component of the
/// full Lorentz group; `proper()` and `orthochronous()` classify it.
class LorentzElement {
 public:
  LorentzElement() = default;

  /// Validates finiteness, m^T g m = g (to 10*tol, scaled by |m|^2) and
  /// |det m| = 1.
  static LorentzElement from_matrix(const Mat4& m, double tol = kDefaultTolerance);
  /// No validation; for matrices that are Lorentz by construction.
  static LorentzElement from_trusted(const Mat4& m);

  const Mat4& matrix() const { return m_; }
  double operator()(int r, int c) const { return m_(r, c); }

  double determinant() const { return m_.determinant(); }
  bool proper() const { return determinant() > 0.0; }
  bool orthochronous() const { return m_(0, 0) > 0.0; }

  /// g m^T g, exact for metric-preserving matrices.
  LorentzElement inverse() const;

  LorentzElement operator*(const LorentzElement& o) const { return from_trusted(m_ * o.m_); }
  FourVector operator*(const FourVector& v) const { return FourVector(Vec4(m_ * v.vec())); }

 private:
  explicit LorentzElement(const Mat4& m) : m_(m) {}
  Mat4 m_ = Mat4::Identity();
};

/// Element (Lambda, a) of the Poincare group acting as x -> Lambda x + a.
class PoincareElement {
 public:
  PoincareElement() = default;
  PoincareElement(LorentzElement lorentz, FourVector translation)
    : lorentz_(std::move(lorentz)), translation_(translation) {}
  explicit PoincareElement(LorentzElement lorentz) : lorentz_(std::move(lorentz)) {}

  static PoincareElement translation_by(const FourVector& a) { return {LorentzElement(), a}; }

  const LorentzElement& lorentz() const { return lorentz_; }
  const FourVector& translation() const { return translation_; }

  PoincareElement operator*(const PoincareElement& o) const;
  FourVector operator*(const FourVector& x) const;
  PoincareElement inverse() const;

  /// [[Lambda, a], [0, 1]]
  Mat5 affine() const;

 private:
  LorentzElement lorentz_;
  FourVector translation_;
};

/// Result of splitting a proper orthochronous element into rotation * boost.
struct PolarData {
  LorentzElement rotation;
  LorentzElement boost;
  std::optional<Vec3> axis;       // empty iff angle == 0
  double angle = 0.0;             // in [0, pi]
  std::optional<Vec3> boost_dir;  // empty iff rapidity == 0
  double rapidity = 0.0;
};

PolarData polar_decompose(const LorentzElement& lambda, double tol = kDefaultTolerance);

/// Counterclockwise rotation about `axis`. Throws ZeroAxis for |axis| < tol.
LorentzElement make_rotation(const Vec3& axis, double angle, double tol = kDefaultTolerance);

/// Boost with (1, dir) an eigenvector of eigenvalue exp(rapidity).
LorentzElement make_boost(const Vec3& dir, double rapidity, double tol = kDefaultTolerance);

/// Pure boost taking e_t to the unit vector along the timelike vector v
/// (along -v when v is past-directed). Throws PreconditionViolated for
/// non-timelike v.
LorentzElement rest_frame_boost(const FourVector& v, double tol = kDefaultTolerance);

/// Angle in [0, pi] and unit axis of a 3x3 rotation; axis empty when the
/// angle vanishes. For angle pi the axis has its first nonzero component
/// positive.
std::pair<double, std::optional<Vec3>> rotation_angle_axis(const Mat3& q, double tol = kDefaultTolerance);

enum class ConjugacyClass {
  Identity,
  Involution,
  ConjugateIntoL0,
  Exceptional,
};

const char* to_string(ConjugacyClass c);

/// Conjugacy type of a proper orthochronous element, read off from the
/// trace invariants (eigenvalues e^{+-chi}, e^{+-i theta}). Elements whose
/// eigenvalues are all 1 but which differ from the identity are the
/// parabolic classes and are reported as Exceptional.
ConjugacyClass classify_conjugacy(const LorentzElement& lambda, double tol = kDefaultTolerance);

/// Lambda = frame * L0(e_z; angle, rapidity) * frame^{-1} with frame proper
/// orthochronous.
struct StabilityConjugation {
  LorentzElement frame;
  double angle = 0.0;
  double rapidity = 0.0;
};

/// Throws PreconditionViolated for elements whose eigenvalues are all 1.
StabilityConjugation stability_conjugation(const LorentzElement& lambda, double tol = kDefaultTolerance);

void require_proper_orthochronous(const LorentzElement& lambda, double tol = kDefaultTolerance);

/// Frobenius-scale used to turn absolute tolerances into relative ones.
inline double scale_of(const Mat4& m) { return std::max(1.0, m.squaredNorm()); }

}  // namespace wg
