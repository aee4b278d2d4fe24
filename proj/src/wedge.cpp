#include "wedgegroup/wedge.hpp"

#include <cmath>

#include "wedgegroup/errors.hpp"
#include "wedgegroup/frames.hpp"
#include "wedgegroup/reflection.hpp"

namespace wg {

namespace {

FourVector normalize_null(const FourVector& l, double tol, const char* which)
{
  if (l.t() <= tol) {
    throw Error(ErrorCode::PreconditionViolated, std::string(which) + " is not future-directed");
  }
  const FourVector n = l * (1.0 / l.t());
  if (std::abs(minkowski_inner(n, n)) > 10.0 * tol * std::max(1.0, n.vec().squaredNorm())) {
    throw Error(ErrorCode::PreconditionViolated, std::string(which) + " is not lightlike");
  }
  return FourVector::from_spatial(1.0, n.spatial().normalized());
}

Vec4 unit(const Vec4& v)
{
  return v / std::sqrt(std::abs(minkowski_inner(v, v)));
}

// v -> -(s1.v) s1 - (s2.v) s2 for an orthonormal spacelike pair.
Mat4 spacelike_projector(const Vec4& s1, const Vec4& s2)
{
  const Mat4 g = metric();
  return -(s1 * (g * s1).transpose()) - s2 * (g * s2).transpose();
}

}  // namespace

bool EdgePlane::contains(const FourVector& x, double tol) const
{
  const Vec4 y = (x - point).vec();
  const Vec4 off = y - spacelike_projector(u1.vec(), u2.vec()) * y;
  return off.norm() <= tol * (1.0 + y.norm());
}

Wedge Wedge::make(const FourVector& l1, const FourVector& l2, const FourVector& p, double tol)
{
  const FourVector n1 = normalize_null(l1, tol, "l1");
  const FourVector n2 = normalize_null(l2, tol, "l2");
  if ((n1 - n2).vec().norm() <= tol) {
    throw Error(ErrorCode::PreconditionViolated, "wedge normals coincide");
  }
  return Wedge(n1, n2, p);
}

bool Wedge::contains(const FourVector& x) const
{
  const FourVector y = x - p_;
  return minkowski_inner(l1_, y) < 0.0 && minkowski_inner(l2_, y) > 0.0;
}

double Wedge::slack(const FourVector& x) const
{
  const FourVector y = x - p_;
  return std::min(-minkowski_inner(l1_, y), minkowski_inner(l2_, y));
}

bool same_wedge(const Wedge& a, const Wedge& b, double tol)
{
  if ((a.l1() - b.l1()).vec().norm() > tol) return false;
  if ((a.l2() - b.l2()).vec().norm() > tol) return false;
  const FourVector dp = b.p() - a.p();
  const double bound = tol * (1.0 + dp.vec().norm());
  return std::abs(minkowski_inner(a.l1(), dp)) <= bound && std::abs(minkowski_inner(a.l2(), dp)) <= bound;
}

double wedge_distance(const Wedge& a, const Wedge& b)
{
  const FourVector dp = b.p() - a.p();
  const double o1 = minkowski_inner(a.l1(), dp);
  const double o2 = minkowski_inner(a.l2(), dp);
  return std::sqrt((a.l1() - b.l1()).vec().squaredNorm() + (a.l2() - b.l2()).vec().squaredNorm() +
                   o1 * o1 + o2 * o2);
}

Wedge standard_wedge(const Vec3& e, double tol)
{
  const double n = e.norm();
  if (n < tol) throw Error(ErrorCode::ZeroAxis, "wedge direction has zero length");
  const Vec3 u = e / n;
  return Wedge::make(FourVector::from_spatial(1.0, u), FourVector::from_spatial(1.0, -u), FourVector(), tol);
}

Wedge transform(const PoincareElement& g, const Wedge& w)
{
  const LorentzElement& m = g.lorentz();
  FourVector a = m * w.l1();
  FourVector b = m * w.l2();
  if (!m.orthochronous()) {
    std::swap(a, b);
    a = -a;
    b = -b;
  }
  // Lorentz images of normalized null vectors stay null; rescale only.
  return Wedge::make(a * (1.0 / a.t()), b * (1.0 / b.t()), g * w.p(), 1e-6);
}

Wedge act(const PoincareElement& g, const Wedge& w, double tol)
{
  if (g.lorentz()(0, 0) < 1.0 - tol) {
    throw Error(ErrorCode::NotOrthochronous, "wedge action requires an orthochronous element");
  }
  if (g.lorentz().determinant() < 0.0) throw Error(ErrorCode::NotProper, "improper element");
  return transform(g, w);
}

Wedge causal_complement(const Wedge& w)
{
  return Wedge::make(w.l2(), w.l1(), w.p());
}

EdgePlane edge(const Wedge& w)
{
  const Mat4 onto_t = null_pair_projector(w.l1().vec(), w.l2().vec());
  const AdaptedFrame f = adapted_frame(onto_t, Mat4::Identity() - onto_t);
  return {w.p(), FourVector(f.s1), FourVector(f.s2)};
}

PoincareElement wedge_frame(const Wedge& w)
{
  const Vec4 l1 = w.l1().vec();
  const Vec4 l2 = w.l2().vec();
  const double n = std::sqrt(2.0 * minkowski_inner(l1, l2));
  const EdgePlane e = edge(w);
  const AdaptedFrame f{(l1 + l2) / n, (l1 - l2) / n, e.u1.vec(), e.u2.vec()};
  return {LorentzElement::from_trusted(frame_matrix(f, 1)), w.p()};
}

PoincareElement transform_between(const Wedge& from, const Wedge& to)
{
  return wedge_frame(to) * wedge_frame(from).inverse();
}

DoubleCone DoubleCone::make(const FourVector& past, const FourVector& future, double tol)
{
  if (classify_vector(future - past, tol) != CausalClass::TimelikeFuture) {
    throw Error(ErrorCode::PreconditionViolated, "double cone apexes must be timelike-future separated");
  }
  return DoubleCone(past, future);
}

double DoubleCone::proper_height() const
{
  const FourVector d = future_ - past_;
  return std::sqrt(minkowski_inner(d, d));
}

bool DoubleCone::contains(const FourVector& x, double tol) const
{
  const FourVector a = x - past_;
  const FourVector b = future_ - x;
  return minkowski_inner(a, a) >= -tol && a.t() >= -tol && minkowski_inner(b, b) >= -tol && b.t() >= -tol;
}

std::vector<FourVector> DoubleCone::sample_extreme_points() const
{
  const double r = 0.5 * proper_height();
  const LorentzElement boost = rest_frame_boost(future_ - past_);
  const FourVector c = center();
  std::vector<FourVector> pts{past_, future_};
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) {
      for (int k = -1; k <= 1; ++k) {
        if (i == 0 && j == 0 && k == 0) continue;
        const Vec3 d = Vec3(i, j, k).normalized();
        pts.push_back(c + r * (boost * FourVector::from_spatial(0.0, d)));
      }
    }
  }
  return pts;
}

FourVector DoubleCone::equatorial_minimizer(const FourVector& l, double sign) const
{
  const double r = 0.5 * proper_height();
  const LorentzElement boost = rest_frame_boost(future_ - past_);
  // l.(B(0,d)) = (B^{-1} l).(0,d) = -q.d
  const Vec3 q = (boost.inverse() * l).spatial();
  const Vec3 d = q.norm() > 0.0 ? Vec3(sign * q / q.norm()) : Vec3::UnitX();
  return center() + r * (boost * FourVector::from_spatial(0.0, d));
}

bool strictly_inside(const DoubleCone& c, const Wedge& w, double neighborhood)
{
  std::vector<FourVector> pts = c.sample_extreme_points();
  pts.push_back(c.equatorial_minimizer(w.l1(), -1.0));
  pts.push_back(c.equatorial_minimizer(w.l2(), 1.0));
  for (const FourVector& x : pts) {
    const double margin = neighborhood * (1.0 + (x - w.p()).vec().norm());
    const double s = w.slack(x);
    if (s <= 0.0 || s < margin) return false;
  }
  return true;
}

bool strictly_outside_approx(const DoubleCone& c, const Wedge& w, double neighborhood)
{
  return strictly_inside(c, w, neighborhood);
}

std::vector<InterpolatedWedge> interpolating_wedges(const std::vector<Reflection>& family,
                                                    const Reflection& lambda0, const Wedge& w0, double tol)
{
  const Reflection expected = reflection_for_wedge(w0);
  const Mat5 defect = lambda0.element().affine() - expected.element().affine();
  if (defect.norm() > tol * std::max(1.0, expected.element().affine().squaredNorm())) {
    throw Error(ErrorCode::PreconditionViolated, "lambda0 is not the reflection about the edge of W0");
  }

  const PoincareElement frame0 = wedge_frame(w0);
  const Mat4& f0 = frame0.lorentz().matrix();
  const AdaptedFrame base{f0.col(0), f0.col(1), f0.col(2), f0.col(3)};
  const Mat5 a0 = lambda0.element().affine();

  std::vector<InterpolatedWedge> out;
  out.reserve(family.size());
  for (const Reflection& ld : family) {
    const Mat5 half = 0.5 * (Mat5::Identity() + ld.element().affine() * a0);
    const Mat4 lin = half.topLeftCorner<4, 4>();
    Eigen::Matrix<double, 5, 1> p0;
    p0 << w0.p().vec(), 1.0;
    const Vec4 q = (half * p0).head<4>();

    const Vec4 v1 = lin * base.s1;
    const Vec4 v2 = lin * base.s2;
    const double g11 = minkowski_inner(v1, v1);
    const double g12 = minkowski_inner(v1, v2);
    const double g22 = minkowski_inner(v2, v2);
    if (!(g11 < -tol && g11 * g22 - g12 * g12 > tol)) {
      throw Error(ErrorCode::DegenerateEdge, "image of the edge is not a spacelike plane");
    }
    AdaptedFrame f;
    f.s1 = unit(v1);
    f.s2 = unit(Vec4(v2 + minkowski_inner(v2, f.s1) * f.s1));
    const Mat4 onto_t = Mat4::Identity() - spacelike_projector(f.s1, f.s2);
    f.u = unit(onto_t * base.u);
    if (f.u[0] < 0.0) f.u = -f.u;
    const Vec4 wt = onto_t * base.w;
    f.w = unit(Vec4(wt - minkowski_inner(f.u, wt) * f.u));

    const LorentzElement lf = LorentzElement::from_trusted(frame_matrix(f, 1));
    const LorentzElement transport_lin = lf * frame0.lorentz().inverse();
    const FourVector shift = FourVector(q) - transport_lin * w0.p();
    const PoincareElement transport(transport_lin, shift);
    out.push_back({act(transport, w0), transport});
  }
  return out;
}

}  // namespace wg
