#pragma once

#include <array>
#include <vector>

#include "wedgegroup/minkowski.hpp"

namespace wg {

class Reflection;

/// Two-dimensional spacelike plane through `point` spanned by u1, u2
/// (u1.u1 = u2.u2 = -1, u1.u2 = 0).
struct EdgePlane {
  FourVector point;
  FourVector u1;
  FourVector u2;

  FourVector at(double s, double t) const { return point + s * u1 + t * u2; }
  /// Minkowski-orthogonal distance check: x - point lies in span{u1, u2}.
  bool contains(const FourVector& x, double tol = kDefaultTolerance) const;
};

/// Region {x : l1.(x-p) < 0, l2.(x-p) > 0} bounded by two characteristic
/// planes. l1, l2 are future lightlike with time component 1.
class Wedge {
 public:
  /// Normalizes l1, l2 to time component 1; throws if either is not future
  /// lightlike or if they coincide.
  static Wedge make(const FourVector& l1, const FourVector& l2, const FourVector& p,
                    double tol = kDefaultTolerance);

  const FourVector& l1() const { return l1_; }
  const FourVector& l2() const { return l2_; }
  const FourVector& p() const { return p_; }

  bool contains(const FourVector& x) const;
  /// min(-l1.(x-p), l2.(x-p)); positive iff x is inside.
  double slack(const FourVector& x) const;

 private:
  Wedge(const FourVector& l1, const FourVector& l2, const FourVector& p) : l1_(l1), l2_(l2), p_(p) {}
  FourVector l1_, l2_, p_;
};

/// Normal pairs equal within tol and edge planes coincide; the base point
/// may slide along the edge.
bool same_wedge(const Wedge& a, const Wedge& b, double tol = kDefaultTolerance);

/// Frobenius distance between normal frames plus the offset of b's edge
/// point from a's edge plane. Not canonical; one concrete metric on the
/// wedge family.
double wedge_distance(const Wedge& a, const Wedge& b);

/// W_e = {x : x.e > |x0|}.
Wedge standard_wedge(const Vec3& e, double tol = kDefaultTolerance);

/// Image g W for proper orthochronous g. Throws NotOrthochronous otherwise.
Wedge act(const PoincareElement& g, const Wedge& w, double tol = kDefaultTolerance);

/// Image g W for any Poincare element; antichronous g swaps the roles of
/// the two normals.
Wedge transform(const PoincareElement& g, const Wedge& w);

/// W' : the ordered normals swapped.
Wedge causal_complement(const Wedge& w);

EdgePlane edge(const Wedge& w);

/// Proper orthochronous g with g W_{e_x} = W.
PoincareElement wedge_frame(const Wedge& w);

/// Proper orthochronous g with act(g, from) = to.
PoincareElement transform_between(const Wedge& from, const Wedge& to);

/// Closed causal diamond: future cone of `past` meets past cone of `future`.
class DoubleCone {
 public:
  static DoubleCone make(const FourVector& past, const FourVector& future,
                         double tol = kDefaultTolerance);

  const FourVector& past() const { return past_; }
  const FourVector& future() const { return future_; }
  FourVector center() const { return 0.5 * (past_ + future_); }
  double proper_height() const;

  bool contains(const FourVector& x, double tol = 0.0) const;

  /// Apexes followed by 26 equatorial points (directions of the 3x3x3
  /// lattice around the centre, in the rest frame of the axis).
  std::vector<FourVector> sample_extreme_points() const;

  /// Point of the equatorial sphere minimizing sign * l.x.
  FourVector equatorial_minimizer(const FourVector& l, double sign) const;

 private:
  DoubleCone(const FourVector& past, const FourVector& future) : past_(past), future_(future) {}
  FourVector past_, future_;
};

inline constexpr double kDefaultNeighborhood = 1e-6;

/// C is contained in every wedge within `neighborhood` of W: every extreme
/// point x of C satisfies both wedge inequalities with slack at least
/// neighborhood * (1 + |x - p|).
bool strictly_inside(const DoubleCone& c, const Wedge& w, double neighborhood = kDefaultNeighborhood);

/// The outer-approximation relation. Both relations mean "every wedge in a
/// neighborhood of W contains C", so this shares the margin test above.
bool strictly_outside_approx(const DoubleCone& c, const Wedge& w,
                             double neighborhood = kDefaultNeighborhood);

struct InterpolatedWedge {
  Wedge wedge;
  PoincareElement transport;  // maps W0 to `wedge` and E0 to E_delta
};

/// For each lambda_delta, the wedge upsilon_delta W0 whose edge
/// 1/2 (1 + lambda_delta lambda0) E0 is pointwise fixed by lambda_delta.
/// Throws DegenerateEdge if that image plane is not spacelike.
std::vector<InterpolatedWedge> interpolating_wedges(const std::vector<Reflection>& family,
                                                    const Reflection& lambda0, const Wedge& w0,
                                                    double tol = kDefaultTolerance);

}  // namespace wg
