#pragma once

#include "wedgegroup/types.hpp"

namespace wg {

/// Linear (antilinear = false) or antilinear operator x -> U conj^a(x).
struct TargetElement {
  CMat matrix;
  bool antilinear = false;

  static TargetElement identity(Eigen::Index dim) { return {CMat::Identity(dim, dim), false}; }

  Eigen::Index dimension() const { return matrix.rows(); }

  /// (U1, a1)(U2, a2) = (U1 conj^{a1}(U2), a1 xor a2)
  TargetElement operator*(const TargetElement& o) const;
  TargetElement inverse() const;
  CVec apply(const CVec& x) const;
};

/// |A - B|_F / max(1, |A|_F, |B|_F); +inf when the antilinear flags or the
/// dimensions differ.
double distance(const TargetElement& a, const TargetElement& b);

/// distance to the identity of the same dimension
double distance_to_identity(const TargetElement& a);

}  // namespace wg
