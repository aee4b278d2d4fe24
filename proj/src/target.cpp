#include "wedgegroup/target.hpp"

#include <algorithm>
#include <limits>

namespace wg {

TargetElement TargetElement::operator*(const TargetElement& o) const
{
  if (antilinear) return {matrix * o.matrix.conjugate(), !o.antilinear};
  return {matrix * o.matrix, o.antilinear};
}

TargetElement TargetElement::inverse() const
{
  const CMat inv = matrix.inverse();
  return {antilinear ? CMat(inv.conjugate()) : inv, antilinear};
}

CVec TargetElement::apply(const CVec& x) const
{
  return antilinear ? CVec(matrix * x.conjugate()) : CVec(matrix * x);
}

double distance(const TargetElement& a, const TargetElement& b)
{
  if (a.antilinear != b.antilinear || a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  const double scale = std::max({1.0, a.matrix.norm(), b.matrix.norm()});
  return (a.matrix - b.matrix).norm() / scale;
}

double distance_to_identity(const TargetElement& a)
{
  return distance(a, TargetElement::identity(a.dimension()));
}

}  // namespace wg
