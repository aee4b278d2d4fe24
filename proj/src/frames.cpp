#include "wedgegroup/frames.hpp"

#include <cmath>

#include "wedgegroup/errors.hpp"
#include "wedgegroup/minkowski.hpp"

namespace wg {

namespace {

// Largest (Euclidean) projected coordinate axis after g-orthogonalizing
// against the vectors in `against`.
Vec4 best_candidate(const Mat4& proj, std::initializer_list<const Vec4*> against)
{
  Vec4 best = Vec4::Zero();
  for (int i = 0; i < 4; ++i) {
    Vec4 v = proj.col(i);
    for (const Vec4* a : against) {
      const double aa = minkowski_inner(*a, *a);
      v -= (minkowski_inner(*a, v) / aa) * (*a);
    }
    if (v.norm() > best.norm()) best = v;
  }
  return best;
}

Vec4 normalized(const Vec4& v, double expected_sign)
{
  const double vv = minkowski_inner(v, v);
  if (vv * expected_sign <= 0.0 || v.norm() == 0.0) {
    throw Error(ErrorCode::DegenerateEdge, "plane does not have the expected causal type");
  }
  return v / std::sqrt(std::abs(vv));
}

}  // namespace

AdaptedFrame adapted_frame(const Mat4& onto_t, const Mat4& onto_s)
{
  AdaptedFrame f;
  // For a g-orthogonal splitting the T-part of e_t has norm >= 1.
  f.u = normalized(onto_t.col(0), 1.0);
  if (f.u[0] < 0.0) f.u = -f.u;
  f.w = normalized(best_candidate(onto_t, {&f.u}), -1.0);
  f.s1 = normalized(best_candidate(onto_s, {}), -1.0);
  f.s2 = normalized(best_candidate(onto_s, {&f.s1}), -1.0);
  return f;
}

Mat4 frame_matrix(const AdaptedFrame& frame, int w_column)
{
  Mat4 m;
  m.col(0) = frame.u;
  m.col(w_column) = frame.w;
  int next = 1;
  for (const Vec4* s : {&frame.s1, &frame.s2}) {
    if (next == w_column) ++next;
    m.col(next++) = *s;
  }
  if (m.determinant() < 0.0) {
    // flip whichever column holds s2
    const int s2_col = (w_column == 3) ? 2 : 3;
    m.col(s2_col) = -m.col(s2_col);
  }
  return m;
}

Mat4 null_pair_projector(const Vec4& l1, const Vec4& l2)
{
  const double c = minkowski_inner(l1, l2);
  const Mat4 g = metric();
  // P v = [(l2.v) l1 + (l1.v) l2] / (l1.l2)
  Mat4 p = (l1 * (g * l2).transpose() + l2 * (g * l1).transpose()) / c;
  return p;
}

}  // namespace wg
