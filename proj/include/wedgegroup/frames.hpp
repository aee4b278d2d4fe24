#pragma once

#include "wedgegroup/types.hpp"

namespace wg {

/// Minkowski-orthonormal frame adapted to a splitting R^4 = T + S into a
/// timelike 2-plane T and its g-orthogonal spacelike complement S.
struct AdaptedFrame {
  Vec4 u;   // future unit timelike, in T
  Vec4 w;   // unit spacelike, in T, orthogonal to u
  Vec4 s1;  // unit spacelike, in S
  Vec4 s2;  // unit spacelike, in S, orthogonal to s1
};

/// `onto_t` and `onto_s` are complementary g-orthogonal projectors. The
/// frame is built deterministically by projecting coordinate axes.
AdaptedFrame adapted_frame(const Mat4& onto_t, const Mat4& onto_s);

/// Proper orthochronous matrix with u in column 0, w in column `w_column`
/// and s1, s2 filling the remaining columns in order (s2 negated if needed
/// to make the determinant positive).
Mat4 frame_matrix(const AdaptedFrame& frame, int w_column);

/// g-orthogonal projector onto span{l1, l2} for independent null vectors.
Mat4 null_pair_projector(const Vec4& l1, const Vec4& l2);

}  // namespace wg
