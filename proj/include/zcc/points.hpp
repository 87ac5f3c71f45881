#pragma once

#include "zcc/curve.hpp"

namespace zcc {

/// Affine solutions only; the point at infinity is never counted.
struct PointCount {
  u64 count;
  /// The curve's discriminant is not a unit. The count is still exact.
  bool singular;
};

/// Full O(n^2) scan of (x, y) in (Z/n)^2, with the x range split across workers.
PointCount affine_point_count(const GeneralCurve& e, unsigned workers = 1);
PointCount affine_point_count(const ReducedCurve& e, unsigned workers = 1);

}  // namespace zcc
