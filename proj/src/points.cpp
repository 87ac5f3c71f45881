#include "zcc/points.hpp"

#include <vector>

#include "zcc/parallel.hpp"

namespace zcc {

PointCount affine_point_count(const GeneralCurve& e, unsigned workers) {
  const u64 n = e.modulus();
  const ModArith k{n};
  const auto& a = e.coefficients();
  // y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
  std::vector<u64> y_squared(n);
  for (u64 y = 0; y < n; ++y) y_squared[y] = k.mul(y, y);
  u64 count = parallel_sum(n, workers, [&](u64 begin, u64 end) {
    u64 local = 0;
    for (u64 x = begin; x < end; ++x) {
      u64 rhs = k.add(k.mul(k.add(k.mul(k.add(x, a[1]), x), a[3]), x), a[4]);
      u64 linear = k.add(k.mul(a[0], x), a[2]);
      for (u64 y = 0; y < n; ++y)
        if (k.add(y_squared[y], k.mul(linear, y)) == rhs) ++local;
    }
    return local;
  });
  return {count, !is_nonsingular(e)};
}

PointCount affine_point_count(const ReducedCurve& e, unsigned workers) {
  return affine_point_count(embed(e), workers);
}

}  // namespace zcc
