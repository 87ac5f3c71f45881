#pragma once

// Invariant polynomials of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6,
// evaluated over any commutative ring described by an arithmetic policy with
// add/sub/mul and constant(i64) (integer literals mapped into the ring).

#include <cstdint>

namespace zcc {

template <class Arith>
struct WeierstrassQuantities {
  using T = typename Arith::value_type;
  T b2, b4, b6, b8, c4, c6, delta;
};

template <class Arith, class T = typename Arith::value_type>
WeierstrassQuantities<Arith> weierstrass_quantities(const Arith& k, T a1, T a2, T a3,
                                                   T a4, T a6) {
  auto c = [&](std::int64_t v) { return k.constant(v); };
  auto mul = [&](T x, T y) { return k.mul(x, y); };

  T a1a1 = mul(a1, a1);
  T b2 = k.add(a1a1, mul(c(4), a2));
  T b4 = k.add(mul(c(2), a4), mul(a1, a3));
  T b6 = k.add(mul(a3, a3), mul(c(4), a6));
  // b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2
  T b8 = mul(a1a1, a6);
  b8 = k.add(b8, mul(c(4), mul(a2, a6)));
  b8 = k.sub(b8, mul(a1, mul(a3, a4)));
  b8 = k.add(b8, mul(a2, mul(a3, a3)));
  b8 = k.sub(b8, mul(a4, a4));

  T b2b2 = mul(b2, b2);
  T c4 = k.sub(b2b2, mul(c(24), b4));
  // c6 = -b2^3 + 36 b2 b4 - 216 b6
  T c6 = k.sub(mul(c(36), mul(b2, b4)), mul(b2b2, b2));
  c6 = k.sub(c6, mul(c(216), b6));

  // delta = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
  T delta = mul(c(9), mul(b2, mul(b4, b6)));
  delta = k.sub(delta, mul(b2b2, b8));
  delta = k.sub(delta, mul(c(8), mul(b4, mul(b4, b4))));
  delta = k.sub(delta, mul(c(27), mul(b6, b6)));
  return {b2, b4, b6, b8, c4, c6, delta};
}

/// Discriminant only, with the integer literals reduced once up front.
/// Census loops construct one evaluator per worker.
template <class Arith>
class DiscriminantEvaluator {
 public:
  using T = typename Arith::value_type;

  explicit DiscriminantEvaluator(const Arith& k)
      : k_(k),
        two_(k.constant(2)),
        four_(k.constant(4)),
        eight_(k.constant(8)),
        nine_(k.constant(9)),
        twenty_seven_(k.constant(27)) {}

  T operator()(T a1, T a2, T a3, T a4, T a6) const {
    const Arith& k = k_;
    T a1a1 = k.mul(a1, a1);
    T b2 = k.add(a1a1, k.mul(four_, a2));
    T b4 = k.add(k.mul(two_, a4), k.mul(a1, a3));
    T a3a3 = k.mul(a3, a3);
    T b6 = k.add(a3a3, k.mul(four_, a6));
    T b8 = k.add(k.mul(a1a1, a6), k.mul(four_, k.mul(a2, a6)));
    b8 = k.sub(b8, k.mul(a1, k.mul(a3, a4)));
    b8 = k.add(b8, k.mul(a2, a3a3));
    b8 = k.sub(b8, k.mul(a4, a4));
    T delta = k.mul(nine_, k.mul(b2, k.mul(b4, b6)));
    delta = k.sub(delta, k.mul(k.mul(b2, b2), b8));
    delta = k.sub(delta, k.mul(eight_, k.mul(b4, k.mul(b4, b4))));
    delta = k.sub(delta, k.mul(twenty_seven_, k.mul(b6, b6)));
    return delta;
  }

 private:
  Arith k_;
  T two_, four_, eight_, nine_, twenty_seven_;
};

}  // namespace zcc
