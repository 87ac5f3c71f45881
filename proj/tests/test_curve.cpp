#include <doctest.h>

#include "oracles.hpp"
#include "zcc/curve.hpp"
#include "zcc/transform.hpp"

using namespace zcc;
using oracle::i128;

namespace {

GeneralCurve::Coefficients tuple(u64 index, u64 n) {
  GeneralCurve::Coefficients a{};
  for (std::size_t i = 5; i-- > 0;) a[i] = index % n, index /= n;
  return a;
}

GeneralCurve random_curve(u64 n) {
  return GeneralCurve::from_normalized(
      n, {oracle::uniform(n), oracle::uniform(n), oracle::uniform(n), oracle::uniform(n), oracle::uniform(n)});
}

// Over a prime field a Weierstrass cubic is singular iff some affine point
// satisfies F = dF/dx = dF/dy = 0.
bool singular_by_points(const GeneralCurve::Coefficients& a, u64 p) {
  for (u64 x = 0; x < p; ++x)
    for (u64 y = 0; y < p; ++y) {
      i128 X = x, Y = y;
      i128 fy = 2 * Y + a[0] * X + a[2];
      i128 fx = a[0] * Y - 3 * X * X - 2 * a[1] * X - a[3];
      if (oracle::mod(fy, p) == 0 && oracle::mod(fx, p) == 0 && oracle::mod(oracle::equation(a, X, Y), p) == 0)
        return true;
    }
  return false;
}

}  // namespace

TEST_CASE("general invariants match the integer formulas") {
  for (u64 n : {5ULL, 12ULL, 35ULL, 64ULL}) {
    const u64 count = n == 5 ? 3125 : 2000;
    for (u64 i = 0; i < count; ++i) {
      auto e = n == 5 ? GeneralCurve::from_normalized(5, tuple(i, 5)) : random_curve(n);
      const auto& a = e.coefficients();
      auto want = oracle::invariants(a[0], a[1], a[2], a[3], a[4]);
      auto got = invariants_general(e);
      CHECK(got.b2.value() == oracle::mod(want.b2, n));
      CHECK(got.b4.value() == oracle::mod(want.b4, n));
      CHECK(got.b6.value() == oracle::mod(want.b6, n));
      CHECK(got.b8.value() == oracle::mod(want.b8, n));
      CHECK(got.c4.value() == oracle::mod(want.c4, n));
      CHECK(got.c6.value() == oracle::mod(want.c6, n));
      CHECK(got.delta.value() == oracle::mod(want.delta, n));
      CHECK(got.j.has_value() == oracle::unit(got.delta.value(), n));
      if (got.j) CHECK((*got.j * got.delta) == got.c4 * got.c4 * got.c4);
    }
  }
}

TEST_CASE("classical identities hold in every ring") {
  for (u64 n = 2; n <= 60; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      auto inv = invariants_general(random_curve(n));
      Residue k1728(1728, n), four(4, n);
      CHECK(inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6 == k1728 * inv.delta);
      CHECK(four * inv.b8 == inv.b2 * inv.b6 - inv.b4 * inv.b4);
    }
  }
}

TEST_CASE("unit discriminant is exactly nonsingularity over prime fields") {
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    const u64 total = p * p * p * p * p;
    for (u64 i = 0; i < total; ++i) {
      auto a = tuple(i, p);
      CHECK(is_nonsingular(GeneralCurve::from_normalized(p, a)) == !singular_by_points(a, p));
    }
  }
}

TEST_CASE("reduced invariants") {
  for (u64 n : {5ULL, 7ULL, 11ULL, 25ULL, 35ULL}) {
    for (u64 a = 0; a < n; ++a)
      for (u64 b = 0; b < n; ++b) {
        ReducedCurve e(n, static_cast<i64>(a), static_cast<i64>(b));
        auto inv = invariants_reduced(e);
        CHECK(inv.delta.value() == oracle::reduced_delta(a, b, n));
        CHECK(inv.delta == invariants_general(embed(e)).delta);
        CHECK(is_nonsingular(e) == oracle::unit(inv.delta.value(), n));
        CHECK(is_nonsingular(e) == is_nonsingular(embed(e)));
        CHECK(inv.j.has_value() == is_nonsingular(e));
        if (inv.j) {
          CHECK(inv.j == invariants_general(embed(e)).j);
          // j (4a^3 + 27b^2) = 1728 * 4a^3
          i128 s = 4 * static_cast<i128>(a) * a * a + 27 * static_cast<i128>(b) * b;
          CHECK(oracle::mod(static_cast<i128>(inv.j->value()) * s, n) ==
                oracle::mod(1728 * 4 * static_cast<i128>(a) * a * a, n));
        }
      }
  }
  auto e11 = invariants_reduced(ReducedCurve(5, 1, 1));
  CHECK(e11.delta.value() == 4);
  CHECK(e11.j->value() == 2);
  CHECK(invariants_reduced(ReducedCurve(5, 1, 0)).j->value() == 3);
  CHECK(invariants_reduced(ReducedCurve(7, 1, 0)).j->value() == 1728 % 7);
  CHECK(invariants_reduced(ReducedCurve(7, 0, 1)).j->value() == 0);
}

TEST_CASE("reduced form needs 2 and 3 invertible") {
  CHECK_THROWS_AS(ReducedCurve(6, 1, 1), unsupported_characteristic);
  CHECK_THROWS_AS(ReducedCurve(9, 1, 1), unsupported_characteristic);
  CHECK_THROWS_AS(ReducedCurve(Residue(1, 5), Residue(1, 7)), domain_error);
  CHECK_THROWS_AS(GeneralCurve(Residue(1, 5), Residue(1, 5), Residue(1, 5), Residue(1, 5), Residue(1, 7)),
                  domain_error);
  CHECK_THROWS_AS(reduce_curve(GeneralCurve(10, {1, 2, 3, 4, 5})), unsupported_characteristic);
}

TEST_CASE("reduce_curve agrees with applying the reduction change") {
  auto check = [](const GeneralCurve& e) {
    auto r = reduce_curve(e);
    auto moved = apply_general(reduction_change(e), e);
    const auto& c = moved.coefficients();
    CHECK(c[0] == 0);
    CHECK(c[1] == 0);
    CHECK(c[2] == 0);
    CHECK(c[3] == r.a_value());
    CHECK(c[4] == r.b_value());
    CHECK(is_nonsingular(r) == is_nonsingular(e));
    if (is_nonsingular(e)) CHECK(invariants_reduced(r).j == invariants_general(e).j);
  };
  for (u64 i = 0; i < 3125; ++i) check(GeneralCurve::from_normalized(5, tuple(i, 5)));
  for (u64 n : {7ULL, 25ULL, 35ULL, 77ULL, 121ULL})
    for (int trial = 0; trial < 500; ++trial) check(random_curve(n));
  for (u64 a = 0; a < 7; ++a)
    for (u64 b = 0; b < 7; ++b) {
      ReducedCurve e(7, static_cast<i64>(a), static_cast<i64>(b));
      CHECK(reduce_curve(embed(e)) == e);
    }
}

TEST_CASE("nonsingularity splits over CRT components") {
  for (u64 n = 5; n <= 35; ++n) {
    if (n % 2 == 0 || n % 3 == 0) continue;
    const auto factors = factorize(n);
    for (u64 a = 0; a < n; ++a)
      for (u64 b = 0; b < n; ++b) {
        bool all = true;
        for (const auto& f : factors) {
          u64 q = f.value();
          all = all && is_nonsingular(ReducedCurve(q, static_cast<i64>(a % q), static_cast<i64>(b % q)));
        }
        CHECK(is_nonsingular(ReducedCurve(n, static_cast<i64>(a), static_cast<i64>(b))) == all);
      }
  }
  for (u64 n : {6ULL, 10ULL, 12ULL}) {
    const u64 total = n * n * n * n * n;
    for (u64 i = 0; i < total; ++i) {
      auto a = tuple(i, n);
      bool all = true;
      for (const auto& f : factorize(n)) {
        u64 q = f.value();
        all = all && is_nonsingular(GeneralCurve::from_normalized(q, {a[0] % q, a[1] % q, a[2] % q, a[3] % q, a[4] % q}));
      }
      CHECK(is_nonsingular(GeneralCurve::from_normalized(n, a)) == all);
    }
  }
}

TEST_CASE("curve literals round trip") {
  GeneralCurve g(7, {1, -1, 3, 10, 0});
  CHECK(to_literal(g) == "1,6,3,3,0");
  CHECK(parse_general_literal("1,6,3,3,0", 7) == g);
  CHECK(parse_general_literal(" 1, -1 ,3,10,0", 7) == g);
  ReducedCurve r(5, 2, 1);
  CHECK(to_literal(r) == "2,1");
  CHECK(parse_reduced_literal("2,1", 5) == r);
  CHECK(parse_reduced_literal("-3,6", 5) == r);
  CHECK_THROWS_AS(parse_reduced_literal("2", 5), domain_error);
  CHECK_THROWS_AS(parse_reduced_literal("2,1,0", 5), domain_error);
  CHECK_THROWS_AS(parse_reduced_literal("2,x", 5), domain_error);
  CHECK_THROWS_AS(parse_general_literal("1,2,3,4,", 5), domain_error);
  CHECK(to_equation(ReducedCurve(5, 0, 1)) == "y^2 = x^3 + 1");
  CHECK(to_equation(ReducedCurve(5, 1, 1)) == "y^2 = x^3 + x + 1");
  CHECK(to_equation(ReducedCurve(5, 2, 0)) == "y^2 = x^3 + 2x");
}

TEST_CASE("curves order lexicographically") {
  CHECK(ReducedCurve(5, 0, 4) < ReducedCurve(5, 1, 0));
  CHECK(GeneralCurve(5, {0, 0, 0, 0, 4}) < GeneralCurve(5, {0, 0, 0, 1, 0}));
  CHECK(GeneralCurve(5, {0, 0, 1, 0, 0}) > GeneralCurve(5, {0, 0, 0, 4, 4}));
}
