#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zcc/points.hpp"
#include "zcc/transform.hpp"

using namespace zcc;

namespace {

GeneralCurve random_curve(u64 n) {
  return GeneralCurve::from_normalized(
      n, {oracle::uniform(n), oracle::uniform(n), oracle::uniform(n), oracle::uniform(n), oracle::uniform(n)});
}

}  // namespace

TEST_CASE("small reduced curves over Z/5") {
  CHECK(affine_point_count(ReducedCurve(5, 0, 1)).count == 5);
  CHECK(affine_point_count(ReducedCurve(5, 1, 0)).count == 3);
  CHECK(affine_point_count(ReducedCurve(5, 3, 0)).count == 9);
  CHECK(affine_point_count(ReducedCurve(5, 4, 2)).count == 2);
  CHECK_FALSE(affine_point_count(ReducedCurve(5, 0, 1)).singular);
  auto cusp = affine_point_count(ReducedCurve(5, 0, 0));
  CHECK(cusp.singular);
  CHECK(cusp.count == 5);
}

TEST_CASE("point counts match a direct scan") {
  for (u64 n : {2ULL, 3ULL, 4ULL, 5ULL, 9ULL, 12ULL, 25ULL, 35ULL}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto e = random_curve(n);
      auto got = affine_point_count(e);
      CHECK(got.count == oracle::points(e.coefficients(), n));
      CHECK(got.singular == !oracle::unit(oracle::delta_mod(e.coefficients(), n), n));
    }
  }
  for (u64 a = 0; a < 7; ++a)
    for (u64 b = 0; b < 7; ++b) {
      ReducedCurve e(7, static_cast<i64>(a), static_cast<i64>(b));
      CHECK(affine_point_count(e).count == oracle::points({0, 0, 0, a, b}, 7));
    }
}

TEST_CASE("nonsingular curves over prime fields respect the Hasse bound") {
  for (u64 p = 5; p <= 23; ++p) {
    if (!oracle::prime(p)) continue;
    for (u64 a = 0; a < p; ++a)
      for (u64 b = 0; b < p; ++b) {
        ReducedCurve e(p, static_cast<i64>(a), static_cast<i64>(b));
        if (!is_nonsingular(e)) continue;
        // #E = affine + 1, and |#E - (p + 1)| <= 2 sqrt(p).
        double trace = static_cast<double>(p) - static_cast<double>(affine_point_count(e).count);
        CHECK(trace * trace <= 4.0 * static_cast<double>(p));
      }
  }
}

TEST_CASE("point counts multiply over coprime moduli") {
  for (u64 m = 2; m <= 7; ++m)
    for (u64 k = 2; k * m <= 35; ++k) {
      if (std::gcd(m, k) != 1) continue;
      const u64 n = m * k;
      for (int trial = 0; trial < 20; ++trial) {
        auto e = random_curve(n);
        const auto& a = e.coefficients();
        auto part = [&](u64 q) {
          return affine_point_count(GeneralCurve::from_normalized(q, {a[0] % q, a[1] % q, a[2] % q, a[3] % q, a[4] % q}))
              .count;
        };
        CHECK(affine_point_count(e).count == part(m) * part(k));
      }
    }
}

TEST_CASE("isomorphic curves have the same number of points") {
  for (u64 n : {5ULL, 8ULL, 25ULL, 35ULL}) {
    auto units = oracle::units_of(n);
    for (int trial = 0; trial < 200; ++trial) {
      auto e = random_curve(n);
      AdmissibleChange tau(n, static_cast<i64>(units[oracle::uniform(units.size())]),
                           static_cast<i64>(oracle::uniform(n)), static_cast<i64>(oracle::uniform(n)),
                           static_cast<i64>(oracle::uniform(n)));
      CHECK(affine_point_count(apply_general(tau, e)).count == affine_point_count(e).count);
    }
  }
}

TEST_CASE("worker count does not change the result") {
  for (int trial = 0; trial < 50; ++trial) {
    auto e = random_curve(97);
    auto one = affine_point_count(e, 1).count;
    CHECK(affine_point_count(e, 2).count == one);
    CHECK(affine_point_count(e, 8).count == one);
    CHECK(affine_point_count(e, 200).count == one);
  }
}
