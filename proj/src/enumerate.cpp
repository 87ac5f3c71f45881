#include "zcc/enumerate.hpp"

#include <vector>

#include "zcc/curve.hpp"
#include "zcc/parallel.hpp"
#include "zcc/weierstrass.hpp"

namespace zcc {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<char> unit_table(u64 n) {
  std::vector<char> table(n);
  for (u64 x = 0; x < n; ++x) table[x] = std::gcd(x, n) == 1;
  return table;
}

void check_budget(const char* what, u64 n, unsigned power, u64 budget) {
  u64 tuples = 0;
  try {
    tuples = ipow(n, power);
  } catch (const domain_error&) {
    throw resource_error(what, UINT64_MAX, budget);
  }
  if (tuples > budget) throw resource_error(what, tuples, budget);
}

void check_reduced_prime(u64 p) {
  if (p == 2 || p == 3) throw unsupported_characteristic(p);
  if (!is_prime(p)) throw domain_error(std::to_string(p) + " is not prime");
}

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

}  // namespace

std::string_view to_string(CurveForm form) {
  return form == CurveForm::reduced ? "reduced" : "general";
}

CensusResult count_nonsingular_reduced(u64 n, const CensusOptions& options) {
  if (n < 2) throw domain_error("census: n must be >= 2");
  if (n % 2 == 0 || n % 3 == 0) throw unsupported_characteristic(n);
  check_budget("reduced census", n, 2, options.budget);
  auto start = Clock::now();
  const ModArith k{n};
  const auto units = unit_table(n);
  u64 count = parallel_sum(n, options.workers, [&](u64 begin, u64 end) {
    u64 local = 0;
    for (u64 a = begin; a < end; ++a)
      for (u64 b = 0; b < n; ++b)
        if (units[reduced_discriminant(k, a, b)]) ++local;
    return local;
  });
  return {n, CurveForm::reduced, n * n, count, euler_phi_power(n, 2), since(start)};
}

CensusResult count_nonsingular_general(u64 n, const CensusOptions& options) {
  if (n < 2) throw domain_error("census: n must be >= 2");
  check_budget("general census", n, 5, options.budget);
  auto start = Clock::now();
  const ModArith k{n};
  const DiscriminantEvaluator<ModArith> delta(k);
  const auto units = unit_table(n);
  // Delta is quadratic in a6 with leading coefficient -432, so along a6 it
  // is stepped by finite differences: second difference -864.
  const u64 second = k.constant(-864);
  u64 count = parallel_sum(n, options.workers, [&](u64 begin, u64 end) {
    u64 local = 0;
    for (u64 a1 = begin; a1 < end; ++a1)
      for (u64 a2 = 0; a2 < n; ++a2)
        for (u64 a3 = 0; a3 < n; ++a3)
          for (u64 a4 = 0; a4 < n; ++a4) {
            u64 value = delta(a1, a2, a3, a4, 0);
            u64 step = k.sub(delta(a1, a2, a3, a4, 1 % n), value);
            for (u64 a6 = 0; a6 < n; ++a6) {
              local += units[value];
              value = k.add(value, step);
              step = k.add(step, second);
            }
          }
    return local;
  });
  return {n, CurveForm::general, ipow(n, 5), count, euler_phi_power(n, 5), since(start)};
}

u64 delta_zero_count(u64 p, unsigned m, DeltaZeroMode mode, unsigned workers) {
  check_reduced_prime(p);
  if (m < 1) throw domain_error("delta_zero_count: m must be >= 1");
  if (mode == DeltaZeroMode::closed_form) {
    u64 sum = 0;
    for (unsigned i = 0; i <= (m - 1) / 6; ++i) sum += euler_phi(ipow(p, m - 3 * i));
    return sum + ipow(p, m / 2 + (2 * m) / 3);
  }
  const u64 q = ipow(p, m);
  if (q >= kMaxModulus) throw domain_error("delta_zero_count: p^m too large");
  const ModArith k{q};
  return parallel_sum(q, workers, [&](u64 begin, u64 end) {
    u64 local = 0;
    for (u64 a = begin; a < end; ++a)
      for (u64 b = 0; b < q; ++b)
        if (reduced_discriminant(k, a, b) == 0) ++local;
    return local;
  });
}

ReducedBounds reduced_bounds(u64 p, unsigned m, const CensusOptions& options) {
  check_reduced_prime(p);
  if (m < 1) throw domain_error("reduced_bounds: m must be >= 1");
  u64 q = ipow(p, m);
  u64 lower = ipow(p, 2 * m - 1);
  u64 actual = count_nonsingular_reduced(q, options).nonsingular_count;
  u64 upper = q * q - delta_zero_count(p, m, DeltaZeroMode::closed_form);
  return {p, m, lower, actual, upper};
}

}  // namespace zcc
