#include "zcc/classify.hpp"

#include <atomic>

#include "zcc/parallel.hpp"
#include "zcc/points.hpp"
#include "zcc/transform.hpp"
#include "zcc/weierstrass.hpp"

namespace zcc {

namespace {

void check_tuple_budget(const char* what, u64 n, unsigned power, u64 budget) {
  u64 tuples = 0;
  try {
    tuples = ipow(n, power);
  } catch (const domain_error&) {
    throw resource_error(what, UINT64_MAX, budget);
  }
  if (tuples > budget) throw resource_error(what, tuples, budget);
}

u64 checked_aut(u64 group_order, u64 orbit_size) {
  if (orbit_size == 0 || group_order % orbit_size != 0)
    throw std::logic_error("orbit size " + std::to_string(orbit_size) +
                           " does not divide group order " + std::to_string(group_order));
  return group_order / orbit_size;
}

// Index of (a1, a2, a3, a4, a6) in odometer order.
u64 tuple_index(const GeneralCurve::Coefficients& a, u64 n) {
  return (((a[0] * n + a[1]) * n + a[2]) * n + a[3]) * n + a[4];
}

GeneralCurve::Coefficients tuple_at(u64 index, u64 n) {
  GeneralCurve::Coefficients a{};
  for (std::size_t i = 5; i-- > 0;) {
    a[i] = index % n;
    index /= n;
  }
  return a;
}

/// Visited set over n^5 tuples. Concurrent marking within one orbit is safe:
/// fetch_or reports whether this worker set the bit first.
class AtomicBitset {
 public:
  explicit AtomicBitset(u64 bits) : words_((bits + 63) / 64) {}

  bool test(u64 i) const {
    return (std::atomic_ref<u64>(words_[i / 64]).load(std::memory_order_relaxed) >> (i % 64)) & 1;
  }

  /// True if the bit was clear before.
  bool set(u64 i) {
    u64 mask = u64{1} << (i % 64);
    return (std::atomic_ref<u64>(words_[i / 64]).fetch_or(mask, std::memory_order_relaxed) &
            mask) == 0;
  }

 private:
  // atomic_ref needs a non-const referent, even for loads.
  mutable std::vector<u64> words_;
};

}  // namespace

std::string to_literal(const Curve& e) {
  return std::visit([](const auto& c) { return to_literal(c); }, e);
}

u64 Classification::curve_count() const {
  u64 total = 0;
  for (const auto& c : classes) total += c.class_size;
  return total;
}

Classification classify_reduced(u64 n, const ClassifyOptions& options) {
  if (n < 2) throw domain_error("classify: n must be >= 2");
  if (n % 2 == 0 || n % 3 == 0) throw unsupported_characteristic(n);
  check_tuple_budget("reduced classification", n, 2, options.budget);

  const ResidueRing ring(n);
  const ModArith k = ring.arith();
  const auto units = ring.units();
  std::vector<u64> uinv4, uinv6;
  for (u64 u : units) {
    u64 inv = k.inverse(u);
    u64 inv2 = k.mul(inv, inv);
    uinv4.push_back(k.mul(inv2, inv2));
    uinv6.push_back(k.mul(uinv4.back(), inv2));
  }

  Classification out{n, CurveForm::reduced, ring.totient(), {}, predict_class_count_composite(n)};
  std::vector<char> visited(n * n, 0);
  for (u64 a = 0; a < n; ++a) {
    for (u64 b = 0; b < n; ++b) {
      if (visited[a * n + b] || !k.is_unit(reduced_discriminant(k, a, b))) continue;
      u64 orbit = 0, stabilizer = 0;
      for (std::size_t i = 0; i < units.size(); ++i) {
        u64 ia = k.mul(uinv4[i], a), ib = k.mul(uinv6[i], b);
        if (!visited[ia * n + ib]) {
          visited[ia * n + ib] = 1;
          ++orbit;
        }
        if (ia == a && ib == b) ++stabilizer;
      }
      ReducedCurve leader(n, static_cast<i64>(a), static_cast<i64>(b));
      IsomorphismClass cls{leader, orbit, checked_aut(out.group_order, orbit),
                           affine_point_count(leader).count, std::nullopt};
      if (options.verify_stabilizer) cls.stabilizer_scan = stabilizer;
      out.classes.push_back(std::move(cls));
    }
  }
  return out;
}

Classification classify_general(u64 n, const ClassifyOptions& options) {
  if (n < 2) throw domain_error("classify: n must be >= 2");
  check_tuple_budget("general classification", n, 5, options.budget);

  const ResidueRing ring(n);
  const ModArith k = ring.arith();
  const auto units = ring.units();
  const u64 total = ipow(n, 5);
  const DiscriminantEvaluator<ModArith> delta(k);

  std::optional<u64> predicted;
  if (ring.coprime_to_six())
    predicted = ring.is_field() ? predict_class_count_field(n, CurveForm::general)
                                : predict_class_count_composite(n);

  Classification out{n, CurveForm::general, euler_phi_power(n, 4), {}, predicted};
  AtomicBitset visited(total);
  for (u64 index = 0; index < total; ++index) {
    if (visited.test(index)) continue;
    const auto a = tuple_at(index, n);
    if (!k.is_unit(delta(a[0], a[1], a[2], a[3], a[4]))) continue;

    std::atomic<u64> stabilizer{0};
    u64 orbit = parallel_sum(units.size(), options.workers, [&](u64 begin, u64 end) {
      u64 fresh = 0, fixed = 0;
      for (u64 i = begin; i < end; ++i) {
        const ChangeKernel kernel(k, units[i]);
        for (u64 r = 0; r < n; ++r)
          for (u64 s = 0; s < n; ++s)
            for (u64 t = 0; t < n; ++t) {
              const auto image = kernel.apply(a, r, s, t);
              u64 j = tuple_index(image, n);
              if (visited.set(j)) ++fresh;
              if (j == index) ++fixed;
            }
      }
      stabilizer += fixed;
      return fresh;
    });

    auto leader = GeneralCurve::from_normalized(n, a);
    IsomorphismClass cls{leader, orbit, checked_aut(out.group_order, orbit),
                         affine_point_count(leader).count, std::nullopt};
    if (options.verify_stabilizer) cls.stabilizer_scan = stabilizer.load();
    out.classes.push_back(std::move(cls));
  }
  return out;
}

u64 aut_order(const ReducedCurve& e) {
  if (!is_nonsingular(e)) throw domain_error("aut_order: curve is singular");
  const ResidueRing ring(e.modulus());
  u64 count = 0;
  for (u64 u : ring.units())
    if (apply_reduced(ring.element(static_cast<i64>(u)), e) == e) ++count;
  return count;
}

u64 aut_order(const GeneralCurve& e) {
  if (!is_nonsingular(e)) throw domain_error("aut_order: curve is singular");
  const u64 n = e.modulus();
  const ResidueRing ring(n);
  u64 count = 0;
  for (u64 u : ring.units()) {
    const ChangeKernel kernel(ring.arith(), u);
    for (u64 r = 0; r < n; ++r)
      for (u64 s = 0; s < n; ++s)
        for (u64 t = 0; t < n; ++t)
          if (kernel.apply(e.coefficients(), r, s, t) == e.coefficients()) ++count;
  }
  return count;
}

u64 predict_class_count_field(u64 q, CurveForm form) {
  if (q <= 3 || !is_prime(q))
    throw domain_error("predict_class_count_field: q must be a prime > 3, got " + std::to_string(q));
  if (form == CurveForm::reduced) {
    switch (q % 12) {
      case 1: return 2 * q + 6;
      case 5: return 2 * q + 2;
      case 7: return 2 * q + 4;
      default: return 2 * q;
    }
  }
  i64 value = 2 * static_cast<i64>(q) + 3 + jacobi_symbol(-4, q) + 2 * jacobi_symbol(-3, q);
  return static_cast<u64>(value);
}

u64 predict_class_count_prime_power(u64 p, unsigned m) {
  if (p == 2 || p == 3 || !is_prime(p))
    throw domain_error("predict_class_count_prime_power: p must be a prime > 3, got " +
                       std::to_string(p));
  if (m < 1) throw domain_error("predict_class_count_prime_power: m must be >= 1");
  u64 q = ipow(p, m);
  switch (p % 12) {
    case 1: return 2 * q + 6;
    case 5: return 2 * q + 2;
    case 7: return 2 * q + 4;
    default: return 2 * q;
  }
}

u64 predict_class_count_composite(u64 n) {
  if (n < 2) throw domain_error("predict_class_count_composite: n must be >= 2");
  if (n % 2 == 0 || n % 3 == 0) throw unsupported_characteristic(n);
  u64 product = 1;
  for (const auto& [p, e] : factorize(n)) product *= predict_class_count_prime_power(p, e);
  return product;
}

}  // namespace zcc
