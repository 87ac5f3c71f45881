#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "zcc/modring.hpp"

namespace zcc {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Z/n.
class GeneralCurve {
 public:
  using Coefficients = std::array<u64, 5>;

  GeneralCurve(const Residue& a1, const Residue& a2, const Residue& a3, const Residue& a4,
               const Residue& a6);
  /// Values are reduced mod n.
  GeneralCurve(u64 modulus, const std::array<i64, 5>& coefficients);

  static GeneralCurve from_normalized(u64 modulus, Coefficients coefficients) {
    return GeneralCurve(modulus, coefficients, Trusted{});
  }

  u64 modulus() const noexcept { return modulus_; }
  const Coefficients& coefficients() const noexcept { return a_; }

  Residue a1() const { return coefficient(0); }
  Residue a2() const { return coefficient(1); }
  Residue a3() const { return coefficient(2); }
  Residue a4() const { return coefficient(3); }
  Residue a6() const { return coefficient(4); }

  /// Lexicographic on (a1, a2, a3, a4, a6) within one ring.
  friend bool operator==(const GeneralCurve&, const GeneralCurve&) = default;
  friend std::strong_ordering operator<=>(const GeneralCurve&, const GeneralCurve&) = default;

 private:
  struct Trusted {};
  GeneralCurve(u64 modulus, Coefficients a, Trusted) : modulus_(modulus), a_(a) {}
  Residue coefficient(std::size_t i) const { return Residue(static_cast<i64>(a_[i]), modulus_); }

  u64 modulus_;
  Coefficients a_;
};

/// y^2 = x^3 + a x + b over Z/n with gcd(n, 6) = 1.
class ReducedCurve {
 public:
  /// Throws unsupported_characteristic unless gcd(n, 6) = 1.
  ReducedCurve(const Residue& a, const Residue& b);
  ReducedCurve(u64 modulus, i64 a, i64 b);

  u64 modulus() const noexcept { return modulus_; }
  Residue a() const { return Residue(static_cast<i64>(a_), modulus_); }
  Residue b() const { return Residue(static_cast<i64>(b_), modulus_); }
  u64 a_value() const noexcept { return a_; }
  u64 b_value() const noexcept { return b_; }

  friend bool operator==(const ReducedCurve&, const ReducedCurve&) = default;
  friend std::strong_ordering operator<=>(const ReducedCurve&, const ReducedCurve&) = default;

 private:
  u64 modulus_;
  u64 a_;
  u64 b_;
};

/// (0, 0, 0, a, b).
GeneralCurve embed(const ReducedCurve& e);

struct CurveInvariants {
  Residue b2, b4, b6, b8, c4, c6, delta;
  /// c4^3 / delta, present iff delta is a unit.
  std::optional<Residue> j;
};

CurveInvariants invariants_general(const GeneralCurve& e);
CurveInvariants invariants_reduced(const ReducedCurve& e);

/// gcd(delta, n) = 1. A nonzero non-unit discriminant counts as singular.
bool is_nonsingular(const GeneralCurve& e);
bool is_nonsingular(const ReducedCurve& e);

/// Discriminant of the reduced form, -16(4a^3 + 27b^2), on raw values.
inline u64 reduced_discriminant(const ModArith& k, u64 a, u64 b) {
  u64 inner = k.add(k.mul(k.constant(4), k.mul(a, k.mul(a, a))),
                    k.mul(k.constant(27), k.mul(b, b)));
  return k.mul(k.constant(-16), inner);
}

/// (a, b) = (-c4 / 48, -c6 / 864). Throws unsupported_characteristic when
/// gcd(n, 6) != 1. Reduced inputs come back unchanged.
ReducedCurve reduce_curve(const GeneralCurve& e);

/// Curve literal: "a1,a2,a3,a4,a6" for general curves and "a,b" for reduced
/// ones. Negative integers are allowed and reduced mod n.
std::string to_literal(const GeneralCurve& e);
std::string to_literal(const ReducedCurve& e);
GeneralCurve parse_general_literal(std::string_view text, u64 modulus);
ReducedCurve parse_reduced_literal(std::string_view text, u64 modulus);

/// "y^2 = x^3 + x + 1" style rendering, used in human-readable output.
std::string to_equation(const ReducedCurve& e);

}  // namespace zcc
