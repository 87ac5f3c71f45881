#pragma once

/**
 * @file gf2m.hpp
 * @brief Binary fields GF(2^m), 1 <= m <= 5, in a polynomial basis.
 *
 * Elements are packed bit-vectors of polynomial coefficients (bit i holds
 * the coefficient of x^i). Multiplication goes through a full q x q table
 * built once per field; at q <= 32 the table is 1 KiB.
 */

#include <cstdint>
#include <vector>

namespace zcc {

class BinaryField;

class BinaryFieldElement {
 public:
  BinaryFieldElement(std::uint32_t bits, const BinaryField& field);

  std::uint32_t bits() const noexcept { return bits_; }
  const BinaryField& field() const noexcept { return *field_; }

  friend bool operator==(const BinaryFieldElement& x, const BinaryFieldElement& y);

 private:
  std::uint32_t bits_;
  const BinaryField* field_;
};

class BinaryField {
 public:
  /// `reduction` carries bit m set; it is checked for irreducibility.
  BinaryField(unsigned m, std::uint32_t reduction);

  /// The lexicographically smallest irreducible of degree m: x, x^2+x+1,
  /// x^3+x+1, x^4+x+1, x^5+x^2+1. Throws domain_error outside 1..5.
  static const BinaryField& standard(unsigned m);

  unsigned degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return 1u << m_; }
  std::uint32_t reduction_polynomial() const noexcept { return reduction_; }

  BinaryFieldElement element(std::uint32_t bits) const;
  BinaryFieldElement zero() const { return element(0); }
  BinaryFieldElement one() const { return element(1); }

  /// Table lookup on packed values; both arguments must be < order().
  std::uint32_t mul_bits(std::uint32_t x, std::uint32_t y) const noexcept {
    return table_[(x << m_) | y];
  }

  friend bool operator==(const BinaryField& a, const BinaryField& b) {
    return a.m_ == b.m_ && a.reduction_ == b.reduction_;
  }

 private:
  unsigned m_;
  std::uint32_t reduction_;
  std::vector<std::uint8_t> table_;
};

/// Carry-less multiply followed by reduction; the slow path the table is built from.
std::uint32_t gf2_poly_mulmod(std::uint32_t x, std::uint32_t y, std::uint32_t reduction,
                              unsigned m);

/// True iff the polynomial (bit i = coefficient of x^i) of degree >= 1 has no
/// factor of degree in [1, deg/2].
bool gf2_poly_is_irreducible(std::uint32_t poly);

BinaryFieldElement field_add(const BinaryFieldElement& x, const BinaryFieldElement& y);
BinaryFieldElement field_mul(const BinaryFieldElement& x, const BinaryFieldElement& y);

/// Arithmetic policy for the Weierstrass templates. Integer literals map to
/// c * 1, which in characteristic 2 is c mod 2; subtraction is addition.
struct Gf2mArith {
  using value_type = std::uint32_t;

  const BinaryField* field;

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const { return x ^ y; }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return x ^ y; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return field->mul_bits(x, y); }
  std::uint32_t constant(std::int64_t c) const { return static_cast<std::uint32_t>(c & 1); }
};

/// Discriminant over GF(2^m) from the characteristic-2 specialization
/// b2 = a1^2, b4 = a1 a3, b6 = a3^2, b8 = a1^2 a6 + a1 a3 a4 + a2 a3^2 + a4^2,
/// delta = b2^2 b8 + b6^2 + b2 b4 b6. Cross-check for the generic polynomial.
std::uint32_t gf2m_discriminant_char2(const BinaryField& field, std::uint32_t a1,
                                      std::uint32_t a2, std::uint32_t a3,
                                      std::uint32_t a4, std::uint32_t a6);

/// Number of (a1,a2,a3,a4,a6) in GF(2^m)^5 with nonzero discriminant.
/// The a1 coordinate is partitioned across `workers`.
std::uint64_t count_nonsingular_general_gf2m(unsigned m, unsigned workers = 1);

}  // namespace zcc
