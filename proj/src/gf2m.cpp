#include "zcc/gf2m.hpp"

#include <array>
#include <bit>
#include <string>

#include "zcc/errors.hpp"
#include "zcc/parallel.hpp"
#include "zcc/weierstrass.hpp"

namespace zcc {

namespace {

constexpr std::array<std::uint32_t, 6> kStandardReduction = {
    0, 0b10, 0b111, 0b1011, 0b10011, 0b100101};

unsigned poly_degree(std::uint32_t poly) {
  return static_cast<unsigned>(std::bit_width(poly)) - 1;
}

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
  unsigned db = poly_degree(b);
  while (a != 0 && poly_degree(a) >= db) a ^= b << (poly_degree(a) - db);
  return a;
}

}  // namespace

std::uint32_t gf2_poly_mulmod(std::uint32_t x, std::uint32_t y, std::uint32_t reduction,
                              unsigned m) {
  std::uint32_t acc = 0;
  for (unsigned i = 0; i < m; ++i)
    if (y & (1u << i)) acc ^= x << i;
  return poly_mod(acc, reduction);
}

bool gf2_poly_is_irreducible(std::uint32_t poly) {
  if (poly < 2) return false;
  unsigned deg = poly_degree(poly);
  for (std::uint32_t d = 2; d < (1u << (deg / 2 + 1)); ++d)
    if (poly_mod(poly, d) == 0) return false;
  return true;
}

BinaryFieldElement::BinaryFieldElement(std::uint32_t bits, const BinaryField& field)
    : bits_(bits), field_(&field) {
  if (bits >= field.order())
    throw domain_error("GF(2^" + std::to_string(field.degree()) + ") element out of range: " +
                       std::to_string(bits));
}

bool operator==(const BinaryFieldElement& x, const BinaryFieldElement& y) {
  return x.bits_ == y.bits_ && *x.field_ == *y.field_;
}

BinaryField::BinaryField(unsigned m, std::uint32_t reduction) : m_(m), reduction_(reduction) {
  if (m < 1 || m > 5) throw domain_error("GF(2^m) supports 1 <= m <= 5, got m = " + std::to_string(m));
  if (poly_degree(reduction) != m || !gf2_poly_is_irreducible(reduction))
    throw domain_error("reduction polynomial is not an irreducible of degree " + std::to_string(m));
  std::uint32_t q = order();
  table_.resize(std::size_t{q} * q);
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y)
      table_[(x << m_) | y] = static_cast<std::uint8_t>(gf2_poly_mulmod(x, y, reduction_, m_));
}

const BinaryField& BinaryField::standard(unsigned m) {
  if (m < 1 || m > 5) throw domain_error("GF(2^m) supports 1 <= m <= 5, got m = " + std::to_string(m));
  static const std::array<BinaryField, 5> fields = {
      BinaryField(1, kStandardReduction[1]), BinaryField(2, kStandardReduction[2]),
      BinaryField(3, kStandardReduction[3]), BinaryField(4, kStandardReduction[4]),
      BinaryField(5, kStandardReduction[5])};
  return fields[m - 1];
}

BinaryFieldElement BinaryField::element(std::uint32_t bits) const {
  return BinaryFieldElement(bits, *this);
}

namespace {

void check_same_field(const BinaryFieldElement& x, const BinaryFieldElement& y) {
  if (!(x.field() == y.field())) throw domain_error("binary field mismatch");
}

}  // namespace

BinaryFieldElement field_add(const BinaryFieldElement& x, const BinaryFieldElement& y) {
  check_same_field(x, y);
  return BinaryFieldElement(x.bits() ^ y.bits(), x.field());
}

BinaryFieldElement field_mul(const BinaryFieldElement& x, const BinaryFieldElement& y) {
  check_same_field(x, y);
  return BinaryFieldElement(x.field().mul_bits(x.bits(), y.bits()), x.field());
}

std::uint32_t gf2m_discriminant_char2(const BinaryField& field, std::uint32_t a1,
                                      std::uint32_t a2, std::uint32_t a3,
                                      std::uint32_t a4, std::uint32_t a6) {
  auto mul = [&](std::uint32_t x, std::uint32_t y) { return field.mul_bits(x, y); };
  std::uint32_t b2 = mul(a1, a1);
  std::uint32_t b4 = mul(a1, a3);
  std::uint32_t b6 = mul(a3, a3);
  std::uint32_t b8 = mul(b2, a6) ^ mul(b4, a4) ^ mul(a2, b6) ^ mul(a4, a4);
  return mul(mul(b2, b2), b8) ^ mul(b6, b6) ^ mul(b2, mul(b4, b6));
}

std::uint64_t count_nonsingular_general_gf2m(unsigned m, unsigned workers) {
  const BinaryField& field = BinaryField::standard(m);
  const std::uint32_t q = field.order();
  const DiscriminantEvaluator<Gf2mArith> delta(Gf2mArith{&field});
  return parallel_sum(q, workers, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t count = 0;
    for (auto a1 = static_cast<std::uint32_t>(begin); a1 < end; ++a1)
      for (std::uint32_t a2 = 0; a2 < q; ++a2)
        for (std::uint32_t a3 = 0; a3 < q; ++a3)
          for (std::uint32_t a4 = 0; a4 < q; ++a4)
            for (std::uint32_t a6 = 0; a6 < q; ++a6)
              if (delta(a1, a2, a3, a4, a6) != 0) ++count;
    return count;
  });
}

}  // namespace zcc
