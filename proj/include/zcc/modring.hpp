#pragma once

/**
 * @file modring.hpp
 * @brief Exact arithmetic in the residue rings Z/nZ.
 *
 * Moduli are limited to n < 2^32 so that a product of two reduced values
 * fits in 64 bits. Everything here is a pure function of its arguments.
 */

#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "zcc/errors.hpp"

namespace zcc {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline constexpr u64 kMaxModulus = u64{1} << 32;

struct PrimePower {
  u64 prime;
  unsigned exponent;

  u64 value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial division. Ascending primes; throws domain_error for n < 2.
std::vector<PrimePower> factorize(u64 n);

bool is_prime(u64 n);

/// Euler's totient, phi(1) = 1.
u64 euler_phi(u64 n);

/// phi(n^k) computed from the factorization of n, without forming n^k.
u64 euler_phi_power(u64 n, unsigned k);

/// base^exp over the integers; throws domain_error on 64-bit overflow.
u64 ipow(u64 base, unsigned exp);

/// Jacobi symbol (a / n) for odd n >= 1.
int jacobi_symbol(i64 a, u64 n);

/// Raw modular arithmetic on values already reduced into [0, n).
/// The element type is a bare u64 so hot census loops stay allocation-free.
struct ModArith {
  using value_type = u64;

  u64 n;

  constexpr u64 add(u64 x, u64 y) const {
    u64 s = x + y;
    return s >= n ? s - n : s;
  }
  constexpr u64 sub(u64 x, u64 y) const { return x >= y ? x - y : x + n - y; }
  constexpr u64 neg(u64 x) const { return x == 0 ? 0 : n - x; }
  constexpr u64 mul(u64 x, u64 y) const { return (x * y) % n; }
  constexpr u64 constant(i64 c) const {
    i64 r = c % static_cast<i64>(n);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(n) : r);
  }
  u64 pow(u64 x, u64 e) const;
  bool is_unit(u64 x) const { return std::gcd(x, n) == 1; }
  /// Extended Euclid; throws not_a_unit carrying the gcd.
  u64 inverse(u64 x) const;
};

class Residue;

/// Z/nZ together with the factorization of n.
class ResidueRing {
 public:
  explicit ResidueRing(u64 modulus);

  u64 modulus() const noexcept { return modulus_; }
  std::span<const PrimePower> factorization() const noexcept {
    return factorization_;
  }
  u64 totient() const noexcept { return totient_; }
  /// 2 and 3 are units.
  bool coprime_to_six() const noexcept { return modulus_ % 2 != 0 && modulus_ % 3 != 0; }
  bool is_field() const noexcept {
    return factorization_.size() == 1 && factorization_[0].exponent == 1;
  }
  ModArith arith() const noexcept { return ModArith{modulus_}; }

  Residue element(i64 value) const;
  Residue zero() const;
  Residue one() const;
  /// Units in ascending order.
  std::vector<u64> units() const;

 private:
  u64 modulus_;
  std::vector<PrimePower> factorization_;
  u64 totient_;
};

/// An element of Z/nZ, always normalized into [0, n).
class Residue {
 public:
  Residue(i64 value, u64 modulus);

  u64 value() const noexcept { return value_; }
  u64 modulus() const noexcept { return modulus_; }

  Residue operator+(const Residue& rhs) const;
  Residue operator-(const Residue& rhs) const;
  Residue operator*(const Residue& rhs) const;
  Residue operator-() const;
  Residue pow(u64 e) const;

  friend bool operator==(const Residue&, const Residue&) = default;
  friend std::strong_ordering operator<=>(const Residue&, const Residue&) = default;

 private:
  struct Raw {};
  Residue(Raw, u64 value, u64 modulus) : value_(value), modulus_(modulus) {}
  void check_ring(const Residue& rhs) const;

  u64 value_;
  u64 modulus_;
};

bool is_unit(const Residue& a);
Residue inverse(const Residue& a);

/// Components a mod p_i^e_i in ascending prime order.
std::vector<Residue> crt_split(const Residue& a);
/// Inverse of crt_split; moduli must be pairwise coprime.
Residue crt_combine(std::span<const Residue> parts);

std::string to_string(const Residue& a);

}  // namespace zcc
