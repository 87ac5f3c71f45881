#include "zcc/modring.hpp"

#include <limits>

namespace zcc {

u64 PrimePower::value() const { return ipow(prime, exponent); }

std::vector<PrimePower> factorize(u64 n) {
  if (n < 2) throw domain_error("factorize: n must be >= 2, got " + std::to_string(n));
  std::vector<PrimePower> out;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

u64 euler_phi(u64 n) {
  if (n == 0) throw domain_error("euler_phi: n must be >= 1");
  if (n == 1) return 1;
  u64 result = n;
  for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

u64 euler_phi_power(u64 n, unsigned k) {
  if (n == 0 || k == 0) throw domain_error("euler_phi_power: n, k must be >= 1");
  if (n == 1) return 1;
  // phi(n^k) = n^(k-1) * phi(n)
  return ipow(n, k - 1) * euler_phi(n);
}

u64 ipow(u64 base, unsigned exp) {
  u64 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<u64>::max() / base)
      throw domain_error("ipow: overflow computing " + std::to_string(base) + "^" +
                         std::to_string(exp));
    result *= base;
  }
  return result;
}

int jacobi_symbol(i64 a, u64 n) {
  if (n == 0 || n % 2 == 0)
    throw domain_error("jacobi_symbol: modulus must be odd and positive, got " +
                       std::to_string(n));
  i64 r = a % static_cast<i64>(n);
  u64 x = static_cast<u64>(r < 0 ? r + static_cast<i64>(n) : r);
  int sign = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      u64 m8 = n % 8;
      if (m8 == 3 || m8 == 5) sign = -sign;
    }
    std::swap(x, n);
    if (x % 4 == 3 && n % 4 == 3) sign = -sign;
    x %= n;
  }
  return n == 1 ? sign : 0;
}

u64 ModArith::pow(u64 x, u64 e) const {
  u64 result = 1 % n;
  x %= n;
  while (e > 0) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

u64 ModArith::inverse(u64 x) const {
  i64 old_r = static_cast<i64>(x % n), r = static_cast<i64>(n);
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  // old_r = gcd(x, n) = old_s * x (mod n)
  if (old_r != 1) throw not_a_unit(x % n, n, static_cast<u64>(old_r));
  i64 inv = old_s % static_cast<i64>(n);
  if (inv < 0) inv += static_cast<i64>(n);
  return static_cast<u64>(inv);
}

ResidueRing::ResidueRing(u64 modulus) : modulus_(modulus) {
  if (modulus < 2 || modulus >= kMaxModulus)
    throw domain_error("ResidueRing: modulus must be in [2, 2^32), got " +
                       std::to_string(modulus));
  factorization_ = factorize(modulus);
  totient_ = euler_phi(modulus);
}

Residue ResidueRing::element(i64 value) const { return Residue(value, modulus_); }
Residue ResidueRing::zero() const { return element(0); }
Residue ResidueRing::one() const { return element(1); }

std::vector<u64> ResidueRing::units() const {
  std::vector<u64> out;
  out.reserve(totient_);
  for (u64 x = 1; x < modulus_; ++x)
    if (std::gcd(x, modulus_) == 1) out.push_back(x);
  return out;
}

Residue::Residue(i64 value, u64 modulus) : modulus_(modulus) {
  if (modulus < 2 || modulus >= kMaxModulus)
    throw domain_error("Residue: modulus must be in [2, 2^32), got " +
                       std::to_string(modulus));
  value_ = ModArith{modulus}.constant(value);
}

void Residue::check_ring(const Residue& rhs) const {
  if (modulus_ != rhs.modulus_)
    throw domain_error("residue ring mismatch: Z/" + std::to_string(modulus_) +
                       " vs Z/" + std::to_string(rhs.modulus_));
}

Residue Residue::operator+(const Residue& rhs) const {
  check_ring(rhs);
  return Residue(Raw{}, ModArith{modulus_}.add(value_, rhs.value_), modulus_);
}

Residue Residue::operator-(const Residue& rhs) const {
  check_ring(rhs);
  return Residue(Raw{}, ModArith{modulus_}.sub(value_, rhs.value_), modulus_);
}

Residue Residue::operator*(const Residue& rhs) const {
  check_ring(rhs);
  return Residue(Raw{}, ModArith{modulus_}.mul(value_, rhs.value_), modulus_);
}

Residue Residue::operator-() const {
  return Residue(Raw{}, ModArith{modulus_}.neg(value_), modulus_);
}

Residue Residue::pow(u64 e) const {
  return Residue(Raw{}, ModArith{modulus_}.pow(value_, e), modulus_);
}

bool is_unit(const Residue& a) { return std::gcd(a.value(), a.modulus()) == 1; }

Residue inverse(const Residue& a) {
  u64 inv = ModArith{a.modulus()}.inverse(a.value());
  return Residue(static_cast<i64>(inv), a.modulus());
}

std::vector<Residue> crt_split(const Residue& a) {
  std::vector<Residue> out;
  for (const auto& pp : factorize(a.modulus())) {
    u64 q = pp.value();
    out.emplace_back(static_cast<i64>(a.value() % q), q);
  }
  return out;
}

Residue crt_combine(std::span<const Residue> parts) {
  if (parts.empty()) throw domain_error("crt_combine: no components");
  u64 x = 0, m = 1;
  for (const auto& part : parts) {
    u64 q = part.modulus();
    if (std::gcd(m, q) != 1) throw domain_error("crt_combine: moduli are not coprime");
    if (m > kMaxModulus / q) throw domain_error("crt_combine: combined modulus too large");
    // x' = x + m * ((v - x) * m^-1 mod q)
    ModArith aq{q};
    u64 diff = aq.sub(part.value(), x % q);
    u64 k = aq.mul(diff, aq.inverse(m % q));
    x += m * k;
    m *= q;
  }
  return Residue(static_cast<i64>(x), m);
}

std::string to_string(const Residue& a) { return std::to_string(a.value()); }

}  // namespace zcc
