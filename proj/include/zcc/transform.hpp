#pragma once

#include <array>

#include "zcc/curve.hpp"
#include "zcc/modring.hpp"

namespace zcc {

/// Admissible change of variables (u, r, s, t), u a unit.
///
/// Convention: applying tau to E yields the curve E' whose points (x, y) map
/// to points of E under (x, y) -> (u^2 x + r, u^3 y + u^2 s x + t). On
/// reduced curves this gives a' = u^-4 a and b' = u^-6 b.
class AdmissibleChange {
 public:
  /// Throws not_a_unit if gcd(u, n) != 1 and domain_error on ring mismatch.
  AdmissibleChange(const Residue& u, const Residue& r, const Residue& s, const Residue& t);
  AdmissibleChange(u64 modulus, i64 u, i64 r, i64 s, i64 t);

  static AdmissibleChange identity(u64 modulus);

  u64 modulus() const noexcept { return modulus_; }
  Residue u() const { return Residue(static_cast<i64>(u_), modulus_); }
  Residue r() const { return Residue(static_cast<i64>(r_), modulus_); }
  Residue s() const { return Residue(static_cast<i64>(s_), modulus_); }
  Residue t() const { return Residue(static_cast<i64>(t_), modulus_); }

  /// Maps a point (x, y) of the image curve to the corresponding point of the source.
  std::array<u64, 2> pull_back(u64 x, u64 y) const;

  friend bool operator==(const AdmissibleChange&, const AdmissibleChange&) = default;

 private:
  u64 modulus_;
  u64 u_, r_, s_, t_;
};

GeneralCurve apply_general(const AdmissibleChange& tau, const GeneralCurve& e);

/// (u^-4 a, u^-6 b); throws not_a_unit for a non-unit u.
ReducedCurve apply_reduced(const Residue& u, const ReducedCurve& e);

/// apply(compose(tau2, tau1), E) == apply(tau2, apply(tau1, E)).
AdmissibleChange compose(const AdmissibleChange& tau2, const AdmissibleChange& tau1);

AdmissibleChange invert(const AdmissibleChange& tau);

/// The change with u = 1 that kills a1, a2, a3:
/// s = -a1/2, r = -b2/12, t = -(a3 + r a1)/2. Needs gcd(n, 6) = 1.
AdmissibleChange reduction_change(const GeneralCurve& e);

/// Coefficient map with the inverse powers of u precomputed, for orbit sweeps
/// that fix u and vary (r, s, t).
class ChangeKernel {
 public:
  ChangeKernel(const ModArith& k, u64 u);

  GeneralCurve::Coefficients apply(const GeneralCurve::Coefficients& a, u64 r, u64 s,
                                   u64 t) const;

 private:
  ModArith k_;
  u64 uinv1_, uinv2_, uinv3_, uinv4_, uinv6_;
  u64 two_, three_;
};

}  // namespace zcc
