#include "zcc/transform.hpp"


namespace zcc {

AdmissibleChange::AdmissibleChange(const Residue& u, const Residue& r, const Residue& s,
                                   const Residue& t)
    : modulus_(u.modulus()), u_(u.value()), r_(r.value()), s_(s.value()), t_(t.value()) {
  if (r.modulus() != modulus_ || s.modulus() != modulus_ || t.modulus() != modulus_)
    throw domain_error("admissible change parameters must share one ring");
  ModArith k{modulus_};
  if (!k.is_unit(u_)) throw not_a_unit(u_, modulus_, std::gcd(u_, modulus_));
}

AdmissibleChange::AdmissibleChange(u64 modulus, i64 u, i64 r, i64 s, i64 t)
    : AdmissibleChange(Residue(u, modulus), Residue(r, modulus), Residue(s, modulus),
                       Residue(t, modulus)) {}

AdmissibleChange AdmissibleChange::identity(u64 modulus) {
  return AdmissibleChange(modulus, 1, 0, 0, 0);
}

std::array<u64, 2> AdmissibleChange::pull_back(u64 x, u64 y) const {
  ModArith k{modulus_};
  u64 u2 = k.mul(u_, u_);
  u64 u3 = k.mul(u2, u_);
  u64 x0 = k.add(k.mul(u2, x), r_);
  u64 y0 = k.add(k.add(k.mul(u3, y), k.mul(k.mul(u2, s_), x)), t_);
  return {x0, y0};
}

ChangeKernel::ChangeKernel(const ModArith& k, u64 u) : k_(k) {
  uinv1_ = k.inverse(u);
  uinv2_ = k.mul(uinv1_, uinv1_);
  uinv3_ = k.mul(uinv2_, uinv1_);
  uinv4_ = k.mul(uinv2_, uinv2_);
  uinv6_ = k.mul(uinv4_, uinv2_);
  two_ = k.constant(2);
  three_ = k.constant(3);
}

GeneralCurve::Coefficients ChangeKernel::apply(const GeneralCurve::Coefficients& a, u64 r,
                                               u64 s, u64 t) const {
  const ModArith& k = k_;
  const u64 a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
  const u64 rr = k.mul(r, r);
  // u a1' = a1 + 2s
  u64 n1 = k.add(a1, k.mul(two_, s));
  // u^2 a2' = a2 - s a1 + 3r - s^2
  u64 n2 = k.sub(k.add(k.sub(a2, k.mul(s, a1)), k.mul(three_, r)), k.mul(s, s));
  // u^3 a3' = a3 + r a1 + 2t
  u64 n3 = k.add(k.add(a3, k.mul(r, a1)), k.mul(two_, t));
  // u^4 a4' = a4 - s a3 + 2 r a2 - (t + r s) a1 + 3 r^2 - 2 s t
  u64 n4 = k.sub(a4, k.mul(s, a3));
  n4 = k.add(n4, k.mul(two_, k.mul(r, a2)));
  n4 = k.sub(n4, k.mul(k.add(t, k.mul(r, s)), a1));
  n4 = k.add(n4, k.mul(three_, rr));
  n4 = k.sub(n4, k.mul(two_, k.mul(s, t)));
  // u^6 a6' = a6 + r a4 + r^2 a2 + r^3 - t a3 - t^2 - r t a1
  u64 n6 = k.add(a6, k.mul(r, a4));
  n6 = k.add(n6, k.mul(rr, a2));
  n6 = k.add(n6, k.mul(rr, r));
  n6 = k.sub(n6, k.mul(t, a3));
  n6 = k.sub(n6, k.mul(t, t));
  n6 = k.sub(n6, k.mul(k.mul(r, t), a1));
  return {k.mul(uinv1_, n1), k.mul(uinv2_, n2), k.mul(uinv3_, n3), k.mul(uinv4_, n4),
          k.mul(uinv6_, n6)};
}

GeneralCurve apply_general(const AdmissibleChange& tau, const GeneralCurve& e) {
  if (tau.modulus() != e.modulus()) throw domain_error("apply_general: ring mismatch");
  ChangeKernel kernel(ModArith{e.modulus()}, tau.u().value());
  return GeneralCurve::from_normalized(
      e.modulus(),
      kernel.apply(e.coefficients(), tau.r().value(), tau.s().value(), tau.t().value()));
}

ReducedCurve apply_reduced(const Residue& u, const ReducedCurve& e) {
  if (u.modulus() != e.modulus()) throw domain_error("apply_reduced: ring mismatch");
  ModArith k{e.modulus()};
  u64 uinv = k.inverse(u.value());
  u64 uinv2 = k.mul(uinv, uinv);
  u64 uinv4 = k.mul(uinv2, uinv2);
  u64 uinv6 = k.mul(uinv4, uinv2);
  return ReducedCurve(e.modulus(), static_cast<i64>(k.mul(uinv4, e.a_value())),
                      static_cast<i64>(k.mul(uinv6, e.b_value())));
}

AdmissibleChange compose(const AdmissibleChange& tau2, const AdmissibleChange& tau1) {
  if (tau1.modulus() != tau2.modulus()) throw domain_error("compose: ring mismatch");
  // The composite pulls points back through tau2 first, then tau1:
  // u = u1 u2, r = u1^2 r2 + r1, s = u1 s2 + s1, t = u1^3 t2 + u1^2 s1 r2 + t1.
  ModArith k{tau1.modulus()};
  u64 u1 = tau1.u().value(), r1 = tau1.r().value(), s1 = tau1.s().value(), t1 = tau1.t().value();
  u64 u2 = tau2.u().value(), r2 = tau2.r().value(), s2 = tau2.s().value(), t2 = tau2.t().value();
  u64 u1sq = k.mul(u1, u1);
  u64 u = k.mul(u1, u2);
  u64 r = k.add(k.mul(u1sq, r2), r1);
  u64 s = k.add(k.mul(u1, s2), s1);
  u64 t = k.add(k.add(k.mul(k.mul(u1sq, u1), t2), k.mul(u1sq, k.mul(s1, r2))), t1);
  auto v = [](u64 x) { return static_cast<i64>(x); };
  return AdmissibleChange(tau1.modulus(), v(u), v(r), v(s), v(t));
}

AdmissibleChange invert(const AdmissibleChange& tau) {
  ModArith k{tau.modulus()};
  u64 u = tau.u().value(), r = tau.r().value(), s = tau.s().value(), t = tau.t().value();
  u64 ui = k.inverse(u);
  u64 ui2 = k.mul(ui, ui);
  u64 ui3 = k.mul(ui2, ui);
  u64 ri = k.neg(k.mul(r, ui2));
  u64 si = k.neg(k.mul(s, ui));
  // t' = -(t - s r) u^-3
  u64 ti = k.neg(k.mul(k.sub(t, k.mul(s, r)), ui3));
  auto v = [](u64 x) { return static_cast<i64>(x); };
  return AdmissibleChange(tau.modulus(), v(ui), v(ri), v(si), v(ti));
}

AdmissibleChange reduction_change(const GeneralCurve& e) {
  u64 n = e.modulus();
  if (n % 2 == 0 || n % 3 == 0) throw unsupported_characteristic(n);
  ModArith k{n};
  const auto& a = e.coefficients();
  u64 half = k.inverse(2);
  u64 b2 = k.add(k.mul(a[0], a[0]), k.mul(k.constant(4), a[1]));
  u64 s = k.neg(k.mul(a[0], half));
  u64 r = k.neg(k.mul(b2, k.inverse(12)));
  u64 t = k.neg(k.mul(k.add(a[2], k.mul(r, a[0])), half));
  auto v = [](u64 x) { return static_cast<i64>(x); };
  return AdmissibleChange(n, 1, v(r), v(s), v(t));
}

}  // namespace zcc
