#include "zcc/curve.hpp"

#include <charconv>
#include <vector>

#include "zcc/weierstrass.hpp"

namespace zcc {

namespace {

u64 common_modulus(std::initializer_list<const Residue*> values) {
  u64 n = (*values.begin())->modulus();
  for (const Residue* r : values)
    if (r->modulus() != n) throw domain_error("curve coefficients must share one ring");
  return n;
}

std::vector<i64> parse_integers(std::string_view text, std::size_t expected) {
  std::vector<i64> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    i64 value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw domain_error("malformed curve literal '" + std::string(text) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.size() != expected)
    throw domain_error("curve literal '" + std::string(text) + "' needs " +
                       std::to_string(expected) + " comma-separated integers");
  return out;
}

CurveInvariants finish(u64 n, const WeierstrassQuantities<ModArith>& q) {
  auto r = [n](u64 v) { return Residue(static_cast<i64>(v), n); };
  CurveInvariants inv{r(q.b2), r(q.b4), r(q.b6), r(q.b8), r(q.c4), r(q.c6), r(q.delta), std::nullopt};
  ModArith k{n};
  if (k.is_unit(q.delta)) {
    inv.j = r(k.mul(k.mul(q.c4, k.mul(q.c4, q.c4)), k.inverse(q.delta)));
  }
  return inv;
}

}  // namespace

GeneralCurve::GeneralCurve(const Residue& a1, const Residue& a2, const Residue& a3,
                           const Residue& a4, const Residue& a6)
    : modulus_(common_modulus({&a1, &a2, &a3, &a4, &a6})),
      a_{a1.value(), a2.value(), a3.value(), a4.value(), a6.value()} {}

GeneralCurve::GeneralCurve(u64 modulus, const std::array<i64, 5>& coefficients)
    : modulus_(modulus), a_{} {
  for (std::size_t i = 0; i < 5; ++i) a_[i] = Residue(coefficients[i], modulus).value();
}

ReducedCurve::ReducedCurve(const Residue& a, const Residue& b)
    : modulus_(common_modulus({&a, &b})), a_(a.value()), b_(b.value()) {
  if (modulus_ % 2 == 0 || modulus_ % 3 == 0) throw unsupported_characteristic(modulus_);
}

ReducedCurve::ReducedCurve(u64 modulus, i64 a, i64 b)
    : ReducedCurve(Residue(a, modulus), Residue(b, modulus)) {}

GeneralCurve embed(const ReducedCurve& e) {
  return GeneralCurve::from_normalized(e.modulus(), {0, 0, 0, e.a_value(), e.b_value()});
}

CurveInvariants invariants_general(const GeneralCurve& e) {
  const auto& a = e.coefficients();
  ModArith k{e.modulus()};
  return finish(e.modulus(), weierstrass_quantities(k, a[0], a[1], a[2], a[3], a[4]));
}

CurveInvariants invariants_reduced(const ReducedCurve& e) {
  ModArith k{e.modulus()};
  u64 a = e.a_value(), b = e.b_value();
  auto q = weierstrass_quantities(k, u64{0}, u64{0}, u64{0}, a, b);
  q.delta = reduced_discriminant(k, a, b);
  // c4^3 = -1728 (4a)^3, so j = c4^3 / delta as for the general form.
  return finish(e.modulus(), q);
}

bool is_nonsingular(const GeneralCurve& e) {
  return is_unit(invariants_general(e).delta);
}

bool is_nonsingular(const ReducedCurve& e) {
  ModArith k{e.modulus()};
  return k.is_unit(reduced_discriminant(k, e.a_value(), e.b_value()));
}

ReducedCurve reduce_curve(const GeneralCurve& e) {
  u64 n = e.modulus();
  if (n % 2 == 0 || n % 3 == 0) throw unsupported_characteristic(n);
  ModArith k{n};
  const auto& a = e.coefficients();
  auto q = weierstrass_quantities(k, a[0], a[1], a[2], a[3], a[4]);
  u64 ra = k.mul(k.neg(q.c4), k.inverse(k.constant(48)));
  u64 rb = k.mul(k.neg(q.c6), k.inverse(k.constant(864)));
  return ReducedCurve(n, static_cast<i64>(ra), static_cast<i64>(rb));
}

std::string to_literal(const GeneralCurve& e) {
  std::string out;
  for (std::size_t i = 0; i < 5; ++i) {
    if (i) out += ',';
    out += std::to_string(e.coefficients()[i]);
  }
  return out;
}

std::string to_literal(const ReducedCurve& e) {
  return std::to_string(e.a_value()) + "," + std::to_string(e.b_value());
}

GeneralCurve parse_general_literal(std::string_view text, u64 modulus) {
  auto v = parse_integers(text, 5);
  return GeneralCurve(modulus, {v[0], v[1], v[2], v[3], v[4]});
}

ReducedCurve parse_reduced_literal(std::string_view text, u64 modulus) {
  auto v = parse_integers(text, 2);
  return ReducedCurve(modulus, v[0], v[1]);
}

std::string to_equation(const ReducedCurve& e) {
  std::string out = "y^2 = x^3";
  if (e.a_value() == 1) out += " + x";
  else if (e.a_value() != 0) out += " + " + std::to_string(e.a_value()) + "x";
  if (e.b_value() != 0) out += " + " + std::to_string(e.b_value());
  return out;
}

}  // namespace zcc
