#pragma once

/**
 * @file classify.hpp
 * @brief Orbit classification of nonsingular Weierstrass curves over Z/n.
 *
 * Curves are scanned in lexicographic coefficient order. The first unvisited
 * nonsingular curve is, by construction, the smallest member of its orbit and
 * becomes the class leader; its whole orbit is then generated by applying
 * every group element and marked visited. The reduced form is acted on by
 * the units u (a, b) -> (u^-4 a, u^-6 b); the general form by the full
 * (u, r, s, t) group of order phi(n) n^3.
 *
 * Automorphism orders come from orbit-stabilizer (group order / orbit size).
 * With ClassifyOptions::verify_stabilizer set, each leader's stabilizer is
 * also counted directly and stored alongside for comparison.
 */

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zcc/curve.hpp"
#include "zcc/enumerate.hpp"

namespace zcc {

using Curve = std::variant<ReducedCurve, GeneralCurve>;

std::string to_literal(const Curve& e);

struct ClassifyOptions {
  unsigned workers = 1;
  /// Cap on the number of coefficient tuples (n^2 or n^5).
  u64 budget = kDefaultBudget;
  bool verify_stabilizer = false;
};

struct IsomorphismClass {
  /// Lexicographically smallest curve in the orbit.
  Curve leader;
  u64 class_size;
  u64 aut_order;
  /// Affine points of the leader.
  u64 point_count;
  /// Direct stabilizer count, filled only when verify_stabilizer is set.
  std::optional<u64> stabilizer_scan;
};

struct Classification {
  u64 modulus;
  CurveForm form;
  /// phi(n) for the reduced form, phi(n^4) for the general form.
  u64 group_order;
  /// Sorted by leader.
  std::vector<IsomorphismClass> classes;
  /// Closed-form class count where one is known for this n and form.
  std::optional<u64> predicted_class_count;

  u64 class_count() const { return classes.size(); }
  u64 curve_count() const;
};

/// Throws unsupported_characteristic unless gcd(n, 6) = 1.
Classification classify_reduced(u64 n, const ClassifyOptions& options = {});

/// Throws resource_error when n^5 exceeds options.budget.
Classification classify_general(u64 n, const ClassifyOptions& options = {});

/// Stabilizer size by direct scan of the group. Throws domain_error for
/// singular curves.
u64 aut_order(const ReducedCurve& e);
u64 aut_order(const GeneralCurve& e);

/// q prime, q > 3. Reduced: 2q + {6, 2, 4, 0} by q mod 12. General:
/// 2q + 3 + (-4/q) + 2(-3/q) with Jacobi symbols.
u64 predict_class_count_field(u64 q, CurveForm form);

/// 2p^m + {6, 2, 4, 0} by p mod 12 in {1, 5, 7, 11}.
u64 predict_class_count_prime_power(u64 p, unsigned m);

/// Product of predict_class_count_prime_power over the prime-power factors of n.
u64 predict_class_count_composite(u64 n);

}  // namespace zcc
