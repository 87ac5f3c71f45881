#pragma once

#include <chrono>
#include <optional>
#include <string_view>

#include "zcc/modring.hpp"

namespace zcc {

enum class CurveForm { reduced, general };

std::string_view to_string(CurveForm form);

/// Default cap on tuple evaluations for a single census or classification.
inline constexpr u64 kDefaultBudget = 100'000'000;

struct CensusOptions {
  unsigned workers = 1;
  u64 budget = kDefaultBudget;
};

struct CensusResult {
  u64 modulus;
  CurveForm form;
  /// n^2 (reduced) or n^5 (general).
  u64 total_tuples;
  u64 nonsingular_count;
  /// phi(n^2) or phi(n^5).
  std::optional<u64> predicted_count;
  std::chrono::milliseconds elapsed;
};

/// Pairs (a, b) in (Z/n)^2 whose discriminant is a unit. Requires gcd(n, 6) = 1.
CensusResult count_nonsingular_reduced(u64 n, const CensusOptions& options = {});

/// Tuples (a1, a2, a3, a4, a6) in (Z/n)^5 whose discriminant is a unit.
/// Throws resource_error when n^5 exceeds the budget.
CensusResult count_nonsingular_general(u64 n, const CensusOptions& options = {});

enum class DeltaZeroMode { brute, closed_form };

/// Number of (a, b) in (Z/p^m)^2 with -16(4a^3 + 27b^2) = 0.
/// The closed form is sum_{i=0}^{floor((m-1)/6)} phi(p^(m-3i)) + p^(floor(m/2) + floor(2m/3)).
u64 delta_zero_count(u64 p, unsigned m, DeltaZeroMode mode, unsigned workers = 1);

struct ReducedBounds {
  u64 p;
  unsigned m;
  /// p^(2m-1)
  u64 lower;
  /// Brute-force census over Z/p^m.
  u64 actual;
  /// p^(2m) - closed-form delta-zero count.
  u64 upper;
};

ReducedBounds reduced_bounds(u64 p, unsigned m, const CensusOptions& options = {});

}  // namespace zcc
