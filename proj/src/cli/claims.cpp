#include <algorithm>
#include <functional>
#include <numeric>

#include "zcc/classify.hpp"
#include "zcc/cli.hpp"
#include "zcc/gf2m.hpp"
#include "zcc/residues.hpp"

namespace zcc::cli {

namespace {

// Nonsingular general curves over GF(2^m), m = 1..5.
constexpr u64 kBinaryFieldCensus[] = {16, 768, 28672, 983040, 32505856};

struct ReducedClassRow {
  u64 a, b, size, aut, points;
};

// Classes of y^2 = x^3 + ax + b over Z/5, keyed by lexicographic leader.
constexpr ReducedClassRow kZ5Classes[] = {
    {0, 1, 2, 2, 5}, {0, 2, 2, 2, 5}, {1, 0, 1, 4, 3}, {1, 1, 2, 2, 8},
    {1, 2, 2, 2, 3}, {2, 0, 1, 4, 1}, {2, 1, 2, 2, 6}, {3, 0, 1, 4, 9},
    {3, 2, 2, 2, 4}, {4, 0, 1, 4, 7}, {4, 1, 2, 2, 7}, {4, 2, 2, 2, 2},
};

struct Precondition {
  bool ok;
  std::string reason;
};

Precondition met() { return {true, {}}; }
Precondition unmet(std::string reason) { return {false, std::move(reason)}; }

Precondition prime_above_three(u64 q) {
  return q > 3 && is_prime(q) ? met() : unmet("needs a prime q > 3");
}

Precondition coprime_to_six(u64 n) {
  return std::gcd(n, u64{6}) == 1 ? met() : unmet("needs gcd(n, 6) = 1");
}

Precondition coprime_composite(u64 n) {
  if (std::gcd(n, u64{6}) != 1) return unmet("needs gcd(n, 6) = 1");
  if (factorize(n).size() < 2) return unmet("needs at least two distinct prime factors");
  return met();
}

Precondition odd_prime(u64 p) { return p != 2 && is_prime(p) ? met() : unmet("needs an odd prime p"); }

void check_budget(const std::string& what, u64 base, unsigned power, u64 budget) {
  u64 tuples = 0;
  try {
    tuples = ipow(base, power);
  } catch (const domain_error&) {
    throw resource_error(what, UINT64_MAX, budget);
  }
  if (tuples > budget) throw resource_error(what, tuples, budget);
}

std::string join(const std::vector<u64>& v) {
  std::string out;
  for (u64 x : v) out += (out.empty() ? "" : ";") + std::to_string(x);
  return out;
}

VerdictRecord compare(std::string predicted, std::string observed) {
  Verdict v = predicted == observed ? Verdict::verified : Verdict::falsified;
  return {{}, {}, std::move(predicted), std::move(observed), v, {}};
}

VerdictRecord compare(u64 predicted, u64 observed) {
  return compare(std::to_string(predicted), std::to_string(observed));
}

CensusOptions census_options(const RunConfig& c) { return {c.workers, c.budget}; }

ClassifyOptions classify_options(const RunConfig& c, bool stabilizer) {
  return {c.workers, c.budget, stabilizer};
}

u64 reduced_census(const RunConfig& c, u64 n) {
  return count_nonsingular_reduced(n, census_options(c)).nonsingular_count;
}

u64 general_census(const RunConfig& c, u64 n) {
  return count_nonsingular_general(n, census_options(c)).nonsingular_count;
}

/// Classes whose size times directly scanned stabilizer equals the group order.
u64 consistent_classes(const Classification& cls) {
  u64 good = 0;
  for (const auto& k : cls.classes)
    if (k.stabilizer_scan && k.class_size * *k.stabilizer_scan == cls.group_order &&
        k.aut_order == *k.stabilizer_scan)
      ++good;
  return good;
}

using NRunner = std::function<VerdictRecord(const RunConfig&, u64)>;
using PMRunner = std::function<VerdictRecord(const RunConfig&, u64, unsigned)>;

struct Claim {
  ClaimInfo info;
  std::function<Precondition(u64, unsigned)> precondition;
  std::vector<u64> default_n;
  std::vector<u64> default_p;
  std::vector<unsigned> default_m;
  NRunner by_n;
  PMRunner by_pm;
  std::function<VerdictRecord(const RunConfig&, unsigned)> by_m;
  std::function<VerdictRecord(const RunConfig&)> fixed;
};

std::vector<u64> range(u64 lo, u64 hi, const std::function<bool(u64)>& keep) {
  std::vector<u64> out;
  for (u64 v = lo; v <= hi; ++v)
    if (keep(v)) out.push_back(v);
  return out;
}

std::vector<u64> primes_between(u64 lo, u64 hi) {
  return range(lo, hi, [](u64 v) { return is_prime(v); });
}

std::vector<u64> coprime_between(u64 lo, u64 hi) {
  return range(lo, hi, [](u64 v) { return std::gcd(v, u64{6}) == 1; });
}

std::vector<Claim> build_claims() {
  std::vector<Claim> claims;
  auto n_claim = [&](std::string id, std::string statement, std::string form,
                     std::function<Precondition(u64)> pre, std::vector<u64> defaults, NRunner run) {
    Claim c;
    c.info = {std::move(id), std::move(statement), "n", std::move(form)};
    c.precondition = [pre](u64 n, unsigned) { return pre(n); };
    c.default_n = std::move(defaults);
    c.by_n = std::move(run);
    claims.push_back(std::move(c));
  };
  auto pm_claim = [&](std::string id, std::string statement, std::string form,
                      std::function<Precondition(u64)> pre, std::vector<u64> p, std::vector<unsigned> m,
                      PMRunner run) {
    Claim c;
    c.info = {std::move(id), std::move(statement), "pm", std::move(form)};
    c.precondition = [pre](u64 p, unsigned) { return pre(p); };
    c.default_p = std::move(p);
    c.default_m = std::move(m);
    c.by_pm = std::move(run);
    claims.push_back(std::move(c));
  };

  const auto field_primes = primes_between(5, 59);
  const auto small_fields = std::vector<u64>{5, 7, 11, 13};
  const auto composites = std::vector<u64>{35, 55, 65, 77, 85, 91, 95};
  const auto coprime = coprime_between(5, 101);

  n_claim("NR_FIELD_Q2Q", "N_R(F_q) = q^2 - q for prime q > 3", "reduced", prime_above_three, field_primes,
          [](const RunConfig& c, u64 q) { return compare(q * q - q, reduced_census(c, q)); });
  n_claim("CLASS_SIZE_FIELD", "each reduced class over F_q has (q - 1)/|Aut(E)| members", "reduced",
          prime_above_three, field_primes, [](const RunConfig& c, u64 q) {
            auto cls = classify_reduced(q, classify_options(c, true));
            return compare(cls.class_count(), consistent_classes(cls));
          });
  n_claim("SIGMA_MOD12", "C_R(F_q) = 2q + 6, 2q + 2, 2q + 4, 2q for q = 1, 5, 7, 11 mod 12", "reduced",
          prime_above_three, field_primes, [](const RunConfig& c, u64 q) {
            return compare(predict_class_count_field(q, CurveForm::reduced),
                           classify_reduced(q, classify_options(c, false)).class_count());
          });
  n_claim("NG_Q5Q4", "N_G(F_q) = q^5 - q^4 for prime q", "general",
          [](u64 q) { return is_prime(q) ? met() : unmet("needs a prime q"); },
          {2, 3, 5, 7, 11, 13},
          [](const RunConfig& c, u64 q) { return compare(ipow(q, 5) - ipow(q, 4), general_census(c, q)); });
  n_claim("CLASS_SIZE_GEN_FIELD", "each general class over F_q has (q^4 - q^3)/|Aut(E)| members", "general",
          [](u64 q) { return is_prime(q) ? met() : unmet("needs a prime q"); }, small_fields,
          [](const RunConfig& c, u64 q) {
            auto cls = classify_general(q, classify_options(c, true));
            return compare(cls.class_count(), consistent_classes(cls));
          });
  n_claim("WATERHOUSE_NQ", "C_G(F_q) = 2q + 3 + (-4/q) + 2(-3/q) for prime q > 3", "general",
          prime_above_three, small_fields, [](const RunConfig& c, u64 q) {
            return compare(predict_class_count_field(q, CurveForm::general),
                           classify_general(q, classify_options(c, false)).class_count());
          });
  n_claim("NR_ZP_PHI", "N_R(Z_p) = phi(p^2) for prime p > 3", "reduced", prime_above_three, field_primes,
          [](const RunConfig& c, u64 p) { return compare(euler_phi_power(p, 2), reduced_census(c, p)); });
  n_claim("NR_MULT", "N_R(Z_n) is the product of N_R over the prime-power factors of n", "reduced",
          coprime_composite, composites, [](const RunConfig& c, u64 n) {
            u64 product = 1;
            for (const auto& f : factorize(n)) product *= reduced_census(c, f.value());
            return compare(product, reduced_census(c, n));
          });
  pm_claim("NR_LOWER", "N_R(Z_p^m) >= p^(2m - 1)", "reduced", prime_above_three, {5, 7, 11, 13}, {1, 2, 3},
           [](const RunConfig& c, u64 p, unsigned m) {
             check_budget("reduced census", p, 2 * m, c.budget);
             auto b = reduced_bounds(p, m, census_options(c));
             VerdictRecord r{{}, {}, ">=" + std::to_string(b.lower), std::to_string(b.actual),
                             b.actual >= b.lower ? Verdict::verified : Verdict::falsified, {}};
             return r;
           });
  pm_claim("QR_COUNT", "number of squares in Z/p^m, zero included, by the closed form", "", odd_prime,
           {3, 5, 7, 11, 13}, {1, 2, 3, 4}, [](const RunConfig& c, u64 p, unsigned m) {
             check_budget("residue scan", p, m, c.budget);
             return compare(residue_count(2, p, m), residue_count_brute(2, ipow(p, m), c.workers));
           });
  pm_claim("CR_COUNT", "number of cubes in Z/p^m, zero included, by the closed form", "", prime_above_three,
           {5, 7, 11, 13}, {1, 2, 3, 4}, [](const RunConfig& c, u64 p, unsigned m) {
             check_budget("residue scan", p, m, c.budget);
             return compare(residue_count(3, p, m), residue_count_brute(3, ipow(p, m), c.workers));
           });
  pm_claim("SIXTH_COUNT", "number of sixth powers in Z/p^m, zero included, by the closed form", "",
           prime_above_three, {5, 7, 11, 13}, {1, 2, 3, 4}, [](const RunConfig& c, u64 p, unsigned m) {
             check_budget("residue scan", p, m, c.budget);
             return compare(residue_count(6, p, m), residue_count_brute(6, ipow(p, m), c.workers));
           });
  pm_claim("QR_OCC", "nonzero squares in class [i] of Z/p^m are hit 2p^(i-1) times", "", odd_prime,
           {3, 5, 7}, {1, 2, 3, 4, 5}, [](const RunConfig& c, u64 p, unsigned m) {
             check_budget("residue scan", p, m, c.budget);
             auto t = occurrence_classes(2, p, m, c.workers);
             return compare(join(t.conjectured), join(t.observed()));
           });
  pm_claim("CR_OCC", "nonzero cubes in class [i] of Z/p^m are hit p^(2(i-1)) or 3p^(2(i-1)) times", "",
           prime_above_three, {5, 7, 11, 13}, {1, 2, 3, 4}, [](const RunConfig& c, u64 p, unsigned m) {
             check_budget("residue scan", p, m, c.budget);
             auto t = occurrence_classes(3, p, m, c.workers);
             return compare(join(t.conjectured), join(t.observed()));
           });
  pm_claim("ZERO_SOLS", "|{x : x^2 = 0}| = p^floor(m/2) and |{x : x^3 = 0}| = p^floor(2m/3) in Z/p^m", "",
           [](u64 p) { return is_prime(p) ? met() : unmet("needs a prime p"); }, {2, 3, 5, 7},
           {1, 2, 3, 4, 5, 6}, [](const RunConfig& c, u64 p, unsigned m) {
             check_budget("residue scan", p, m, c.budget);
             std::vector<unsigned> ks;
             for (unsigned k : c.powers)
               if (k == 2 || k == 3) ks.push_back(k);
             if (ks.empty()) ks = {2, 3};
             std::vector<u64> predicted, observed;
             for (unsigned k : ks) {
               predicted.push_back(zero_solution_count(k, p, m));
               observed.push_back(zero_solution_count_brute(k, ipow(p, m)));
             }
             return compare(join(predicted), join(observed));
           });
  pm_claim("DELTA0_UPPER",
           "#{(a, b) : 4a^3 + 27b^2 = 0 in Z/p^m} matches the closed form behind the upper bound", "reduced",
           prime_above_three, {5, 7, 11, 13}, {1, 2, 3}, [](const RunConfig& c, u64 p, unsigned m) {
             check_budget("discriminant scan", p, 2 * m, c.budget);
             return compare(delta_zero_count(p, m, DeltaZeroMode::closed_form),
                            delta_zero_count(p, m, DeltaZeroMode::brute, c.workers));
           });
  n_claim("NR_PHI_N2", "N_R(Z_n) = phi(n^2) for gcd(n, 6) = 1", "reduced", coprime_to_six, coprime,
          [](const RunConfig& c, u64 n) { return compare(euler_phi_power(n, 2), reduced_census(c, n)); });
  n_claim("CLASS_SIZE_RED_ZN", "each reduced class over Z/n has phi(n)/|Aut(E)| members", "reduced",
          coprime_to_six, coprime, [](const RunConfig& c, u64 n) {
            auto cls = classify_reduced(n, classify_options(c, true));
            return compare(cls.class_count(), consistent_classes(cls));
          });
  n_claim("CR_PM_MOD12", "C_R(Z/p^m) = 2p^m + 6, 2, 4, 0 for p = 1, 5, 7, 11 mod 12", "reduced",
          [](u64 n) {
            auto f = factorize(n);
            return f.size() == 1 && f[0].prime > 3 ? met() : unmet("needs a prime power p^m with p > 3");
          },
          {5, 7, 11, 13, 25, 49, 121, 125}, [](const RunConfig& c, u64 n) {
            auto f = factorize(n)[0];
            return compare(predict_class_count_prime_power(f.prime, f.exponent),
                           classify_reduced(n, classify_options(c, false)).class_count());
          });
  n_claim("CR_MULT", "C_R(Z_n) is the product of C_R over the prime-power factors of n", "reduced",
          coprime_composite, composites, [](const RunConfig& c, u64 n) {
            u64 product = 1;
            for (const auto& f : factorize(n))
              product *= classify_reduced(f.value(), classify_options(c, false)).class_count();
            return compare(product, classify_reduced(n, classify_options(c, false)).class_count());
          });
  n_claim("CR_PP_MULT", "C_R(Z_n) is the product of the prime-power closed forms", "reduced", coprime_to_six,
          coprime, [](const RunConfig& c, u64 n) {
            return compare(predict_class_count_composite(n),
                           classify_reduced(n, classify_options(c, false)).class_count());
          });
  n_claim("NG_PHI_N5", "N_G(Z_n) = phi(n^5)", "general",
          [](u64) { return met(); }, range(2, 12, [](u64) { return true; }),
          [](const RunConfig& c, u64 n) { return compare(euler_phi_power(n, 5), general_census(c, n)); });
  n_claim("CLASS_SIZE_GEN_ZN", "each general class over Z/n has phi(n^4)/|Aut(E)| members", "general",
          [](u64) { return met(); }, range(2, 12, [](u64) { return true; }), [](const RunConfig& c, u64 n) {
            auto cls = classify_general(n, classify_options(c, true));
            return compare(cls.class_count(), consistent_classes(cls));
          });
  {
    Claim c;
    c.info = {"TABLE1_GF2M", "published N_G(GF(2^m)) for m = 1..5, each equal to 2^(5m) - 2^(4m)", "m", "general"};
    c.precondition = [](u64, unsigned m) {
      return m >= 1 && m <= 5 ? met() : unmet("published values cover m = 1..5");
    };
    c.default_m = {1, 2, 3, 4, 5};
    c.by_m = [](const RunConfig& cfg, unsigned m) {
      check_budget("GF(2^m) census", 2, 5 * m, cfg.budget);
      u64 published = kBinaryFieldCensus[m - 1];
      u64 formula = (u64{1} << (5 * m)) - (u64{1} << (4 * m));
      auto r = compare(published, count_nonsingular_general_gf2m(m, cfg.workers));
      if (published != formula) r.verdict = Verdict::falsified;
      return r;
    };
    claims.push_back(std::move(c));
  }
  {
    Claim c;
    c.info = {"TABLE8_Z5", "published reduced classes over Z/5: leaders, sizes, |Aut|, affine points", "none",
              "reduced"};
    c.precondition = [](u64, unsigned) { return met(); };
    c.fixed = [](const RunConfig& cfg) {
      auto cls = classify_reduced(5, classify_options(cfg, false));
      u64 matching = 0;
      for (const auto& row : kZ5Classes) {
        for (const auto& k : cls.classes) {
          const auto& e = std::get<ReducedCurve>(k.leader);
          if (e.a_value() == row.a && e.b_value() == row.b && k.class_size == row.size &&
              k.aut_order == row.aut && k.point_count == row.points)
            ++matching;
        }
      }
      std::string observed = std::to_string(matching) + " of " + std::to_string(cls.class_count());
      return compare(std::to_string(std::size(kZ5Classes)) + " of 12", observed);
    };
    claims.push_back(std::move(c));
  }
  return claims;
}

const std::vector<Claim>& claims() {
  static const std::vector<Claim> all = build_claims();
  return all;
}

VerdictRecord evaluate(const Claim& claim, const std::string& params, const Precondition& pre,
                       const std::function<VerdictRecord()>& body) {
  VerdictRecord r;
  if (!pre.ok) {
    r = {{}, {}, "", "", Verdict::skipped, pre.reason};
  } else {
    try {
      r = body();
    } catch (const resource_error& e) {
      r = {{}, {}, "", "", Verdict::skipped, e.what()};
    }
  }
  r.claim_id = claim.info.id;
  r.parameters = params;
  return r;
}

void run_claim(const Claim& claim, const RunConfig& c, VerdictReport& report) {
  const auto& id = claim.info.parameters;
  if (id == "n") {
    const auto& ns = c.moduli.empty() ? claim.default_n : c.moduli;
    for (u64 n : ns)
      report.records.push_back(evaluate(claim, "n=" + std::to_string(n), claim.precondition(n, 0),
                                        [&] { return claim.by_n(c, n); }));
  } else if (id == "pm") {
    const auto& ps = c.primes.empty() ? claim.default_p : c.primes;
    const auto& ms = c.exponents.empty() ? claim.default_m : c.exponents;
    for (u64 p : ps)
      for (unsigned m : ms)
        report.records.push_back(evaluate(claim, "p=" + std::to_string(p) + " m=" + std::to_string(m),
                                          claim.precondition(p, m), [&] { return claim.by_pm(c, p, m); }));
  } else if (id == "m") {
    const auto& ms = c.exponents.empty() ? claim.default_m : c.exponents;
    for (unsigned m : ms)
      report.records.push_back(evaluate(claim, "m=" + std::to_string(m), claim.precondition(0, m),
                                        [&] { return claim.by_m(c, m); }));
  } else {
    report.records.push_back(evaluate(claim, "-", claim.precondition(0, 0), [&] { return claim.fixed(c); }));
  }
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& c : claims()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

std::optional<std::string> canonical_claim(const std::string& id) {
  if (id == "CR_MOD12") return "CR_PM_MOD12";
  for (const auto& c : claim_registry())
    if (c.id == id) return id;
  return std::nullopt;
}

VerdictReport run_verify(const RunConfig& config) {
  VerdictReport report;
  for (const auto& claim : claims()) {
    if (config.claim && claim.info.id != *config.claim) continue;
    run_claim(claim, config, report);
  }
  return report;
}

}  // namespace zcc::cli
