#include "zcc/residues.hpp"

#include <string>

#include "zcc/parallel.hpp"

namespace zcc {

namespace {

void check_k(unsigned k, std::initializer_list<unsigned> allowed) {
  for (unsigned a : allowed)
    if (a == k) return;
  throw domain_error("unsupported residue power k = " + std::to_string(k));
}

void check_prime_for(unsigned k, u64 p) {
  if (!is_prime(p)) throw domain_error(std::to_string(p) + " is not prime");
  if (p == 2) throw domain_error("residue counts need an odd prime");
  if (k != 2 && p == 3) throw domain_error("cubic and sixth residue counts need gcd(p, 6) = 1");
}

u64 checked_modulus(u64 p, unsigned m) {
  if (m < 1) throw domain_error("exponent m must be >= 1");
  u64 q = ipow(p, m);
  if (q >= kMaxModulus) throw domain_error("p^m too large");
  return q;
}

/// Occurrence of every value x^k mod n, split across workers then merged.
std::vector<u64> power_histogram(unsigned k, u64 n, unsigned workers) {
  const ModArith ring{n};
  const u64 slices = slice_count(n, workers);
  std::vector<std::vector<u64>> partial(slices);
  parallel_for(n, workers, [&](u64 slice, u64 begin, u64 end) {
    auto& hist = partial[slice];
    hist.assign(n, 0);
    for (u64 x = begin; x < end; ++x) ++hist[ring.pow(x, k)];
  });
  std::vector<u64> total(n, 0);
  for (const auto& hist : partial)
    for (u64 v = 0; v < n; ++v) total[v] += hist[v];
  return total;
}

}  // namespace

std::vector<u64> residue_set(unsigned k, const Residue& u) {
  const u64 n = u.modulus();
  const ModArith ring{n};
  std::vector<u64> out;
  for (u64 x = 0; x < n; ++x)
    if (ring.pow(x, k) == u.value()) out.push_back(x);
  return out;
}

u64 residue_count(unsigned k, u64 p, unsigned m) {
  check_k(k, {2, 3, 6});
  check_prime_for(k, p);
  checked_modulus(p, m);
  // Nonzero k-th powers of valuation k*i are p^(k i) times a k-th power unit
  // mod p^(m - k i); the unit k-th powers make up phi / gcd(k, phi).
  u64 divisor = 2;
  if (k == 3) divisor = p % 3 == 1 ? 3 : 1;
  if (k == 6) divisor = p % 3 == 1 ? 6 : 2;
  u64 sum = 0;
  for (unsigned i = 0; i <= (m - 1) / k; ++i) sum += euler_phi(ipow(p, m - k * i)) / divisor;
  return sum + 1;
}

u64 residue_count_brute(unsigned k, u64 n, unsigned workers) {
  if (n < 2) throw domain_error("modulus must be >= 2");
  auto hist = power_histogram(k, n, workers);
  u64 distinct = 0;
  for (u64 c : hist) distinct += c != 0;
  return distinct;
}

std::vector<u64> ResidueClassTable::observed() const {
  std::vector<u64> out;
  for (const auto& [occurrence, count] : entries) out.push_back(occurrence);
  return out;
}

ResidueClassTable occurrence_classes(unsigned k, u64 p, unsigned m, unsigned workers) {
  check_k(k, {2, 3});
  check_prime_for(k, p);
  const u64 q = checked_modulus(p, m);

  ResidueClassTable table{p, m, k, q, {}, {}, 0, {}};
  const auto hist = power_histogram(k, q, workers);
  table.zero_solutions = hist[0];
  for (u64 v = 1; v < q; ++v) {
    if (hist[v] == 0) continue;
    ++table.entries[hist[v]];
    if (v % p != 0) ++table.unit_entries[hist[v]];
  }
  for (unsigned i = 1; i <= (m - 1) / k + 1; ++i) {
    if (k == 2) table.conjectured.push_back(2 * ipow(p, i - 1));
    else table.conjectured.push_back((p % 3 == 1 ? 3 : 1) * ipow(p, 2 * (i - 1)));
  }
  return table;
}

u64 zero_solution_count(unsigned k, u64 p, unsigned m) {
  check_k(k, {2, 3});
  if (!is_prime(p)) throw domain_error(std::to_string(p) + " is not prime");
  if (m < 1) throw domain_error("exponent m must be >= 1");
  return k == 2 ? ipow(p, m / 2) : ipow(p, (2 * m) / 3);
}

u64 zero_solution_count(unsigned k, u64 n) {
  if (n < 2) throw domain_error("modulus must be >= 2");
  u64 product = 1;
  for (const auto& [p, e] : factorize(n)) product *= zero_solution_count(k, p, e);
  return product;
}

u64 zero_solution_count_brute(unsigned k, u64 n) {
  if (n < 2) throw domain_error("modulus must be >= 2");
  const ModArith ring{n};
  u64 count = 0;
  for (u64 x = 0; x < n; ++x) count += ring.pow(x, k) == 0;
  return count;
}

}  // namespace zcc
