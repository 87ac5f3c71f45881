// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zcc/classify.hpp"
#include "zcc/cli.hpp"
#include "zcc/points.hpp"
#include "zcc/residues.hpp"
#include "zcc/transform.hpp"

using namespace zcc;
using Row = std::vector<std::string>;

namespace {

struct Run {
  int code;
  std::string out;
  double seconds;
};

Run zcc_run(std::vector<std::string> argv, unsigned workers) {
  argv.push_back("--workers");
  argv.push_back(std::to_string(workers));
  std::ostringstream out, err;
  auto start = std::chrono::steady_clock::now();
  int code = cli::main_entry(argv, out, err);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (code != 0) std::cerr << "zcc exited with " << code << ": " << err.str();
  return {code, out.str(), seconds};
}

// CSV body rows (header dropped), honouring double-quoted fields.
std::vector<Row> csv(const std::string& text) {
  std::vector<Row> rows;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.rfind("CONJ ", 0) == 0) continue;
    Row row(1);
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"') quoted = !quoted;
      else if (ch == ',' && !quoted) row.emplace_back();
      else row.back() += ch;
    }
    rows.push_back(row);
  }
  return rows;
}

u64 num(const std::string& s) { return std::stoull(s); }

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (notes.size() < 5) notes.push_back(what);
    }
  }
  void within(double seconds, double limit, const std::string& what) {
    std::ostringstream s;
    s << what << " took " << seconds << " s (limit " << limit << " s)";
    require(seconds < limit, s.str());
  }
};

const std::vector<u64> kReducedN{5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 35, 37, 41, 43, 47, 49, 53, 55, 59};
const std::vector<u64> kNR{20, 42, 110, 156, 272, 342, 506, 500, 812, 930, 840, 1332, 1640, 1806, 2162, 2058, 2756, 2200, 3422};
const std::vector<u64> kCR{12, 18, 22, 32, 36, 42, 46, 52, 60, 66, 216, 80, 84, 90, 94, 102, 108, 264, 118};
const std::vector<u64> kNG{16,     162,    512,    2500,   2592,    14406,   16384,  39366,   40000,  146410,
                           82944,  342732, 230496, 405000, 524288,  1336336, 629856, 2345778, 1280000};
const std::vector<u64> kCG{5, 8, 8, 12, 40, 18, 16, 18, 60, 22, 64, 32, 90, 96, 32, 36, 90, 42, 96};
const std::vector<u64> kGF{16, 768, 28672, 983040, 32505856};

std::string join(const std::vector<u64>& v) {
  std::string s;
  for (u64 x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

// The commands behind criteria 1-7, replayed for criterion 9.
std::vector<std::vector<std::string>> commands() {
  return {
      {"census", "--form", "reduced", "--n", join(kReducedN)},
      {"census", "--form", "general", "--n", "2..20"},
      {"census", "--gf2m", "--m", "1..5"},
      {"classify", "--form", "reduced", "--n", join(kReducedN)},
      {"classify", "--form", "general", "--n", "2..20"},
      {"export", "--classify", "--form", "reduced", "--n", "5"},
      {"bounds", "--p", "5,7", "--m", "1..3"},
      {"residues", "--p", "5", "--m", "2,5", "--k", "2"},
  };
}

std::vector<Classification> g_classes;

void criterion1(Criterion& c, const Run& r) {
  auto rows = csv(r.out);
  c.require(r.code == 0 && rows.size() == kReducedN.size(), "expected 19 rows");
  for (std::size_t i = 0; i < rows.size() && i < kReducedN.size(); ++i) {
    c.require(num(rows[i][0]) == kReducedN[i] && rows[i][1] == "reduced", "row order");
    c.require(num(rows[i][3]) == kNR[i], "n=" + rows[i][0] + " nonsingular=" + rows[i][3]);
  }
  c.within(r.seconds, 1.0, "census");
}

void criterion2(Criterion& c, const Run& r) {
  auto rows = csv(r.out);
  c.require(r.code == 0 && rows.size() == 19, "expected 19 rows");
  for (std::size_t i = 0; i < rows.size() && i < 19; ++i) {
    u64 n = i + 2;
    c.require(num(rows[i][0]) == n && rows[i][1] == "general", "row order");
    c.require(num(rows[i][3]) == kNG[i], "n=" + rows[i][0] + " nonsingular=" + rows[i][3]);
    c.require(num(rows[i][3]) == oracle::phi(n) * oracle::power(n, 4), "phi(n^5) at n=" + rows[i][0]);
  }
  c.within(r.seconds, 120.0, "census");
}

void criterion3(Criterion& c, const Run& r) {
  auto rows = csv(r.out);
  c.require(r.code == 0 && rows.size() == 5, "expected 5 rows");
  for (std::size_t i = 0; i < rows.size() && i < 5; ++i) {
    u64 q = u64{1} << (i + 1);
    c.require(num(rows[i][0]) == q && rows[i][1] == "gf2m-general", "row order");
    c.require(num(rows[i][3]) == kGF[i], "m=" + std::to_string(i + 1) + " nonsingular=" + rows[i][3]);
    c.require(num(rows[i][3]) == oracle::power(q, 5) - oracle::power(q, 4), "q^5 - q^4");
  }
  c.within(r.seconds, 60.0, "census");
}

std::map<u64, u64> classes_per_n(const std::string& out) {
  std::map<u64, u64> count;
  for (const auto& row : csv(out)) ++count[num(row[2])];
  return count;
}

void criterion4(Criterion& c, const Run& reduced, const Run& general) {
  c.require(reduced.code == 0 && general.code == 0, "classify failed");
  auto r = classes_per_n(reduced.out);
  for (std::size_t i = 0; i < kReducedN.size(); ++i)
    c.require(r[kReducedN[i]] == kCR[i], "reduced n=" + std::to_string(kReducedN[i]) + " classes=" +
                                             std::to_string(r[kReducedN[i]]));
  auto g = classes_per_n(general.out);
  for (u64 n = 2; n <= 20; ++n)
    c.require(g[n] == kCG[n - 2], "general n=" + std::to_string(n) + " classes=" + std::to_string(g[n]));
  c.within(reduced.seconds, 5.0, "reduced classification");
  c.within(general.seconds, 180.0, "general classification");
}

void criterion5(Criterion& c, const Run& r) {
  const std::vector<Row> expected{
      {"1", "reduced", "5", "0,1", "2", "2", "5"},  {"2", "reduced", "5", "0,2", "2", "2", "5"},
      {"3", "reduced", "5", "1,0", "1", "4", "3"},  {"4", "reduced", "5", "1,1", "2", "2", "8"},
      {"5", "reduced", "5", "1,2", "2", "2", "3"},  {"6", "reduced", "5", "2,0", "1", "4", "1"},
      {"7", "reduced", "5", "2,1", "2", "2", "6"},  {"8", "reduced", "5", "3,0", "1", "4", "9"},
      {"9", "reduced", "5", "3,2", "2", "2", "4"},  {"10", "reduced", "5", "4,0", "1", "4", "7"},
      {"11", "reduced", "5", "4,1", "2", "2", "7"}, {"12", "reduced", "5", "4,2", "2", "2", "2"},
  };
  c.require(r.code == 0, "export failed");
  c.require(r.out.rfind("class_id,form,n,leader,class_size,aut_order,point_count\n", 0) == 0, "header");
  c.require(csv(r.out) == expected, "rows differ");
}

void criterion6(Criterion& c, const Run& r) {
  const std::vector<Row> expected{
      {"5", "1", "5", "20", "20"},       {"5", "2", "125", "500", "580"},       {"5", "3", "3125", "12500", "15400"},
      {"7", "1", "7", "42", "42"},       {"7", "2", "343", "2058", "2310"},     {"7", "3", "16807", "100842", "117012"},
  };
  c.require(r.code == 0, "bounds failed");
  c.require(csv(r.out) == expected, "rows differ");
  c.within(r.seconds, 120.0, "bounds");
}

void criterion7(Criterion& c, const Run& r) {
  const std::vector<Row> expected{
      {"5", "2", "2", "2", "10", "10"},  {"5", "2", "2", "zero_solutions", "5", ""},
      {"5", "5", "2", "2", "1250", "1250"}, {"5", "5", "2", "10", "50", "0"},
      {"5", "5", "2", "50", "2", "0"},   {"5", "5", "2", "zero_solutions", "25", ""},
  };
  c.require(r.code == 0, "residues failed");
  c.require(csv(r.out) == expected, "rows differ");
  c.require(residue_set(2, Residue(6, 25)) == std::vector<u64>{9, 16}, "square roots of 6 mod 25");
  c.within(r.seconds, 1.0, "residues");
}

void criterion8(Criterion& c) {
  // Orbit-stabilizer on every class from the classification runs.
  for (const auto& k : g_classes)
    for (const auto& cls : k.classes)
      c.require(cls.class_size * cls.aut_order == k.group_order,
                "orbit-stabilizer at n=" + std::to_string(k.modulus) + " leader " + to_literal(cls.leader));
  for (u64 n = 2; n <= 20; ++n)
    for (const auto& k : g_classes)
      if (k.modulus == n && k.form == CurveForm::general)
        c.require(k.group_order == oracle::phi(n) * oracle::power(n, 3), "general group order");

  // Every curve and every one of the 500 changes over Z/5.
  std::vector<AdmissibleChange> group;
  for (i64 u = 1; u < 5; ++u)
    for (i64 r = 0; r < 5; ++r)
      for (i64 s = 0; s < 5; ++s)
        for (i64 t = 0; t < 5; ++t) group.emplace_back(5, u, r, s, t);
  c.require(group.size() == 500, "group size");
  for (u64 i = 0; i < 3125; ++i) {
    GeneralCurve e = GeneralCurve::from_normalized(5, {i / 625 % 5, i / 125 % 5, i / 25 % 5, i / 5 % 5, i % 5});
    auto before = invariants_general(e);
    std::vector<std::array<u64, 2>> points;
    for (u64 x = 0; x < 5; ++x)
      for (u64 y = 0; y < 5; ++y)
        if (oracle::mod(oracle::equation(e.coefficients(), x, y), 5) == 0) points.push_back({x, y});
    for (const auto& tau : group) {
      auto image = apply_general(tau, e);
      auto after = invariants_general(image);
      Residue ui = inverse(tau.u());
      c.require(after.delta == ui.pow(12) * before.delta, "delta covariance");
      c.require(after.j == before.j, "j invariance");
      // Points of the image pull back onto points of e, injectively.
      std::set<std::array<u64, 2>> mapped;
      for (u64 x = 0; x < 5; ++x)
        for (u64 y = 0; y < 5; ++y)
          if (oracle::mod(oracle::equation(image.coefficients(), x, y), 5) == 0) mapped.insert(tau.pull_back(x, y));
      c.require(mapped == std::set<std::array<u64, 2>>(points.begin(), points.end()), "point bijection");
    }
  }

  // CRT multiplicativity for every coprime split a * b <= 50.
  std::map<u64, u64> reduced, general;
  CensusOptions big{1, 400'000'000};
  for (u64 n = 2; n <= 50; ++n) {
    general[n] = count_nonsingular_general(n, big).nonsingular_count;
    if (std::gcd(n, u64{6}) == 1) reduced[n] = count_nonsingular_reduced(n).nonsingular_count;
  }
  for (u64 a = 2; a <= 25; ++a)
    for (u64 b = a + 1; a * b <= 50; ++b) {
      if (std::gcd(a, b) != 1) continue;
      c.require(general[a * b] == general[a] * general[b], "general census at " + std::to_string(a * b));
      if (reduced.count(a * b))
        c.require(reduced[a * b] == reduced[a] * reduced[b], "reduced census at " + std::to_string(a * b));
    }

  // Closed forms against scans for every prime power up to 10^5.
  for (u64 p = 2; p <= 100000; ++p) {
    if (!oracle::prime(p)) continue;
    for (unsigned m = 1; oracle::power(p, m) <= 100000; ++m) {
      const u64 n = oracle::power(p, m);
      for (unsigned k : {2u, 3u}) {
        c.require(zero_solution_count(k, p, m) == zero_solution_count_brute(k, n),
                  "zero solutions k=" + std::to_string(k) + " n=" + std::to_string(n));
      }
      if (p > 2) c.require(residue_count(2, p, m) == residue_count_brute(2, n), "squares mod " + std::to_string(n));
      if (p > 3)
        for (unsigned k : {3u, 6u})
          c.require(residue_count(k, p, m) == residue_count_brute(k, n),
                    "power " + std::to_string(k) + " residues mod " + std::to_string(n));
    }
  }

  // x^k = u is solvable over F_p iff u^((p-1)/gcd(k, p-1)) = 1.
  for (u64 p = 5; p <= 53; ++p) {
    if (!oracle::prime(p)) continue;
    for (unsigned k : {2u, 3u, 4u, 6u}) {
      const u64 d = std::gcd(u64{k}, p - 1);
      for (u64 u = 1; u < p; ++u) {
        auto roots = residue_set(k, Residue(static_cast<i64>(u), p));
        bool euler = oracle::powmod(u, (p - 1) / d, p) == 1;
        c.require(roots.empty() != euler, "solvability p=" + std::to_string(p) + " k=" + std::to_string(k));
        c.require(roots.empty() || roots.size() == d, "root count");
      }
    }
  }
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  auto report = [&](Criterion& c, double seconds) {
    std::cout << std::fixed << std::setprecision(3) << "[" << c.id << "] " << c.title << ": " << (c.pass ? "PASS" : "FAIL") << " (" << seconds << " s)";
    for (const auto& n : c.notes) std::cout << "\n    " << n;
    std::cout << std::endl;
    results.push_back(c);
  };
  // Seconds already spent in the zcc runs a criterion checks are added to its total.
  auto timed = [&](int id, std::string title, const std::function<void(Criterion&)>& body, double prior = 0) {
    Criterion c{id, std::move(title)};
    auto start = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    report(c, prior + std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  };

  auto cmds = commands();
  std::vector<Run> runs;
  for (const auto& argv : cmds) runs.push_back(zcc_run(argv, 1));

  timed(1, "reduced census for n <= 59 coprime to 6", [&](Criterion& c) { criterion1(c, runs[0]); }, runs[0].seconds);
  timed(2, "general census for n = 2..20 equals phi(n^5)", [&](Criterion& c) { criterion2(c, runs[1]); }, runs[1].seconds);
  timed(3, "GF(2^m) census for m = 1..5", [&](Criterion& c) { criterion3(c, runs[2]); }, runs[2].seconds);
  timed(4, "class counts, reduced n <= 59 and general n <= 20",
        [&](Criterion& c) { criterion4(c, runs[3], runs[4]); }, runs[3].seconds + runs[4].seconds);
  timed(5, "reduced classes over Z/5 row for row", [&](Criterion& c) { criterion5(c, runs[5]); }, runs[5].seconds);
  timed(6, "reduced census bounds for p in {5, 7}, m = 1..3", [&](Criterion& c) { criterion6(c, runs[6]); }, runs[6].seconds);
  timed(7, "square occurrence tables mod 25 and 3125", [&](Criterion& c) { criterion7(c, runs[7]); }, runs[7].seconds);
  timed(8, "property suite", [&](Criterion& c) {
    for (u64 n : kReducedN) g_classes.push_back(classify_reduced(n));
    for (u64 n = 2; n <= 20; ++n) g_classes.push_back(classify_general(n));
    criterion8(c);
  });
  timed(9, "byte-identical output for 1, 2 and 8 workers", [&](Criterion& c) {
    for (std::size_t i = 0; i < cmds.size(); ++i)
      for (unsigned w : {2u, 8u}) {
        auto again = zcc_run(cmds[i], w);
        c.require(again.code == runs[i].code && again.out == runs[i].out,
                  cmds[i][0] + " " + cmds[i][cmds[i].size() - 1] + " with " + std::to_string(w) + " workers");
      }
  });

  bool all = true;
  for (const auto& c : results) all = all && c.pass;
  std::cout << (all ? "ALL PASS" : "SOME FAILED") << std::endl;
  return all ? 0 : 1;
}
