#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "zcc/cli.hpp"

namespace zcc::cli {

namespace {

u64 parse_u64(const std::string& token, const std::string& flag) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw usage_error(flag + ": expected a non-negative integer, got '" + token + "'");
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    throw usage_error(flag + ": value '" + token + "' is too large");
  }
}

struct RawArgs {
  std::string n, p, m, k, form, claim, out;
  std::string format = "csv";
  std::optional<u64> budget;
  unsigned workers = 1;
  bool gf2m = false, timing = false, verify_stabilizer = false;
  bool census = false, classify = false, residues = false, bounds = false;
};

void add_options(CLI::App* sub, RawArgs& raw, const std::set<std::string>& names) {
  auto want = [&](const char* name) { return names.count(name) != 0; };
  if (want("n")) sub->add_option("--n", raw.n, "Modulus: integer, a..b range or comma list");
  if (want("p")) sub->add_option("--p", raw.p, "Prime(s): integer, a..b range or comma list");
  if (want("m")) sub->add_option("--m", raw.m, "Exponent(s): integer, a..b range or comma list");
  if (want("k")) sub->add_option("--k", raw.k, "Residue power(s)");
  if (want("form")) sub->add_option("--form", raw.form, "Curve form: reduced|general");
  if (want("gf2m")) sub->add_flag("--gf2m", raw.gf2m, "Census over GF(2^m) for each --m");
  if (want("claim")) sub->add_option("--claim", raw.claim, "Claim id (see list-claims)");
  if (want("verify-stabilizer"))
    sub->add_flag("--verify-stabilizer", raw.verify_stabilizer, "Count each leader's stabilizer directly");
  if (want("timing")) sub->add_flag("--timing", raw.timing, "Fill the elapsed_ms column");
  if (want("export")) {
    sub->add_flag("--census", raw.census, "Export a census");
    sub->add_flag("--classify", raw.classify, "Export a classification");
    sub->add_flag("--residues", raw.residues, "Export residue occurrence tables");
    sub->add_flag("--bounds", raw.bounds, "Export lower/actual/upper bounds");
  }
  sub->add_option("--workers", raw.workers, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--budget", raw.budget, "Maximum tuple evaluations")->check(CLI::PositiveNumber);
  sub->add_option("--out", raw.out, "Output path (default: stdout)");
  sub->add_option("--format", raw.format, "csv|json");
}

std::vector<unsigned> to_unsigned(const std::vector<u64>& v, const std::string& flag) {
  std::vector<unsigned> out;
  for (u64 x : v) {
    if (x > 64) throw usage_error(flag + ": value " + std::to_string(x) + " is out of range");
    out.push_back(static_cast<unsigned>(x));
  }
  return out;
}

void require(bool present, const std::string& flag, const std::string& command) {
  if (!present) throw usage_error(command + " requires " + flag);
}

void forbid(bool present, const std::string& flag, const std::string& command) {
  if (present) throw usage_error(flag + " is not valid for " + command);
}

std::string known_claims() {
  std::string list;
  for (const auto& c : claim_registry()) list += (list.empty() ? "" : ", ") + c.id;
  return list;
}

void validate(RunConfig& c, const RawArgs& raw, Command as) {
  const bool has_n = !raw.n.empty(), has_p = !raw.p.empty(), has_m = !raw.m.empty();
  switch (as) {
    case Command::census:
      if (c.gf2m) {
        require(has_m, "--m", "census --gf2m");
        forbid(has_n, "--n", "census --gf2m");
        if (c.form_set && c.form == CurveForm::reduced)
          throw usage_error("--form reduced conflicts with --gf2m (GF(2^m) has only the general form)");
        for (unsigned m : c.exponents)
          if (m < 1 || m > 5) throw usage_error("--m: GF(2^m) census supports 1 <= m <= 5");
        c.form = CurveForm::general;
      } else {
        require(has_n, "--n", "census");
      }
      break;
    case Command::classify:
      require(has_n, "--n", "classify");
      break;
    case Command::residues:
      require(has_p, "--p", "residues");
      require(has_m, "--m", "residues");
      if (c.powers.empty()) c.powers = {2};
      for (unsigned k : c.powers)
        if (k != 2 && k != 3) throw usage_error("--k: occurrence tables support k in {2, 3}");
      break;
    case Command::bounds:
      require(has_p, "--p", "bounds");
      require(has_m, "--m", "bounds");
      break;
    case Command::verify: {
      if (!c.claim) break;
      auto id = canonical_claim(*c.claim);
      if (!id) throw usage_error("--claim: unknown claim '" + *c.claim + "'; known claims: " + known_claims());
      c.claim = *id;
      const auto& info = *std::find_if(claim_registry().begin(), claim_registry().end(),
                                       [&](const ClaimInfo& i) { return i.id == *id; });
      if (info.parameters != "n") forbid(has_n, "--n", "claim " + info.id);
      if (info.parameters != "pm") forbid(has_p, "--p", "claim " + info.id);
      if (info.parameters != "pm" && info.parameters != "m") forbid(has_m, "--m", "claim " + info.id);
      if (c.form_set && !info.form.empty() && info.form != to_string(c.form))
        throw usage_error("--form " + std::string(to_string(c.form)) + " conflicts with claim " +
                          info.id + " (" + info.form + " form)");
      break;
    }
    default:
      break;
  }
}

}  // namespace

std::vector<u64> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<u64> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t dots = token.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_u64(token, flag));
    } else {
      u64 lo = parse_u64(token.substr(0, dots), flag);
      u64 hi = parse_u64(token.substr(dots + 2), flag);
      if (lo > hi) throw usage_error(flag + ": malformed range '" + token + "'");
      if (hi - lo > 1'000'000) throw usage_error(flag + ": range '" + token + "' is too long");
      for (u64 v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

RunConfig parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"Census and isomorphism classification of Weierstrass curves over Z/n and GF(2^m)", "zcc"};
  app.require_subcommand(1, 1);
  RawArgs raw;

  auto* census = app.add_subcommand("census", "Count nonsingular curves");
  add_options(census, raw, {"n", "m", "form", "gf2m", "timing"});
  auto* classify = app.add_subcommand("classify", "Partition nonsingular curves into isomorphism classes");
  add_options(classify, raw, {"n", "form", "verify-stabilizer"});
  auto* residues = app.add_subcommand("residues", "Occurrence tables of k-th power residues mod p^m");
  add_options(residues, raw, {"p", "m", "k"});
  auto* bounds = app.add_subcommand("bounds", "Lower, actual and upper reduced counts over Z/p^m");
  add_options(bounds, raw, {"p", "m"});
  auto* verify = app.add_subcommand("verify", "Check claims against brute-force observation");
  add_options(verify, raw, {"n", "p", "m", "k", "form", "claim"});
  auto* exporter = app.add_subcommand("export", "Write a dataset");
  add_options(exporter, raw, {"n", "p", "m", "k", "form", "gf2m", "timing", "verify-stabilizer", "export"});
  auto* list = app.add_subcommand("list-claims", "List claim ids and statements");

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    throw help_requested(app.help());
  } catch (const CLI::ParseError& e) {
    throw usage_error(e.what());
  }

  RunConfig c;
  Command as;
  if (census->parsed()) c.command = as = Command::census;
  else if (classify->parsed()) c.command = as = Command::classify;
  else if (residues->parsed()) c.command = as = Command::residues;
  else if (bounds->parsed()) c.command = as = Command::bounds;
  else if (verify->parsed()) c.command = as = Command::verify;
  else if (list->parsed()) c.command = as = Command::list_claims;
  else {
    c.command = Command::export_data;
    int kinds = raw.census + raw.classify + raw.residues + raw.bounds;
    if (kinds != 1) throw usage_error("export requires exactly one of --census, --classify, --residues, --bounds");
    if (raw.census) c.export_kind = ExportKind::census, as = Command::census;
    if (raw.classify) c.export_kind = ExportKind::classify, as = Command::classify;
    if (raw.residues) c.export_kind = ExportKind::residues, as = Command::residues;
    if (raw.bounds) c.export_kind = ExportKind::bounds, as = Command::bounds;
  }

  if (!raw.n.empty()) {
    c.moduli = parse_int_list(raw.n, "--n");
    for (u64 n : c.moduli)
      if (n < 2 || n >= kMaxModulus)
        throw usage_error("--n: modulus " + std::to_string(n) + " is out of range (2 <= n < 2^32)");
  }
  if (!raw.p.empty()) {
    c.primes = parse_int_list(raw.p, "--p");
    for (u64 p : c.primes)
      if (!is_prime(p)) throw usage_error("--p: " + std::to_string(p) + " is not prime");
  }
  if (!raw.m.empty()) {
    c.exponents = to_unsigned(parse_int_list(raw.m, "--m"), "--m");
    for (unsigned m : c.exponents)
      if (m < 1) throw usage_error("--m: exponent must be >= 1");
  }
  if (!raw.k.empty()) c.powers = to_unsigned(parse_int_list(raw.k, "--k"), "--k");
  if (!raw.form.empty()) {
    if (raw.form == "reduced") c.form = CurveForm::reduced;
    else if (raw.form == "general") c.form = CurveForm::general;
    else throw usage_error("--form: expected reduced or general, got '" + raw.form + "'");
    c.form_set = true;
  }
  if (raw.format == "csv") c.format = Format::csv;
  else if (raw.format == "json") c.format = Format::json;
  else throw usage_error("--format: expected csv or json, got '" + raw.format + "'");

  if (const char* env = std::getenv("ZCC_BUDGET")) {
    c.budget = parse_u64(env, "ZCC_BUDGET");
    if (c.budget == 0) throw usage_error("ZCC_BUDGET must be positive");
  }
  if (raw.budget) c.budget = *raw.budget;
  c.workers = raw.workers;
  c.gf2m = raw.gf2m;
  c.timing = raw.timing;
  c.verify_stabilizer = raw.verify_stabilizer;
  if (!raw.out.empty()) c.out_path = raw.out;
  if (!raw.claim.empty()) c.claim = raw.claim;

  validate(c, raw, as);
  return c;
}

}  // namespace zcc::cli
