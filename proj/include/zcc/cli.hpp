#pragma once

/**
 * @file cli.hpp
 * @brief Command-line surface: argument parsing, claim verification, export.
 *
 * Exit codes: 0 success, 1 at least one FALSIFIED verdict, 2 usage error,
 * 3 any other error (domain, resource, i/o).
 */

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zcc/enumerate.hpp"
#include "zcc/report.hpp"

namespace zcc::cli {

enum class Command { census, classify, residues, bounds, verify, export_data, list_claims };
enum class Format { csv, json };
enum class ExportKind { census, classify, residues, bounds };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitError = 3;

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; what() is the help text.
class help_requested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::census;
  /// --n, expanded and in the order given.
  std::vector<u64> moduli;
  std::vector<u64> primes;
  std::vector<unsigned> exponents;
  std::vector<unsigned> powers;
  CurveForm form = CurveForm::reduced;
  /// True when --form was given explicitly.
  bool form_set = false;
  /// census over GF(2^m) for each --m instead of Z/n.
  bool gf2m = false;
  unsigned workers = 1;
  u64 budget = kDefaultBudget;
  std::optional<std::string> out_path;
  Format format = Format::csv;
  std::optional<std::string> claim;
  std::optional<ExportKind> export_kind;
  bool timing = false;
  bool verify_stabilizer = false;
};

/// Parses "7", "2..20" or "5,7,11..13" into the listed integers.
std::vector<u64> parse_int_list(const std::string& text, const std::string& flag);

/// argv excludes the program name. The budget defaults to ZCC_BUDGET when
/// set, and --budget overrides both.
RunConfig parse_args(const std::vector<std::string>& argv);

struct ClaimInfo {
  std::string id;
  /// The statement under test.
  std::string statement;
  /// "n" for claims parameterized by --n, "pm" for --p/--m, "m" for --m alone,
  /// "none" for fixed tables.
  std::string parameters;
  /// "reduced" or "general" when the claim is about one form, else empty.
  std::string form;
};

const std::vector<ClaimInfo>& claim_registry();

/// Canonical id for `id`, accepting aliases; nullopt when unknown.
std::optional<std::string> canonical_claim(const std::string& id);

VerdictReport run_verify(const RunConfig& config);

/// Writes the artifact selected by config.export_kind (or by the command).
void run_export(const RunConfig& config, std::ostream& out);

/// Executes a parsed config; returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with usage and error reporting.
int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace zcc::cli
