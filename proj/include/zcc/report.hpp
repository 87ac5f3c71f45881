#pragma once

// CSV and JSON serialization of censuses, classifications, bounds, residue
// tables and verdicts. Output is a pure function of the inputs: no
// timestamps, no locale, fixed column order.

#include <chrono>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "zcc/classify.hpp"
#include "zcc/enumerate.hpp"
#include "zcc/residues.hpp"

namespace zcc {

enum class Verdict { verified, falsified, skipped };

std::string_view to_string(Verdict v);

struct VerdictRecord {
  std::string claim_id;
  /// e.g. "n=35" or "p=5 m=2"
  std::string parameters;
  std::string predicted;
  std::string observed;
  Verdict verdict;
  /// Why a claim was skipped; empty otherwise.
  std::string reason;
};

struct VerdictReport {
  std::vector<VerdictRecord> records;
  bool any_falsified() const;
};

/// One census line. form is "reduced", "general" or "gf2m-general" (n = 2^m).
struct CensusRow {
  u64 n;
  std::string form;
  u64 total;
  u64 nonsingular;
  std::optional<u64> predicted;
  std::chrono::milliseconds elapsed;
};

CensusRow to_row(const CensusResult& r);

/// elapsed_ms is left empty unless include_timing is set, so repeated
/// exports stay byte-identical.
void write_census_csv(std::ostream& out, std::span<const CensusRow> rows, bool include_timing);
void write_census_json(std::ostream& out, std::span<const CensusRow> rows, bool include_timing);

/// Leaders contain commas and are written as quoted CSV fields. One header,
/// class ids restart at 1 for each modulus.
void write_classification_csv(std::ostream& out, std::span<const Classification> cs);
/// A single envelope {n, form, class_count, classes} for one classification,
/// an array of envelopes for several.
void write_classification_json(std::ostream& out, std::span<const Classification> cs);

void write_bounds_csv(std::ostream& out, std::span<const ReducedBounds> rows);
void write_bounds_json(std::ostream& out, std::span<const ReducedBounds> rows);

/// Columns p,m,k,occurrence,count,unit_count, then one zero_solutions row per table.
void write_residues_csv(std::ostream& out, std::span<const ResidueClassTable> tables);
void write_residues_json(std::ostream& out, std::span<const ResidueClassTable> tables);
/// "CONJ <name> p=<p> m=<m> VERIFIED|FALSIFIED"
void write_conjecture_lines(std::ostream& out, std::span<const ResidueClassTable> tables);

void write_verdicts_text(std::ostream& out, const VerdictReport& report);
void write_verdicts_csv(std::ostream& out, const VerdictReport& report);
void write_verdicts_json(std::ostream& out, const VerdictReport& report);

}  // namespace zcc
