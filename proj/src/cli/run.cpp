#include <fstream>
#include <numeric>
#include <sstream>

#include "zcc/classify.hpp"
#include "zcc/cli.hpp"
#include "zcc/gf2m.hpp"
#include "zcc/residues.hpp"

namespace zcc::cli {

namespace {

/// Moduli usable for the reduced form. A list of several silently drops n
/// with gcd(n, 6) != 1 (so ranges like 5..59 work); a single such n is an error.
std::vector<u64> reduced_moduli(const RunConfig& c) {
  if (c.moduli.size() == 1) return c.moduli;
  std::vector<u64> out;
  for (u64 n : c.moduli)
    if (std::gcd(n, u64{6}) == 1) out.push_back(n);
  return out;
}

std::vector<CensusRow> census_rows(const RunConfig& c) {
  std::vector<CensusRow> rows;
  const CensusOptions opts{c.workers, c.budget};
  if (c.gf2m) {
    for (unsigned m : c.exponents) {
      const u64 q = u64{1} << m;
      if (ipow(q, 5) > c.budget) throw resource_error("GF(2^m) census", ipow(q, 5), c.budget);
      auto start = std::chrono::steady_clock::now();
      u64 count = count_nonsingular_general_gf2m(m, c.workers);
      auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      rows.push_back({q, "gf2m-general", ipow(q, 5), count, ipow(q, 5) - ipow(q, 4), elapsed});
    }
    return rows;
  }
  if (c.form == CurveForm::reduced) {
    for (u64 n : reduced_moduli(c)) rows.push_back(to_row(count_nonsingular_reduced(n, opts)));
  } else {
    for (u64 n : c.moduli) rows.push_back(to_row(count_nonsingular_general(n, opts)));
  }
  return rows;
}

std::vector<Classification> classifications(const RunConfig& c) {
  const ClassifyOptions opts{c.workers, c.budget, c.verify_stabilizer};
  std::vector<Classification> out;
  if (c.form == CurveForm::reduced) {
    for (u64 n : reduced_moduli(c)) out.push_back(classify_reduced(n, opts));
  } else {
    for (u64 n : c.moduli) out.push_back(classify_general(n, opts));
  }
  return out;
}

std::vector<ResidueClassTable> residue_tables(const RunConfig& c) {
  std::vector<ResidueClassTable> out;
  for (unsigned k : c.powers)
    for (u64 p : c.primes)
      for (unsigned m : c.exponents) out.push_back(occurrence_classes(k, p, m, c.workers));
  return out;
}

std::vector<ReducedBounds> bounds_rows(const RunConfig& c) {
  std::vector<ReducedBounds> out;
  for (u64 p : c.primes)
    for (unsigned m : c.exponents) out.push_back(reduced_bounds(p, m, {c.workers, c.budget}));
  return out;
}

/// Renders into memory first so a failing computation leaves no partial file.
void emit(const RunConfig& c, std::ostream& stdout_stream, const std::string& text) {
  if (!c.out_path) {
    stdout_stream << text;
    return;
  }
  std::ofstream file(*c.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + *c.out_path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw std::runtime_error("failed writing '" + *c.out_path + "'");
}

ExportKind kind_of(const RunConfig& c) {
  if (c.export_kind) return *c.export_kind;
  switch (c.command) {
    case Command::classify: return ExportKind::classify;
    case Command::residues: return ExportKind::residues;
    case Command::bounds: return ExportKind::bounds;
    default: return ExportKind::census;
  }
}

std::string render(const RunConfig& c, std::vector<ResidueClassTable>* tables_out) {
  std::ostringstream out;
  const bool json = c.format == Format::json;
  switch (kind_of(c)) {
    case ExportKind::census: {
      auto rows = census_rows(c);
      json ? write_census_json(out, rows, c.timing) : write_census_csv(out, rows, c.timing);
      break;
    }
    case ExportKind::classify: {
      auto cs = classifications(c);
      json ? write_classification_json(out, cs) : write_classification_csv(out, cs);
      break;
    }
    case ExportKind::residues: {
      auto tables = residue_tables(c);
      json ? write_residues_json(out, tables) : write_residues_csv(out, tables);
      if (tables_out) *tables_out = std::move(tables);
      break;
    }
    case ExportKind::bounds: {
      auto rows = bounds_rows(c);
      json ? write_bounds_json(out, rows) : write_bounds_csv(out, rows);
      break;
    }
  }
  return out.str();
}

}  // namespace

void run_export(const RunConfig& config, std::ostream& out) { emit(config, out, render(config, nullptr)); }

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::list_claims:
      for (const auto& c : claim_registry())
        out << c.id << '\t' << (c.parameters == "pm" ? "--p --m" : c.parameters == "n" ? "--n"
                                : c.parameters == "m"                                  ? "--m"
                                                                                       : "-")
            << '\t' << c.statement << '\n';
      return kExitOk;
    case Command::verify: {
      auto report = run_verify(config);
      write_verdicts_text(out, report);
      if (config.out_path) {
        std::ostringstream text;
        config.format == Format::json ? write_verdicts_json(text, report) : write_verdicts_csv(text, report);
        emit(config, out, text.str());
      }
      return report.any_falsified() ? kExitFalsified : kExitOk;
    }
    case Command::residues: {
      std::vector<ResidueClassTable> tables;
      emit(config, out, render(config, &tables));
      write_conjecture_lines(out, tables);
      for (const auto& t : tables)
        if (!t.conjecture_holds()) return kExitFalsified;
      return kExitOk;
    }
    case Command::export_data:
      run_export(config, out);
      return kExitOk;
    default:
      if (config.moduli.size() > 1 && config.form == CurveForm::reduced && !config.gf2m) {
        auto kept = reduced_moduli(config).size();
        if (kept != config.moduli.size())
          err << "note: skipped " << config.moduli.size() - kept
              << " moduli with gcd(n, 6) != 1 (reduced form)\n";
      }
      emit(config, out, render(config, nullptr));
      return kExitOk;
  }
}

int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(argv);
  } catch (const help_requested& h) {
    out << h.what();
    return kExitOk;
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    return run(config, out, err);
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace zcc::cli
