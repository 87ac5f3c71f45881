#include "zcc/report.hpp"

#include <json.hpp>

namespace zcc {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string form_name(const Classification& c) { return std::string(to_string(c.form)); }

std::string conjecture_name(unsigned k) { return k == 2 ? "QR_OCC" : "CR_OCC"; }

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "VERIFIED";
    case Verdict::falsified: return "FALSIFIED";
    case Verdict::skipped: return "SKIPPED";
  }
  return "?";
}

bool VerdictReport::any_falsified() const {
  for (const auto& r : records)
    if (r.verdict == Verdict::falsified) return true;
  return false;
}

CensusRow to_row(const CensusResult& r) {
  return {r.modulus, std::string(to_string(r.form)), r.total_tuples, r.nonsingular_count,
          r.predicted_count, r.elapsed};
}

void write_census_csv(std::ostream& out, std::span<const CensusRow> rows, bool include_timing) {
  out << "n,form,total,nonsingular,predicted,elapsed_ms\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.form << ',' << r.total << ',' << r.nonsingular << ',';
    if (r.predicted) out << *r.predicted;
    out << ',';
    if (include_timing) out << r.elapsed.count();
    out << '\n';
  }
}

void write_census_json(std::ostream& out, std::span<const CensusRow> rows, bool include_timing) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json row;
    row["n"] = r.n;
    row["form"] = r.form;
    row["total"] = r.total;
    row["nonsingular"] = r.nonsingular;
    row["predicted"] = r.predicted ? ordered_json(*r.predicted) : ordered_json(nullptr);
    row["elapsed_ms"] = include_timing ? ordered_json(r.elapsed.count()) : ordered_json(nullptr);
    arr.push_back(std::move(row));
  }
  out << arr.dump(2) << '\n';
}

void write_classification_csv(std::ostream& out, std::span<const Classification> cs) {
  out << "class_id,form,n,leader,class_size,aut_order,point_count\n";
  for (const auto& c : cs) {
    u64 id = 1;
    for (const auto& cls : c.classes) {
      out << id++ << ',' << form_name(c) << ',' << c.modulus << ',' << csv_field(to_literal(cls.leader))
          << ',' << cls.class_size << ',' << cls.aut_order << ',' << cls.point_count << '\n';
    }
  }
}

void write_classification_json(std::ostream& out, std::span<const Classification> cs) {
  ordered_json docs = ordered_json::array();
  for (const auto& c : cs) {
    ordered_json doc;
    doc["n"] = c.modulus;
    doc["form"] = form_name(c);
    doc["class_count"] = c.class_count();
    ordered_json classes = ordered_json::array();
    u64 id = 1;
    for (const auto& cls : c.classes) {
      ordered_json row;
      row["class_id"] = id++;
      row["form"] = form_name(c);
      row["n"] = c.modulus;
      row["leader"] = to_literal(cls.leader);
      row["class_size"] = cls.class_size;
      row["aut_order"] = cls.aut_order;
      row["point_count"] = cls.point_count;
      classes.push_back(std::move(row));
    }
    doc["classes"] = std::move(classes);
    docs.push_back(std::move(doc));
  }
  out << (docs.size() == 1 ? docs[0] : docs).dump(2) << '\n';
}

void write_bounds_csv(std::ostream& out, std::span<const ReducedBounds> rows) {
  out << "p,m,lower,actual,upper\n";
  for (const auto& r : rows)
    out << r.p << ',' << r.m << ',' << r.lower << ',' << r.actual << ',' << r.upper << '\n';
}

void write_bounds_json(std::ostream& out, std::span<const ReducedBounds> rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows)
    arr.push_back({{"p", r.p}, {"m", r.m}, {"lower", r.lower}, {"actual", r.actual}, {"upper", r.upper}});
  out << arr.dump(2) << '\n';
}

void write_residues_csv(std::ostream& out, std::span<const ResidueClassTable> tables) {
  out << "p,m,k,occurrence,count,unit_count\n";
  for (const auto& t : tables) {
    for (const auto& [occurrence, count] : t.entries) {
      auto it = t.unit_entries.find(occurrence);
      out << t.p << ',' << t.m << ',' << t.k << ',' << occurrence << ',' << count << ','
          << (it == t.unit_entries.end() ? 0 : it->second) << '\n';
    }
    out << t.p << ',' << t.m << ',' << t.k << ",zero_solutions," << t.zero_solutions << ",\n";
  }
}

void write_residues_json(std::ostream& out, std::span<const ResidueClassTable> tables) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : tables) {
    ordered_json row;
    row["p"] = t.p;
    row["m"] = t.m;
    row["k"] = t.k;
    row["modulus"] = t.modulus;
    ordered_json entries = ordered_json::array();
    for (const auto& [occurrence, count] : t.entries) {
      auto it = t.unit_entries.find(occurrence);
      entries.push_back({{"occurrence", occurrence},
                         {"count", count},
                         {"unit_count", it == t.unit_entries.end() ? 0 : it->second}});
    }
    row["entries"] = std::move(entries);
    row["zero_solutions"] = t.zero_solutions;
    row["conjectured"] = t.conjectured;
    row["conjecture_holds"] = t.conjecture_holds();
    arr.push_back(std::move(row));
  }
  out << arr.dump(2) << '\n';
}

void write_conjecture_lines(std::ostream& out, std::span<const ResidueClassTable> tables) {
  for (const auto& t : tables)
    out << "CONJ " << conjecture_name(t.k) << " p=" << t.p << " m=" << t.m << ' '
        << (t.conjecture_holds() ? "VERIFIED" : "FALSIFIED") << '\n';
}

void write_verdicts_text(std::ostream& out, const VerdictReport& report) {
  for (const auto& r : report.records) {
    out << r.claim_id << ' ' << r.parameters << " predicted=" << r.predicted
        << " observed=" << r.observed << ' ' << to_string(r.verdict);
    if (!r.reason.empty()) out << " (" << r.reason << ')';
    out << '\n';
  }
}

void write_verdicts_csv(std::ostream& out, const VerdictReport& report) {
  out << "claim_id,parameters,predicted,observed,verdict,reason\n";
  for (const auto& r : report.records)
    out << r.claim_id << ',' << csv_field(r.parameters) << ',' << csv_field(r.predicted) << ','
        << csv_field(r.observed) << ',' << to_string(r.verdict) << ',' << csv_field(r.reason) << '\n';
}

void write_verdicts_json(std::ostream& out, const VerdictReport& report) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : report.records)
    arr.push_back({{"claim_id", r.claim_id},
                   {"parameters", r.parameters},
                   {"predicted", r.predicted},
                   {"observed", r.observed},
                   {"verdict", to_string(r.verdict)},
                   {"reason", r.reason}});
  out << arr.dump(2) << '\n';
}

}  // namespace zcc
