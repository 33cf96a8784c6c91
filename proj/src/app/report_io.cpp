#include "bentcode/app/report_io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace bentcode {

using nlohmann::json;

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  throw std::invalid_argument("unknown format '" + s + "'");
}

namespace {

json distribution_json(const WeightDistribution& d) {
  json out = json::array();
  for (const auto& [w, c] : d) out.push_back({w, c});
  return out;
}

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json structure_json(const StructureChecks& s) {
  json j{{"parseval", s.parseval},
         {"dual_at_zero", opt(s.dual_at_zero)},
         {"dual_even", opt(s.dual_even)},
         {"type_parity", opt(s.type_parity)},
         {"symmetric", opt(s.symmetric)},
         {"involution", opt(s.involution)},
         {"s0_minus_s1", opt(s.s0_s1)},
         {"ok", s.ok()}};
  if (s.coset) {
    const auto& c = *s.coset;
    j["coset"] = {{"ok", c.ok},
                  {"side", to_string(c.side)},
                  {"i_plus", c.i_plus},
                  {"i_minus", c.i_minus},
                  {"constant_side", to_string(c.constant_side)},
                  {"expected_index_size", c.expected_index_size},
                  {"matching_dual_size", c.matching_dual_size},
                  {"unions", c.unions_hold},
                  {"constant", c.constant_holds},
                  {"failures", c.failures}};
  } else {
    j["coset"] = nullptr;
  }
  return j;
}

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "NO") : "-"; }

}  // namespace

json to_json(const TheoremPrediction& p) {
  return {{"case", to_string(p.kase)},
          {"n", p.n},
          {"r", p.r},
          {"length", p.length},
          {"dimension", p.dimension},
          {"weights", p.weights},
          {"multiplicities", p.multiplicities},
          {"distribution", distribution_json(p.distribution())},
          {"enumerator", p.enumerator()}};
}

json to_json(const PipelineReport& r) {
  json j;
  j["name"] = r.name;
  j["n"] = r.n;
  j["bent"] = r.bent;
  if (!r.bent) j["not_bent"] = r.not_bent;
  j["type"] = r.type ? json(to_string(*r.type)) : json(nullptr);
  j["regularity"] = r.regularity ? json(to_string(*r.regularity)) : json(nullptr);
  j["b_plus_size"] = r.b_plus;
  j["b_minus_size"] = r.b_minus;
  j["j0"] = r.j0;
  j["dual_bent"] = r.dual_bent;
  j["r"] = opt(r.r);
  j["subspace"] = r.subspace;
  j["nondegenerate"] = r.nondegenerate;
  j["hypothesis_failures"] = r.hypothesis_failures;
  j["case"] = r.kase ? json(to_string(*r.kase)) : json(nullptr);
  j["set"] = r.set;
  j["alternate_set"] = r.alternate_set;
  j["c_sizes"] = r.c_sizes;
  j["d_sizes"] = r.d_sizes;
  j["predicted_sizes"] = opt(r.predicted_sizes);
  j["cardinality_match"] = opt(r.cardinality_match);
  if (r.code) {
    j["length"] = r.code->length;
    j["dimension"] = r.code->dimension;
    j["min_distance"] = r.code->min_distance;
    j["distribution"] = distribution_json(r.code->distribution);
    j["enumerator"] = enumerator_string(r.code->distribution);
    j["parameters"] = r.parameters();
  } else {
    j["length"] = j["dimension"] = j["min_distance"] = j["distribution"] = j["enumerator"] = nullptr;
  }
  j["prediction"] = r.prediction ? to_json(*r.prediction) : json(nullptr);
  j["match"] = opt(r.distribution_match);
  if (r.classifier) {
    j["classifier"] = {{"checked", r.classifier->checked}, {"mismatches", r.classifier->mismatches}};
  } else {
    j["classifier"] = nullptr;
  }
  j["character_sum_match"] = opt(r.character_sum_match);
  if (r.erratum) {
    j["tabulated_w1"] = {{"tabulated", r.erratum->tabulated},
                         {"derived", r.erratum->derived},
                         {"measured", r.erratum->measured},
                         {"flagged", r.erratum->flagged}};
  }
  j["structure"] = r.structure ? structure_json(*r.structure) : json(nullptr);
  j["notes"] = r.notes;
  if (!r.expectation_failures.empty()) j["expectation_failures"] = r.expectation_failures;
  j["pass"] = r.pass;
  return j;
}

json to_json(const SearchSummary& s) {
  json recs = json::array();
  for (const auto& rec : s.records) {
    json j = to_json(rec.report);
    j["eligible"] = rec.eligible;
    j["gmmf_consistent"] = rec.gmmf_consistent;
    recs.push_back(std::move(j));
  }
  return {{"m", s.params.m},
          {"s", s.params.s},
          {"seed", s.params.seed},
          {"side", to_string(s.params.side)},
          {"generated", s.generated},
          {"eligible", s.eligible},
          {"matched", s.matched},
          {"skipped", s.skipped},
          {"skip_reasons", s.skip_reasons},
          {"records", std::move(recs)}};
}

namespace {

const char* kCsvHeader =
    "name,n,bent,type,regularity,dual_bent,r,j0,case,set,length,dimension,min_distance,enumerator,predicted,"
    "match,cardinality,classifier_mismatches,structure,pass";

std::string csv_row(const PipelineReport& r) {
  std::ostringstream os;
  os << r.name << ',' << r.n << ',' << r.bent << ',' << (r.type ? to_string(*r.type) : "") << ','
     << (r.regularity ? to_string(*r.regularity) : "") << ',' << r.dual_bent << ',' << (r.r ? std::to_string(*r.r) : "")
     << ',' << r.j0 << ',' << (r.kase ? to_string(*r.kase) : "") << ',' << r.set << ',';
  if (r.code) {
    os << r.code->length << ',' << r.code->dimension << ',' << r.code->min_distance << ','
       << enumerator_string(r.code->distribution);
  } else {
    os << ",,,";
  }
  os << ',' << (r.prediction ? r.prediction->enumerator() : "") << ',' << yes_no(r.distribution_match) << ','
     << yes_no(r.cardinality_match) << ',' << (r.classifier ? std::to_string(r.classifier->mismatches) : "") << ','
     << (r.structure ? (r.structure->ok() ? "yes" : "NO") : "-") << ',' << (r.pass ? "pass" : "FAIL");
  return os.str();
}

void table_block(std::ostream& os, const PipelineReport& r) {
  os << "== " << (r.name.empty() ? "input" : r.name) << "  (n=" << r.n << ")  " << (r.pass ? "PASS" : "FAIL") << "\n";
  if (!r.bent) {
    os << "  " << r.not_bent << "\n";
    return;
  }
  os << "  type " << to_string(*r.type) << ", " << to_string(*r.regularity) << ", |B+|=" << r.b_plus
     << " |B-|=" << r.b_minus << ", j0=" << r.j0 << ", dual " << (r.dual_bent ? "bent" : "not bent") << "\n";
  os << "  r=" << (r.r ? std::to_string(*r.r) : "-") << "  subspace " << (r.subspace ? "yes" : "no")
     << "  non-degenerate " << (r.nondegenerate ? "yes" : "no") << "  case " << (r.kase ? to_string(*r.kase) : "-")
     << "\n";
  for (const auto& h : r.hypothesis_failures) os << "  hypothesis: " << h << "\n";
  os << "  |C_i| = " << r.c_sizes[0] << ' ' << r.c_sizes[1] << ' ' << r.c_sizes[2] << "   |D_i| = " << r.d_sizes[0]
     << ' ' << r.d_sizes[1] << ' ' << r.d_sizes[2] << "   cardinality formulas " << yes_no(r.cardinality_match)
     << "\n";
  if (r.code) {
    os << "  set " << r.set << "  " << r.parameters() << "  " << enumerator_string(r.code->distribution) << "\n";
    os << "    " << std::setw(10) << "weight" << std::setw(12) << "measured" << std::setw(12) << "predicted" << "\n";
    WeightDistribution pred;
    if (r.prediction) pred = r.prediction->distribution();
    WeightDistribution all = r.code->distribution;
    for (const auto& [w, c] : pred) all.try_emplace(w, 0);
    for (const auto& [w, c] : all) {
      const auto it = pred.find(w);
      os << "    " << std::setw(10) << w << std::setw(12) << c << std::setw(12)
         << (r.prediction ? (it == pred.end() ? std::string("0") : std::to_string(it->second)) : std::string("-"))
         << "\n";
    }
  }
  if (r.classifier) os << "  per-codeword classifier mismatches: " << r.classifier->mismatches << "\n";
  if (r.structure) os << "  structural checks " << (r.structure->ok() ? "ok" : "FAILED") << "\n";
  for (const auto& note : r.notes) os << "  note: " << note << "\n";
  for (const auto& f : r.expectation_failures) os << "  expectation: " << f << "\n";
}

}  // namespace

void write_reports(std::ostream& os, const std::vector<PipelineReport>& reports, Format fmt) {
  switch (fmt) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      os << (reports.size() == 1 ? arr[0] : arr).dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << kCsvHeader << "\n";
      for (const auto& r : reports) os << csv_row(r) << "\n";
      break;
    case Format::Table:
      for (const auto& r : reports) table_block(os, r);
      break;
  }
}

void write_prediction(std::ostream& os, const TheoremPrediction& p, Format fmt) {
  switch (fmt) {
    case Format::Json: os << to_json(p).dump(2) << "\n"; break;
    case Format::Csv:
      os << "case,n,r,length,dimension,weight,multiplicity\n";
      for (int i = 0; i < 3; ++i) {
        os << to_string(p.kase) << ',' << p.n << ',' << p.r << ',' << p.length << ',' << p.dimension << ','
           << p.weights[i] << ',' << p.multiplicities[i] << "\n";
      }
      break;
    case Format::Table:
      os << to_string(p.kase) << "  n=" << p.n << " r=" << p.r << "  [" << p.length << "," << p.dimension << ","
         << *std::min_element(p.weights.begin(), p.weights.end()) << "]_3\n";
      os << std::setw(10) << "weight" << std::setw(14) << "multiplicity" << "\n";
      os << std::setw(10) << 0 << std::setw(14) << 1 << "\n";
      for (int i = 0; i < 3; ++i) os << std::setw(10) << p.weights[i] << std::setw(14) << p.multiplicities[i] << "\n";
      os << p.enumerator() << "\n";
      break;
  }
}

void write_search(std::ostream& os, const SearchSummary& s, Format fmt) {
  switch (fmt) {
    case Format::Json: os << to_json(s).dump(2) << "\n"; break;
    case Format::Csv:
      os << kCsvHeader << ",eligible,gmmf_consistent\n";
      for (const auto& rec : s.records) {
        os << csv_row(rec.report) << ',' << rec.eligible << ',' << rec.gmmf_consistent << "\n";
      }
      break;
    case Format::Table:
      os << "search m=" << s.params.m << " s=" << s.params.s << " side " << to_string(s.params.side)
         << " seed=" << s.params.seed << "\n";
      os << "  generated " << s.generated << ", eligible " << s.eligible << ", matched " << s.matched << ", skipped "
         << s.skipped << "\n";
      for (const auto& [reason, c] : s.skip_reasons) os << "  skipped (" << c << "): " << reason << "\n";
      for (const auto& rec : s.records) {
        if (!rec.eligible) continue;
        const auto& r = rec.report;
        os << "  #" << rec.index << " " << (r.kase ? to_string(*r.kase) : "-") << " r=" << *r.r << " " << r.set << " "
           << r.parameters() << " " << (r.code ? enumerator_string(r.code->distribution) : "") << " "
           << (r.pass && rec.gmmf_consistent ? "match" : "MISMATCH") << "\n";
      }
      break;
  }
}

}  // namespace bentcode
