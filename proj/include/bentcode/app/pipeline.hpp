#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bentcode/analysis/profile.hpp"
#include "bentcode/app/fixtures.hpp"
#include "bentcode/codes/code.hpp"
#include "bentcode/codes/theorem.hpp"

namespace bentcode {

struct PipelineOptions {
  // "C0".."D2"; when absent the set is chosen from the case
  std::optional<std::string> set;
  bool structure = true;
  // S0 - S1 identity and character-sum weights are checked up to this n
  int exhaustive_max_n = 6;
};

struct StructureChecks {
  bool parseval = false;
  std::optional<bool> dual_at_zero;  // f*(0) = f(0)
  std::optional<bool> dual_even;
  std::optional<bool> type_parity;   // type(f) = type(f*) iff n even
  std::optional<bool> symmetric;     // B+-(f) = -B+-(f)
  std::optional<bool> involution;    // f** = f
  std::optional<bool> s0_s1;         // S0 - S1 identity for every y
  std::optional<CosetReport> coset;
  bool ok() const;
};

struct TableErratum {
  std::uint64_t tabulated = 0;
  std::uint64_t derived = 0;
  std::uint64_t measured = 0;
  bool flagged = false;
};

struct PipelineReport {
  std::string name;
  int n = 0;
  bool bent = false;
  std::string not_bent;
  std::optional<BentType> type;
  std::optional<Regularity> regularity;
  std::size_t b_plus = 0;
  std::size_t b_minus = 0;
  int j0 = 0;
  bool dual_bent = false;
  std::optional<int> r;
  bool subspace = false;
  bool nondegenerate = false;
  std::vector<std::string> hypothesis_failures;
  std::optional<TheoremCase> kase;

  std::string set;
  bool alternate_set = false;
  std::array<std::size_t, 3> c_sizes{};
  std::array<std::size_t, 3> d_sizes{};
  // |C_{j0+i}| or |D_{j0+i}|, i = 0, 1, 2
  std::optional<std::array<std::uint64_t, 3>> predicted_sizes;
  std::optional<bool> cardinality_match;

  std::optional<LinearCode> code;
  std::optional<TheoremPrediction> prediction;
  std::optional<bool> distribution_match;
  std::optional<ClassifierCheck> classifier;
  std::optional<bool> character_sum_match;
  std::optional<TableErratum> erratum;
  std::optional<StructureChecks> structure;

  std::vector<std::string> notes;
  std::vector<std::string> expectation_failures;
  bool pass = false;

  std::string parameters() const;
};

PipelineReport run_pipeline(const TernaryFunction& f, const PipelineOptions& opts = {}, std::string name = "");

// Pipeline plus every fixture expectation (polynomial identity, closed-form GMMF prediction, code).
PipelineReport run_fixture(const Fixture& fx);

}  // namespace bentcode
