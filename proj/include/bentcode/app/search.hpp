#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bentcode/app/pipeline.hpp"
#include "bentcode/constructions/gmmf.hpp"

namespace bentcode {

struct SearchParams {
  int m = 4;
  int s = 1;
  int count = 20;
  std::uint64_t seed = 1;
  // side whose W set is the subspace U (and hence the type of F)
  BentType side = BentType::Plus;
  // dim U; negative draws it uniformly from [0, s-1]
  int u_dim = -1;
  // compose each component with a random invertible linear map
  bool mix = true;
  int max_n = kDefaultMaxDimension;
};

struct SearchInstance {
  GmmfSpec spec;
  std::vector<std::uint32_t> u;  // W_side, a subspace of F_3^s
  BentType side = BentType::Plus;
};

// Random even family: f^(z) = f^(-z), type `side` on U and the other type off U.
SearchInstance random_instance(int m, int s, BentType side, int u_dim, bool mix, std::mt19937_64& rng);

struct SearchRecord {
  int index = 0;
  bool eligible = false;
  bool gmmf_consistent = false;  // closed-form B+-, dual, regularity equal the measured ones
  PipelineReport report;
};

struct SearchSummary {
  SearchParams params;
  int generated = 0;
  int eligible = 0;
  int matched = 0;
  int skipped = 0;
  std::map<std::string, int> skip_reasons;
  std::vector<SearchRecord> records;
};

// Throws std::invalid_argument if m < 1, s < 1 or m + 2s exceeds the cap.
SearchSummary run_search(const SearchParams& params);

}  // namespace bentcode
