#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bentcode/analysis/profile.hpp"
#include "bentcode/constructions/gmmf.hpp"

namespace bentcode {

struct TraceSpec {
  std::vector<int> modulus;  // lowest degree first, monic
  std::uint32_t generator = 0;
  std::vector<std::pair<long long, long long>> terms;  // (power of generator, exponent of x)
};

struct Expectation {
  BentType type = BentType::Plus;
  Regularity regularity = Regularity::NonWeaklyRegular;
  bool dual_bent = true;
  int r = 0;
  int j0 = 0;
  std::string set;
  std::size_t length = 0;
  int dimension = 0;
  std::uint64_t min_distance = 0;
  std::string enumerator;
};

struct Fixture {
  std::string name;
  std::string summary;
  int n = 0;
  std::optional<GmmfSpec> gmmf;
  // closed-form polynomial of the same function, checked pointwise against the GMMF table
  std::optional<std::string> poly;
  std::optional<std::string> dual_poly;
  std::optional<TraceSpec> trace;
  // defining set requested explicitly instead of selected from the case
  std::optional<std::string> set;
  Expectation expect;
};

const std::vector<Fixture>& fixtures();
// Throws std::invalid_argument for an unknown name.
const Fixture& find_fixture(const std::string& name);

TernaryFunction fixture_function(const Fixture& fx);
TernaryFunction trace_spec_function(const TraceSpec& spec);

// One weakly regular component for a GMMF family.
TernaryFunction diagonal(std::vector<int> d, int c = 0);

}  // namespace bentcode
