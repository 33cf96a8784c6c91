#pragma once

#include <stdexcept>
#include <string>

#include "bentcode/analysis/function.hpp"
#include "bentcode/app/fixtures.hpp"
#include "bentcode/constructions/gmmf.hpp"

namespace bentcode {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "n" followed by 3^n trits; commas, whitespace and '#' comments are ignored.
TernaryFunction parse_table_text(const std::string& text, int max_n = kDefaultMaxDimension);
TernaryFunction load_table_file(const std::string& path, int max_n = kDefaultMaxDimension);

// {"m": 4, "s": 1, "family": [{"z": [0], "quadratic": [2,2,1,1], "constant": 0}, ...]}
// A component is given by "quadratic" (+ optional "constant"), "poly", or "table".
// "z" lists family indices or coordinate vectors; every z in F_3^s must be covered exactly once.
GmmfSpec parse_gmmf_json(const std::string& text, int max_n = kDefaultMaxDimension);
GmmfSpec load_gmmf_file(const std::string& path, int max_n = kDefaultMaxDimension);

// {"modulus": [2,1,0,0,1], "generator": 3, "terms": [[10,22],[0,4]]}
// "generator" is an index or a coefficient vector (lowest degree first).
TraceSpec parse_trace_json(const std::string& text, int max_n = kDefaultMaxDimension);
TraceSpec load_trace_file(const std::string& path, int max_n = kDefaultMaxDimension);

std::string read_file(const std::string& path);

}  // namespace bentcode
