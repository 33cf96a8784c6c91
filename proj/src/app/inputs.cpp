#include "bentcode/app/inputs.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bentcode/constructions/poly.hpp"
#include "bentcode/constructions/quadratic.hpp"

namespace bentcode {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TernaryFunction parse_table_text(const std::string& text, int max_n) {
  std::vector<long long> values;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1000) throw InputError("table: number too large at offset " + std::to_string(i));
        ++i;
      }
      values.push_back(v);
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else {
      throw InputError(std::string("table: unexpected '") + c + "' at offset " + std::to_string(i));
    }
  }
  if (values.empty()) throw InputError("table: empty input");
  const long long n = values.front();
  if (n < 0 || n > max_n || n > kHardMaxDimension) throw InputError("table: n out of range");
  if (values.size() - 1 != pow3(static_cast<int>(n))) {
    throw InputError("table: expected " + std::to_string(pow3(static_cast<int>(n))) + " entries, got " +
                     std::to_string(values.size() - 1));
  }
  std::vector<std::uint8_t> t;
  t.reserve(values.size() - 1);
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] > 2) throw InputError("table: entry " + std::to_string(k - 1) + " is not a trit");
    t.push_back(static_cast<std::uint8_t>(values[k]));
  }
  return TernaryFunction(static_cast<int>(n), std::move(t));
}

TernaryFunction load_table_file(const std::string& path, int max_n) { return parse_table_text(read_file(path), max_n); }

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("json: ") + e.what());
  }
}

std::uint32_t index_of(const json& v, int dim, const char* what) {
  if (v.is_number_integer()) {
    const auto idx = v.get<long long>();
    if (idx < 0 || static_cast<std::uint64_t>(idx) >= pow3(dim)) throw InputError(std::string(what) + " out of range");
    return static_cast<std::uint32_t>(idx);
  }
  if (v.is_array()) {
    if (static_cast<int>(v.size()) != dim) throw InputError(std::string(what) + " has the wrong length");
    std::vector<int> coords;
    for (const auto& c : v) coords.push_back(c.get<int>());
    return Point::from_coords(coords).index();
  }
  throw InputError(std::string(what) + " must be an index or a coordinate list");
}

TernaryFunction component(const json& c, int m) {
  if (c.contains("quadratic")) {
    QuadraticForm q{c.at("quadratic").get<std::vector<int>>(), c.value("constant", 0)};
    if (q.dim() != m) throw InputError("gmmf: quadratic component must have m coefficients");
    return quadratic_function(q);
  }
  if (c.contains("poly")) return eval_poly(parse_poly(c.at("poly").get<std::string>(), m));
  if (c.contains("table")) {
    std::vector<std::uint8_t> t;
    for (const auto& v : c.at("table")) t.push_back(static_cast<std::uint8_t>(v.get<int>()));
    return TernaryFunction(m, std::move(t));
  }
  throw InputError("gmmf: component needs \"quadratic\", \"poly\" or \"table\"");
}

}  // namespace

GmmfSpec parse_gmmf_json(const std::string& text, int max_n) {
  const auto j = parse_json(text);
  try {
    GmmfSpec spec;
    spec.m = j.at("m").get<int>();
    spec.s = j.at("s").get<int>();
    if (spec.m < 1 || spec.s < 1) throw InputError("gmmf: m and s must be positive");
    if (spec.m + 2 * spec.s > max_n) throw InputError("gmmf: m + 2s exceeds --max-n");
    const auto nz = pow3(spec.s);
    std::vector<std::optional<TernaryFunction>> fam(nz);
    for (const auto& entry : j.at("family")) {
      const auto f = component(entry, spec.m);
      for (const auto& z : entry.at("z")) {
        const auto idx = index_of(z, spec.s, "z");
        if (fam[idx]) throw InputError("gmmf: z = " + std::to_string(idx) + " given twice");
        fam[idx] = f;
      }
    }
    for (std::size_t z = 0; z < nz; ++z) {
      if (!fam[z]) throw InputError("gmmf: no component for z = " + std::to_string(z));
      spec.family.push_back(*fam[z]);
    }
    return spec;
  } catch (const json::exception& e) {
    throw InputError(std::string("gmmf: ") + e.what());
  }
}

GmmfSpec load_gmmf_file(const std::string& path, int max_n) { return parse_gmmf_json(read_file(path), max_n); }

TraceSpec parse_trace_json(const std::string& text, int max_n) {
  const auto j = parse_json(text);
  try {
    TraceSpec spec;
    spec.modulus = j.at("modulus").get<std::vector<int>>();
    const int k = static_cast<int>(spec.modulus.size()) - 1;
    if (k < 1 || k > max_n) throw InputError("trace: degree out of range");
    spec.generator = index_of(j.at("generator"), k, "generator");
    for (const auto& t : j.at("terms")) spec.terms.emplace_back(t.at(0).get<long long>(), t.at(1).get<long long>());
    return spec;
  } catch (const json::exception& e) {
    throw InputError(std::string("trace: ") + e.what());
  }
}

TraceSpec load_trace_file(const std::string& path, int max_n) { return parse_trace_json(read_file(path), max_n); }

}  // namespace bentcode
