#include "bentcode/app/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "bentcode/constructions/quadratic.hpp"
#include "bentcode/core/subspace.hpp"

namespace bentcode {
namespace {

// Random invertible m x m matrix over F_3, rows as digit vectors.
std::vector<std::vector<int>> random_invertible(int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> trit(0, 2);
  while (true) {
    std::vector<std::vector<int>> a(m, std::vector<int>(m));
    std::vector<std::uint32_t> rows;
    for (auto& row : a) {
      for (auto& v : row) v = trit(rng);
      rows.push_back(encode_digits(std::vector<std::uint8_t>(row.begin(), row.end())));
    }
    if (rank(m, rows) == m) return a;
  }
}

TernaryFunction random_component(int m, BentType type, bool mix, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nonzero(1, 2), trit(0, 2);
  QuadraticForm q;
  for (int i = 0; i < m; ++i) q.d.push_back(nonzero(rng));
  q.c = trit(rng);
  // flipping one coefficient flips eta(Delta) and with it the type
  if (quadratic_type(q) != type) q.d[0] = 3 - q.d[0];
  const auto base = quadratic_function(q);
  if (!mix) return base;
  const auto a = random_invertible(m, rng);
  std::vector<std::uint8_t> digits(m), image(m);
  return TernaryFunction::tabulate(m, [&](std::uint32_t x) {
    decode_index(x, m, digits);
    for (int i = 0; i < m; ++i) {
      int acc = 0;
      for (int j = 0; j < m; ++j) acc += a[i][j] * digits[j];
      image[i] = static_cast<std::uint8_t>(acc % 3);
    }
    return base(encode_digits(image));
  });
}

std::vector<std::uint32_t> random_subspace(int s, int dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(1, static_cast<std::uint32_t>(pow3(s)) - 1);
  std::vector<std::uint32_t> gens;
  while (static_cast<int>(gens.size()) < dim) {
    gens.push_back(pick(rng));
    if (rank(s, gens) < static_cast<int>(gens.size())) gens.pop_back();
  }
  return Subspace(s, gens).members();
}

}  // namespace

SearchInstance random_instance(int m, int s, BentType side, int u_dim, bool mix, std::mt19937_64& rng) {
  if (u_dim < 0) u_dim = std::uniform_int_distribution<int>(0, s - 1)(rng);
  if (u_dim > s) throw std::invalid_argument("search: dim U exceeds s");
  SearchInstance inst;
  inst.side = side;
  inst.u = random_subspace(s, u_dim, rng);
  const BentType other = side == BentType::Plus ? BentType::Minus : BentType::Plus;
  const auto nz = static_cast<std::uint32_t>(pow3(s));
  inst.spec.m = m;
  inst.spec.s = s;
  inst.spec.family.resize(nz);
  for (std::uint32_t z = 0; z < nz; ++z) {
    const auto neg = negate_index(z, s);
    if (neg < z) {
      inst.spec.family[z] = inst.spec.family[neg];
      continue;
    }
    const bool in_u = std::binary_search(inst.u.begin(), inst.u.end(), z);
    inst.spec.family[z] = random_component(m, in_u ? side : other, mix, rng);
  }
  return inst;
}

SearchSummary run_search(const SearchParams& params) {
  if (params.m < 1 || params.s < 1) throw std::invalid_argument("search: m and s must be positive");
  require_dimension(params.m + 2 * params.s, params.max_n);
  SearchSummary out;
  out.params = params;
  std::mt19937_64 rng(params.seed);
  for (int i = 0; i < params.count; ++i) {
    const auto inst = random_instance(params.m, params.s, params.side, params.u_dim, params.mix, rng);
    const auto f = gmmf_build(inst.spec);
    SearchRecord rec;
    rec.index = i;
    rec.report = run_pipeline(f, {}, "search-" + std::to_string(i));
    const auto pred = gmmf_predict(inst.spec);
    const auto profile = bent_profile(f);
    rec.gmmf_consistent = pred.dual == profile.dual && pred.b_plus == profile.b_plus &&
                          pred.b_minus == profile.b_minus && pred.regularity == profile.regularity;
    rec.eligible = rec.report.hypothesis_failures.empty();
    ++out.generated;
    if (rec.eligible) {
      ++out.eligible;
      if (rec.report.pass && rec.gmmf_consistent) ++out.matched;
    } else {
      ++out.skipped;
      ++out.skip_reasons[rec.report.hypothesis_failures.front()];
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace bentcode
