#include "bentcode/analysis/profile.hpp"

#include <algorithm>

#include "bentcode/kernels/kernels.hpp"

namespace bentcode {

const char* to_string(BentType t) { return t == BentType::Plus ? "+" : "-"; }

const char* to_string(Regularity r) {
  switch (r) {
    case Regularity::Regular: return "regular";
    case Regularity::WeaklyRegular: return "weakly-regular";
    default: return "non-weakly-regular";
  }
}

NotBent::NotBent(Point witness, std::int64_t norm)
    : std::runtime_error("not bent: |f^(" + bentcode::to_string(witness) + ")|^2 = " + std::to_string(norm)),
      witness_(witness),
      norm_(norm) {}

BentProfile bent_profile(const WalshSpectrum& s) {
  const std::int64_t target = static_cast<std::int64_t>(pow3(s.n));
  BentProfile p;
  p.n = s.n;
  p.sign.resize(s.values.size());
  std::vector<std::uint8_t> dual(s.values.size());
  for (std::uint32_t a = 0; a < s.values.size(); ++a) {
    const auto q = s.values[a].squared_norm();
    if (q != target) throw NotBent(Point(a, s.n), q);
    const auto d = decode_coefficient(s.values[a], s.n);
    p.sign[a] = static_cast<std::int8_t>(d.sign);
    dual[a] = static_cast<std::uint8_t>(d.dual_value.value());
    (d.sign > 0 ? p.b_plus : p.b_minus).push_back(a);
  }
  p.dual = TernaryFunction(s.n, std::move(dual));
  p.type = p.sign[0] > 0 ? BentType::Plus : BentType::Minus;
  if (!p.b_plus.empty() && !p.b_minus.empty()) {
    p.regularity = Regularity::NonWeaklyRegular;
  } else if (s.n % 2 == 0 && p.b_minus.empty()) {
    p.regularity = Regularity::Regular;
  } else {
    p.regularity = Regularity::WeaklyRegular;
  }
  return p;
}

BentProfile bent_profile(const TernaryFunction& f) { return bent_profile(walsh_spectrum(f)); }

DualCheck check_dual_bent(const TernaryFunction& f, const BentProfile& profile) {
  DualCheck out;
  try {
    out.dual_profile = bent_profile(profile.dual);
  } catch (const NotBent&) {
    return out;
  }
  out.dual_bent = true;
  if (f.is_even()) {
    out.involution_checked = true;
    out.involution_holds = out.dual_profile->dual == f;
  }
  return out;
}

std::pair<Eisenstein, Eisenstein> s0_s1(const BentProfile& profile, const Point& y) {
  if (y.dim() != profile.n) throw std::invalid_argument("s0_s1: dimension mismatch");
  Eisenstein s0, s1;
  for (std::uint32_t a = 0; a < profile.sign.size(); ++a) {
    const auto term = Eisenstein::omega_pow(profile.dual(a) + dot_index(a, y.index(), profile.n));
    (profile.sign[a] > 0 ? s0 : s1) += term;
  }
  return {s0, s1};
}

std::pair<std::vector<Eisenstein>, std::vector<Eisenstein>> s0_s1_all(const BentProfile& profile) {
  const std::size_t size = profile.sign.size();
  std::vector<Eisenstein> v0(size), v1(size);
  for (std::uint32_t a = 0; a < size; ++a) {
    (profile.sign[a] > 0 ? v0 : v1)[a] = Eisenstein::omega_pow(profile.dual(a));
  }
  kernels::character_transform(v0, profile.n);
  kernels::character_transform(v1, profile.n);
  // the transform carries w^{-b.a}; S(y) sits at b = -y
  std::vector<Eisenstein> s0(size), s1(size);
  for (std::uint32_t y = 0; y < size; ++y) {
    const auto b = negate_index(y, profile.n);
    s0[y] = v0[b];
    s1[y] = v1[b];
  }
  return {std::move(s0), std::move(s1)};
}

Eisenstein expected_s0_minus_s1(int n, Trit fy) { return signed_unit(n % 2 == 0 ? 1 : -1, fy, n); }

PreimageSets preimage_sets(const BentProfile& profile) {
  PreimageSets out;
  for (std::uint32_t a = 0; a < profile.sign.size(); ++a) {
    (profile.sign[a] > 0 ? out.c : out.d)[profile.dual(a)].push_back(a);
  }
  return out;
}

DesignatedSubspace designated_subspace(const BentProfile& profile) {
  DesignatedSubspace out;
  out.side = profile.type;
  const auto& pts = profile.side(profile.type);
  auto sp = span(profile.n, pts);
  out.is_subspace = sp.is_subspace;
  out.space = std::move(sp.space);
  out.nondegenerate = out.is_subspace && is_nondegenerate(out.space);
  return out;
}

CosetReport coset_structure(const TernaryFunction& f, const BentProfile& profile, const DualCheck& dual) {
  CosetReport rep;
  rep.side = profile.type;
  const int n = profile.n;
  if (profile.regularity != Regularity::NonWeaklyRegular) rep.failures.push_back("not non-weakly regular");
  if (!f.is_even()) rep.failures.push_back("f not even");
  if (!dual.dual_bent) rep.failures.push_back("dual not bent");
  const auto des = designated_subspace(profile);
  if (!des.is_subspace) rep.failures.push_back(std::string("B") + to_string(rep.side) + "(f) not a subspace");
  else if (!des.nondegenerate) rep.failures.push_back(std::string("B") + to_string(rep.side) + "(f) degenerate");
  if (!rep.failures.empty()) return rep;

  const auto& dp = *dual.dual_profile;
  rep.r = des.space.dim();
  const bool even_n = n % 2 == 0;
  // (B+, n even) -> I0+, (B+, n odd) -> I0-, (B-, n even) -> I1-, (B-, n odd) -> I1+
  if (rep.side == BentType::Plus) rep.constant_side = even_n ? BentType::Plus : BentType::Minus;
  else rep.constant_side = even_n ? BentType::Minus : BentType::Plus;

  const auto perp = orthogonal_complement(des.space).members();
  const auto& b = profile.side(rep.side);
  rep.unions_hold = true;
  rep.constant_holds = true;
  std::size_t covered[2] = {0, 0};
  for (auto u : b) {
    const bool plus = dp.in_plus(u);
    ++(plus ? rep.i_plus : rep.i_minus);
    const bool designated = plus == (rep.constant_side == BentType::Plus);
    for (auto v : perp) {
      const auto x = add_index(u, v, n);
      if (dp.in_plus(x) != plus) rep.unions_hold = false;
      if (designated && f(x) != f(u)) rep.constant_holds = false;
    }
    covered[plus ? 0 : 1] += perp.size();
  }
  if (covered[0] != dp.b_plus.size() || covered[1] != dp.b_minus.size()) rep.unions_hold = false;

  rep.expected_index_size = 2 * rep.r >= n ? static_cast<std::size_t>(pow3(2 * rep.r - n)) : 0;
  rep.matching_dual_size = dp.side(rep.constant_side).size();
  const std::size_t designated_size = rep.constant_side == BentType::Plus ? rep.i_plus : rep.i_minus;

  if (!rep.unions_hold) rep.failures.push_back("B+-(f*) not a union of cosets of B^perp");
  if (!rep.constant_holds) rep.failures.push_back("f not constant on designated cosets");
  if (designated_size != rep.expected_index_size) rep.failures.push_back("designated index set size != 3^{2r-n}");
  if (rep.matching_dual_size != pow3(rep.r)) rep.failures.push_back("matching |B(f*)| != 3^r");
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace bentcode
