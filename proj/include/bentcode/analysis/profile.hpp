#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bentcode/analysis/function.hpp"
#include "bentcode/analysis/spectrum.hpp"
#include "bentcode/core/subspace.hpp"

namespace bentcode {

enum class BentType { Plus, Minus };
enum class Regularity { Regular, WeaklyRegular, NonWeaklyRegular };

const char* to_string(BentType t);
const char* to_string(Regularity r);

class NotBent : public std::runtime_error {
 public:
  NotBent(Point witness, std::int64_t norm);
  const Point& witness() const noexcept { return witness_; }
  std::int64_t norm() const noexcept { return norm_; }

 private:
  Point witness_;
  std::int64_t norm_;
};

struct BentProfile {
  int n = 0;
  TernaryFunction dual;
  // +1 / -1 per point; +-1 for n even, +-i for n odd.
  std::vector<std::int8_t> sign;
  // sorted ascending
  std::vector<std::uint32_t> b_plus;
  std::vector<std::uint32_t> b_minus;
  BentType type = BentType::Plus;
  Regularity regularity = Regularity::Regular;

  bool in_plus(std::uint32_t x) const { return sign[x] > 0; }
  const std::vector<std::uint32_t>& side(BentType t) const { return t == BentType::Plus ? b_plus : b_minus; }
};

// Throws NotBent with the first point whose coefficient has the wrong norm.
BentProfile bent_profile(const WalshSpectrum& s);
BentProfile bent_profile(const TernaryFunction& f);

struct DualCheck {
  bool dual_bent = false;
  std::optional<BentProfile> dual_profile;
  // f** = f is only asserted for even f
  bool involution_checked = false;
  bool involution_holds = false;
};

DualCheck check_dual_bent(const TernaryFunction& f, const BentProfile& profile);

// (S0, S1) at one y, summed directly.
std::pair<Eisenstein, Eisenstein> s0_s1(const BentProfile& profile, const Point& y);
// (S0, S1) for every y through two transforms.
std::pair<std::vector<Eisenstein>, std::vector<Eisenstein>> s0_s1_all(const BentProfile& profile);
// 3^{n/2} w^{f(y)} for n even, -i 3^{n/2} w^{f(y)} for n odd.
Eisenstein expected_s0_minus_s1(int n, Trit fy);

struct PreimageSets {
  std::array<std::vector<std::uint32_t>, 3> c;  // C_i = {a in B+ : f*(a) = i}
  std::array<std::vector<std::uint32_t>, 3> d;  // D_i = {a in B- : f*(a) = i}
};

PreimageSets preimage_sets(const BentProfile& profile);

// B+(f) for type Plus, B-(f) for type Minus.
struct DesignatedSubspace {
  BentType side = BentType::Plus;
  bool is_subspace = false;
  Subspace space{0};
  bool nondegenerate = false;
};

DesignatedSubspace designated_subspace(const BentProfile& profile);

struct CosetReport {
  bool ok = false;
  std::vector<std::string> failures;
  BentType side = BentType::Plus;
  int r = 0;
  std::size_t i_plus = 0;   // |B_side(f) cap B+(f*)|
  std::size_t i_minus = 0;  // |B_side(f) cap B-(f*)|
  BentType constant_side = BentType::Plus;  // which of I^+ / I^- carries constant cosets
  std::size_t expected_index_size = 0;      // 3^{2r-n}
  std::size_t matching_dual_size = 0;       // |B_{constant_side}(f*)|, expected 3^r
  bool unions_hold = false;
  bool constant_holds = false;
};

// Recomputes the coset decomposition of B+(f*) and B-(f*) over B_side(f)^perp exhaustively.
CosetReport coset_structure(const TernaryFunction& f, const BentProfile& profile, const DualCheck& dual);

}  // namespace bentcode
