#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bentcode/analysis/profile.hpp"
#include "bentcode/codes/code.hpp"

namespace bentcode {

enum class TheoremCase { EvenPlus, OddPlus, EvenMinus, OddMinus };

const char* to_string(TheoremCase c);
// Accepts the names printed by to_string; throws std::invalid_argument otherwise.
TheoremCase parse_case(const std::string& s);
TheoremCase theorem_case(int n, BentType type);

struct TheoremPrediction {
  TheoremCase kase = TheoremCase::EvenPlus;
  int n = 0;
  int r = 0;
  std::uint64_t length = 0;
  int dimension = 0;
  std::array<std::uint64_t, 3> weights{};
  std::array<std::uint64_t, 3> multiplicities{};

  WeightDistribution distribution() const;
  std::string enumerator() const { return enumerator_string(distribution()); }
};

// Throws std::invalid_argument on a parity mismatch or r outside [floor(n/2)+1, n].
TheoremPrediction predict_distribution(TheoremCase c, int n, int r);

// The EvenPlus w1 multiplicity as tabulated in the published weight-distribution table:
// 3^{2r-n-1} + 3^{r-n/2-1}. Disagrees with the derivation (and with measurement) by 3^{r-n/2-1} - 1.
std::uint64_t tabulated_even_plus_w1(int n, int r);

// Predicted |C_{j0+i}| (Plus cases) or |D_{j0+i}| (Minus cases) for i = 0, 1, 2.
std::array<std::uint64_t, 3> predicted_preimage_sizes(TheoremCase c, int n, int r);

struct HypothesisReport {
  bool ok = false;
  std::vector<std::string> failures;
  std::optional<TheoremCase> kase;
  int r = 0;
  Trit j0;
};

// Individually checks: non-weak regularity, evenness, dual-bentness, the relevant B+-(f)
// being a subspace, its non-degeneracy, r >= floor(n/2)+1, and the dimension floor of the case.
HypothesisReport check_hypotheses(const TernaryFunction& f, const BentProfile& profile, const DualCheck& dual);

class HypothesisFailure : public std::runtime_error {
 public:
  explicit HypothesisFailure(std::vector<std::string> failures);
  const std::vector<std::string>& failures() const noexcept { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Selection {
  TheoremCase kase;
  char family;  // 'C' or 'D'
  Trit index;
  // true for the EvenMinus alternative D_{j0+1}
  bool alternate = false;
  std::vector<std::uint32_t> points;

  std::string label() const { return std::string(1, family) + std::to_string(index.value()); }
};

// EvenPlus -> C_{j0}, OddPlus -> C_{j0+2}, EvenMinus -> D_{j0+2}, OddMinus -> D_{j0+1}.
// Throws HypothesisFailure when the report is not ok.
Selection select_defining_set(const HypothesisReport& hyp, const PreimageSets& pre);

// Parses "C0".."C2" / "D0".."D2"; throws std::invalid_argument otherwise.
std::pair<char, Trit> parse_set_label(const std::string& label);
const std::vector<std::uint32_t>& preimage_by_label(const PreimageSets& pre, char family, Trit index);

// Checks an explicit choice against the case's admissible set; EvenMinus also accepts D_{j0+1}.
std::optional<Selection> admissible_selection(const HypothesisReport& hyp, const PreimageSets& pre, char family,
                                              Trit index);

// Expected wt(c_u) for u outside B^perp, from u's side in the dual partition and f(u).
std::uint64_t classify_weight(const TheoremPrediction& pred, const Selection& sel, Trit j0, bool u_in_dual_plus,
                              Trit fu);

struct ClassifierCheck {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::optional<std::uint32_t> first_mismatch;
};

// Compares every message weight against classify_weight (messages in B^perp must have weight 0).
ClassifierCheck check_classifier(const TernaryFunction& f, const BentProfile& dual_profile, const Subspace& b,
                                 const TheoremPrediction& pred, const Selection& sel, Trit j0,
                                 const std::vector<std::uint32_t>& message_weights);

struct NegationReport {
  bool ok = false;
  std::vector<std::string> failures;
  bool sets_swap = false;           // B+(f) = -B-(g)
  bool value_at_zero = false;       // g(0) = -j0
  bool preimages_match = false;     // selected set of f equals selected set of g
  bool distributions_match = false;
  std::string f_enumerator;
  std::string g_enumerator;
};

// g = -f for odd n: checks the correspondence between the Plus and Minus odd cases.
NegationReport negation_check(const TernaryFunction& f);

}  // namespace bentcode
