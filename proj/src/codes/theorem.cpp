#include "bentcode/codes/theorem.hpp"

#include <algorithm>

namespace bentcode {
namespace {

std::uint64_t p3(int e) {
  if (e < 0) throw std::invalid_argument("negative power of 3 in a closed form");
  return pow3(e);
}

bool is_even_case(TheoremCase c) { return c == TheoremCase::EvenPlus || c == TheoremCase::EvenMinus; }

void check_case_bounds(TheoremCase c, int n, int r) {
  if (is_even_case(c) != (n % 2 == 0)) throw std::invalid_argument("case parity does not match n");
  if (is_even_case(c) ? n < 4 : n < 3) throw std::invalid_argument("n below the case's minimum");
  if (r < n / 2 + 1 || r > n) throw std::invalid_argument("r must satisfy floor(n/2)+1 <= r <= n");
}

}  // namespace

const char* to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::EvenPlus: return "EvenPlus";
    case TheoremCase::OddPlus: return "OddPlus";
    case TheoremCase::EvenMinus: return "EvenMinus";
    default: return "OddMinus";
  }
}

TheoremCase parse_case(const std::string& s) {
  for (auto c : {TheoremCase::EvenPlus, TheoremCase::OddPlus, TheoremCase::EvenMinus, TheoremCase::OddMinus}) {
    if (s == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown case '" + s + "'");
}

TheoremCase theorem_case(int n, BentType type) {
  if (n % 2 == 0) return type == BentType::Plus ? TheoremCase::EvenPlus : TheoremCase::EvenMinus;
  return type == BentType::Plus ? TheoremCase::OddPlus : TheoremCase::OddMinus;
}

WeightDistribution TheoremPrediction::distribution() const {
  WeightDistribution d{{0, 1}};
  for (int i = 0; i < 3; ++i) {
    if (multiplicities[i] != 0) d[weights[i]] += multiplicities[i];
  }
  return d;
}

TheoremPrediction predict_distribution(TheoremCase c, int n, int r) {
  check_case_bounds(c, n, r);
  TheoremPrediction p;
  p.kase = c;
  p.n = n;
  p.r = r;
  p.dimension = r;
  const std::uint64_t base = 2 * p3(r - 2);
  if (is_even_case(c)) {
    const int h = n / 2;
    const std::uint64_t a = p3(2 * r - n - 1), b = p3(r - h - 1);
    if (c == TheoremCase::EvenPlus) {
      p.length = p3(r - 1) - p3(h - 1) + p3(h) - 1;
      p.weights = {base, 2 * (p3(r - 2) + p3(h - 1)), 2 * (p3(r - 2) - p3(h - 2) + p3(h - 1))};
      p.multiplicities = {a + 2 * b - 1, 2 * a - 2 * b, p3(r) - p3(2 * r - n)};
    } else {
      p.length = p3(r - 1) + p3(h - 1);
      p.weights = {base, 2 * (p3(r - 2) + p3(h - 1)), 2 * (p3(r - 2) + p3(h - 2))};
      p.multiplicities = {2 * a - b - 1, a + b, p3(r) - p3(2 * r - n)};
    }
  } else {
    const int t = (n - 3) / 2;
    const std::uint64_t a = p3(2 * r - n - 1), b = p3(r - (n + 1) / 2);
    p.length = p3(r - 1) + p3((n - 1) / 2);
    p.weights = {base, 2 * (p3(r - 2) + p3(t)), 2 * (p3(r - 2) + 2 * p3(t))};
    p.multiplicities = {a - 1, p3(r) - 2 * a - b, a + b};
  }
  return p;
}

std::uint64_t tabulated_even_plus_w1(int n, int r) {
  check_case_bounds(TheoremCase::EvenPlus, n, r);
  return p3(2 * r - n - 1) + p3(r - n / 2 - 1);
}

std::array<std::uint64_t, 3> predicted_preimage_sizes(TheoremCase c, int n, int r) {
  check_case_bounds(c, n, r);
  const std::uint64_t q = p3(r - 1);
  switch (c) {
    case TheoremCase::EvenPlus: {
      const std::uint64_t other = q - p3(n / 2 - 1);
      return {other + p3(n / 2), other, other};
    }
    case TheoremCase::EvenMinus: {
      const std::uint64_t other = q + p3(n / 2 - 1);
      return {other - p3(n / 2), other, other};
    }
    case TheoremCase::OddPlus: {
      const std::uint64_t h = p3((n - 1) / 2);
      return {q, q - h, q + h};
    }
    default: {
      const std::uint64_t h = p3((n - 1) / 2);
      return {q, q + h, q - h};
    }
  }
}

HypothesisFailure::HypothesisFailure(std::vector<std::string> failures)
    : std::runtime_error("hypothesis failed: " + (failures.empty() ? std::string("?") : failures.front())),
      failures_(std::move(failures)) {}

HypothesisReport check_hypotheses(const TernaryFunction& f, const BentProfile& profile, const DualCheck& dual) {
  HypothesisReport rep;
  const int n = profile.n;
  rep.j0 = Trit(f(0));
  const std::string side = std::string("B") + to_string(profile.type) + "(f)";
  if (profile.regularity != Regularity::NonWeaklyRegular) {
    rep.failures.push_back(std::string("B") + (profile.b_plus.empty() ? "+" : "-") +
                           "(f) is empty: not non-weakly regular");
  }
  if (!f.is_even()) rep.failures.push_back("f is not even");
  if (!dual.dual_bent) rep.failures.push_back("dual is not bent");
  const auto des = designated_subspace(profile);
  rep.r = des.space.dim();
  if (!des.is_subspace) {
    rep.failures.push_back(side + " is not a subspace");
  } else {
    if (!des.nondegenerate) rep.failures.push_back(side + " is degenerate");
    if (rep.r < n / 2 + 1) {
      rep.failures.push_back("r = " + std::to_string(rep.r) + " < floor(n/2)+1 = " + std::to_string(n / 2 + 1));
    }
  }
  if (n < (n % 2 == 0 ? 4 : 3)) rep.failures.push_back("n too small for the weight formulas");
  rep.ok = rep.failures.empty();
  if (rep.ok) rep.kase = theorem_case(n, profile.type);
  return rep;
}

std::pair<char, Trit> parse_set_label(const std::string& label) {
  if (label.size() != 2 || (label[0] != 'C' && label[0] != 'D') || label[1] < '0' || label[1] > '2') {
    throw std::invalid_argument("set label must be C0..C2 or D0..D2, got '" + label + "'");
  }
  return {label[0], Trit(label[1] - '0')};
}

const std::vector<std::uint32_t>& preimage_by_label(const PreimageSets& pre, char family, Trit index) {
  return (family == 'C' ? pre.c : pre.d)[index.value()];
}

Selection select_defining_set(const HypothesisReport& hyp, const PreimageSets& pre) {
  if (!hyp.ok || !hyp.kase) throw HypothesisFailure(hyp.failures);
  Selection sel{*hyp.kase, 'C', hyp.j0, false, {}};
  switch (*hyp.kase) {
    case TheoremCase::EvenPlus: sel.index = hyp.j0; break;
    case TheoremCase::OddPlus: sel.index = hyp.j0 + Trit(2); break;
    case TheoremCase::EvenMinus:
      sel.family = 'D';
      sel.index = hyp.j0 + Trit(2);
      break;
    case TheoremCase::OddMinus:
      sel.family = 'D';
      sel.index = hyp.j0 + Trit(1);
      break;
  }
  sel.points = preimage_by_label(pre, sel.family, sel.index);
  return sel;
}

std::optional<Selection> admissible_selection(const HypothesisReport& hyp, const PreimageSets& pre, char family,
                                              Trit index) {
  if (!hyp.ok || !hyp.kase) return std::nullopt;
  auto sel = select_defining_set(hyp, pre);
  if (sel.family == family && sel.index == index) return sel;
  if (*hyp.kase == TheoremCase::EvenMinus && family == 'D' && index == hyp.j0 + Trit(1)) {
    sel.index = index;
    sel.alternate = true;
    sel.points = preimage_by_label(pre, family, index);
    return sel;
  }
  return std::nullopt;
}

std::uint64_t classify_weight(const TheoremPrediction& pred, const Selection& sel, Trit j0, bool u_in_dual_plus,
                              Trit fu) {
  const auto& w = pred.weights;
  const int d = (fu - j0).value();
  switch (pred.kase) {
    case TheoremCase::EvenPlus:
      if (!u_in_dual_plus) return w[2];
      return d == 0 ? w[0] : w[1];
    case TheoremCase::OddPlus:
      if (u_in_dual_plus) return w[1];
      return d == 0 ? w[0] : (d == 2 ? w[1] : w[2]);
    case TheoremCase::EvenMinus:
      if (u_in_dual_plus) return w[2];
      return fu == sel.index ? w[1] : w[0];
    default:
      if (!u_in_dual_plus) return w[1];
      return d == 0 ? w[0] : (d == 1 ? w[1] : w[2]);
  }
}

ClassifierCheck check_classifier(const TernaryFunction& f, const BentProfile& dual_profile, const Subspace& b,
                                 const TheoremPrediction& pred, const Selection& sel, Trit j0,
                                 const std::vector<std::uint32_t>& message_weights) {
  ClassifierCheck out;
  const auto perp = orthogonal_complement(b);
  for (std::uint32_t u = 0; u < message_weights.size(); ++u) {
    const std::uint64_t expected =
        perp.contains(u) ? 0 : classify_weight(pred, sel, j0, dual_profile.in_plus(u), Trit(f(u)));
    ++out.checked;
    if (expected != message_weights[u]) {
      if (!out.first_mismatch) out.first_mismatch = u;
      ++out.mismatches;
    }
  }
  return out;
}

namespace {

struct Built {
  HypothesisReport hyp;
  BentProfile profile;
  std::optional<Selection> sel;
  std::optional<LinearCode> code;
};

Built analyse(const TernaryFunction& f) {
  Built b;
  b.profile = bent_profile(f);
  const auto dual = check_dual_bent(f, b.profile);
  b.hyp = check_hypotheses(f, b.profile, dual);
  if (b.hyp.ok) {
    b.sel = select_defining_set(b.hyp, preimage_sets(b.profile));
    b.code = build_code(DefiningSet(f.dim(), b.sel->points));
  }
  return b;
}

}  // namespace

NegationReport negation_check(const TernaryFunction& f) {
  NegationReport rep;
  const int n = f.dim();
  if (n % 2 == 0) {
    rep.failures.push_back("n is even");
    return rep;
  }
  Built bf, bg;
  try {
    bf = analyse(f);
    bg = analyse(f.negated());
  } catch (const NotBent& e) {
    rep.failures.push_back(e.what());
    return rep;
  }
  for (const auto& msg : bf.hyp.failures) rep.failures.push_back("f: " + msg);
  for (const auto& msg : bg.hyp.failures) rep.failures.push_back("g: " + msg);
  if (!rep.failures.empty()) return rep;

  std::vector<std::uint32_t> neg;
  for (auto a : bg.profile.b_minus) neg.push_back(negate_index(a, n));
  std::sort(neg.begin(), neg.end());
  rep.sets_swap = neg == bf.profile.b_plus;
  rep.value_at_zero = Trit(f.negated()(0)) == -bf.hyp.j0;
  rep.preimages_match = bf.sel->points == bg.sel->points;
  rep.f_enumerator = enumerator_string(bf.code->distribution);
  rep.g_enumerator = enumerator_string(bg.code->distribution);
  rep.distributions_match = bf.code->distribution == bg.code->distribution;
  if (!rep.sets_swap) rep.failures.push_back("B+(f) != -B-(g)");
  if (!rep.value_at_zero) rep.failures.push_back("g(0) != -f(0)");
  if (!rep.preimages_match) rep.failures.push_back("selected sets differ");
  if (!rep.distributions_match) rep.failures.push_back("weight distributions differ");
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace bentcode
