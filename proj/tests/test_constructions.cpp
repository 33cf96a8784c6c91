#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bentcode/analysis/profile.hpp"
#include "bentcode/app/fixtures.hpp"
#include "bentcode/app/search.hpp"
#include "bentcode/constructions/extfield.hpp"
#include "bentcode/constructions/gmmf.hpp"
#include "bentcode/constructions/poly.hpp"
#include "bentcode/constructions/quadratic.hpp"
#include "oracles.hpp"

using namespace bentcode;

TEST(Quadratic, Tables) {
  const auto f = quadratic_function({{1}, 0});
  EXPECT_EQ(f, TernaryFunction(1, {0, 1, 1}));
  const auto g = quadratic_function({{2, 2, 1, 1}, 1});
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    const auto c = oracle::coords(x, 4);
    ASSERT_EQ(g(x), (2 * c[0] * c[0] + 2 * c[1] * c[1] + c[2] * c[2] + c[3] * c[3] + 1) % 3);
  }
  EXPECT_THROW(quadratic_function({{1, 0}, 0}), std::invalid_argument);
  EXPECT_THROW(quadratic_function({{1, 3}, 0}), std::invalid_argument);
}

TEST(Quadratic, TypeExamples) {
  EXPECT_EQ(quadratic_type({{2, 2, 1, 1}, 0}), BentType::Plus);
  EXPECT_EQ(quadratic_type({{1, 1, 2, 1}, 0}), BentType::Minus);
  EXPECT_EQ(quadratic_type({{1}, 0}), BentType::Plus);
  EXPECT_EQ(QuadraticForm({{2, 2, 2}, 0}).eta_delta(), -1);
}

TEST(Quadratic, TypeAndDualMatchSpectrumForAllSignPatterns) {
  for (int m = 1; m <= 5; ++m) {
    for (int mask = 0; mask < (1 << m); ++mask) {
      for (int c = 0; c < 3; ++c) {
        QuadraticForm q;
        for (int i = 0; i < m; ++i) q.d.push_back((mask >> i) & 1 ? 2 : 1);
        q.c = c;
        const auto p = bent_profile(quadratic_function(q));
        ASSERT_EQ(p.type, quadratic_type(q)) << "m=" << m << " mask=" << mask;
        ASSERT_NE(p.regularity, Regularity::NonWeaklyRegular);
        ASSERT_EQ(p.dual, quadratic_function(quadratic_dual(q)));
      }
    }
  }
}

TEST(Gmmf, ConstantFamilyIsWeaklyRegular) {
  const auto sq = quadratic_function({{1}, 0});
  const GmmfSpec spec{1, 1, {sq, sq, sq}};
  const auto f = gmmf_build(spec);
  ASSERT_EQ(f.dim(), 3);
  for (std::uint32_t v = 0; v < f.size(); ++v) {
    const auto c = oracle::coords(v, 3);
    ASSERT_EQ(f(v), (c[0] * c[0] + c[2] * c[1]) % 3);
  }
  const auto p = bent_profile(f);
  EXPECT_NE(p.regularity, Regularity::NonWeaklyRegular);
  const auto pred = gmmf_predict(spec);
  EXPECT_TRUE(pred.b_minus.empty() || pred.b_plus.empty());
  EXPECT_EQ(pred.dual, p.dual);
}

TEST(Gmmf, ValidateRejectsBadSpecs) {
  const auto sq = quadratic_function({{1}, 0});
  EXPECT_THROW(gmmf_build({1, 1, {sq, sq}}), std::invalid_argument);
  EXPECT_THROW(gmmf_build({2, 1, {sq, sq, sq}}), std::invalid_argument);
  EXPECT_THROW(gmmf_build({0, 1, {}}), std::invalid_argument);
  const TernaryFunction lin(1, {0, 1, 2});
  EXPECT_THROW(gmmf_predict({1, 1, {sq, lin, lin}}), std::invalid_argument);
}

TEST(Gmmf, ExamplePlusSet) {
  const auto& fx = find_fixture("ex-3.3");
  const auto pred = gmmf_predict(*fx.gmmf);
  EXPECT_EQ(pred.regularity, Regularity::NonWeaklyRegular);
  ASSERT_EQ(pred.b_plus.size(), 243u);
  for (auto a : pred.b_plus) EXPECT_EQ(oracle::coords(a, 6)[4], 0);
  EXPECT_EQ(pred.w_plus, std::vector<std::uint32_t>{0});
}

TEST(Gmmf, PredictionMatchesMeasurementOnRandomFamilies) {
  std::mt19937_64 rng(2024);
  for (auto [m, s] : {std::pair{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}}) {
    for (auto side : {BentType::Plus, BentType::Minus}) {
      for (int t = 0; t < 6; ++t) {
        const auto inst = random_instance(m, s, side, -1, true, rng);
        const auto f = gmmf_build(inst.spec);
        ASSERT_TRUE(f.is_even());
        const auto p = bent_profile(f);
        const auto pred = gmmf_predict(inst.spec);
        ASSERT_EQ(pred.dual, p.dual);
        ASSERT_EQ(pred.b_plus, p.b_plus);
        ASSERT_EQ(pred.b_minus, p.b_minus);
        ASSERT_EQ(pred.regularity, p.regularity);
        ASSERT_EQ(p.regularity == Regularity::NonWeaklyRegular, !pred.w_plus.empty() && !pred.w_minus.empty());
        ASSERT_EQ(p.type, side);
      }
    }
  }
}

TEST(Poly, SimpleForms) {
  EXPECT_EQ(eval_poly(parse_poly("x1^2 + 2*x2^2", 2)), quadratic_function({{1, 2}, 0}));
  EXPECT_EQ(eval_poly(parse_poly("x1 + x1", 1)), eval_poly(parse_poly("2*x1", 1)));
  EXPECT_EQ(eval_poly(parse_poly("-x1", 1)), eval_poly(parse_poly("2x1", 1)));
  EXPECT_EQ(eval_poly(parse_poly("x_1 x_2", 2)), eval_poly(parse_poly("x1*x2", 2)));
  EXPECT_EQ(eval_poly(parse_poly("x1^3", 1)), eval_poly(parse_poly("x1", 1)));
  EXPECT_EQ(eval_poly(parse_poly("x1^0", 1)), TernaryFunction(1, {1, 1, 1}));
  EXPECT_EQ(eval_poly(parse_poly("4", 1)), TernaryFunction(1, {1, 1, 1}));
}

TEST(Poly, RandomPolynomialsMatchDirectEvaluation) {
  std::mt19937 rng(8);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int terms = 1 + static_cast<int>(rng() % 4);
    std::string text;
    std::vector<std::pair<int, std::vector<int>>> mono;
    for (int i = 0; i < terms; ++i) {
      const int c = 1 + static_cast<int>(rng() % 5);
      std::vector<int> e(n);
      text += (i ? "+" : "") + std::to_string(c);
      for (int v = 0; v < n; ++v) {
        e[v] = static_cast<int>(rng() % 4);
        if (e[v]) text += "*x" + std::to_string(v + 1) + "^" + std::to_string(e[v]);
      }
      mono.push_back({c, e});
    }
    const auto f = eval_poly(parse_poly(text, n));
    for (std::uint32_t x = 0; x < f.size(); ++x) {
      const auto c = oracle::coords(x, n);
      int want = 0;
      for (const auto& [k, e] : mono) {
        int term = k;
        for (int v = 0; v < n; ++v)
          for (int j = 0; j < e[v]; ++j) term *= c[v];
        want += term;
      }
      ASSERT_EQ(f(x), want % 3) << text;
    }
  }
}

TEST(Poly, Errors) {
  EXPECT_THROW(parse_poly("", 2), ParseError);
  EXPECT_THROW(parse_poly("   ", 2), ParseError);
  EXPECT_THROW(parse_poly("x3", 2), ParseError);
  EXPECT_THROW(parse_poly("x0", 2), ParseError);
  EXPECT_THROW(parse_poly("x1^", 2), ParseError);
  EXPECT_THROW(parse_poly("x1^a", 2), ParseError);
  EXPECT_THROW(parse_poly("y1", 2), ParseError);
  EXPECT_THROW(parse_poly("x1 +", 2), ParseError);
  try {
    parse_poly("x1 + x9", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(Poly, ExamplePolynomialsMatchGmmfTables) {
  int checked = 0;
  for (const auto& fx : fixtures()) {
    if (!fx.gmmf || !fx.poly) continue;
    EXPECT_EQ(eval_poly(parse_poly(*fx.poly, fx.n)), gmmf_build(*fx.gmmf)) << fx.name;
    ++checked;
  }
  EXPECT_GE(checked, 4);
}

TEST(Poly, DualPolynomialOfOddMinusExample) {
  const auto& fx = find_fixture("ex-4.5");
  const auto dual = eval_poly(parse_poly("2x2^2x4^2+2x1^2+2x2^2+2x3^2+2x4x5", 5));
  EXPECT_EQ(gmmf_predict(*fx.gmmf).dual, dual);
  EXPECT_EQ(bent_profile(gmmf_build(*fx.gmmf)).dual, dual);
}

TEST(ExtField, SmallTraceExample) {
  // x^2 + 2x + 2, generator x (index 3)
  const ExtField f({2, 2, 1}, 3);
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f.size(), 9u);
  // w^2 = w + 1, w^3 = 2w + 1
  EXPECT_EQ(f.mul(3, 3), 4u);
  EXPECT_EQ(f.pow(3, 3), 7u);
  EXPECT_EQ(f.trace(3), Trit(1));
  const auto tr = trace_function(f, {{0, 1}});
  EXPECT_EQ(tr(3), 1);
  EXPECT_EQ(primitive_elements({2, 2, 1}).size(), 4u);
}

TEST(ExtField, RejectsBadInputs) {
  EXPECT_FALSE(is_irreducible({2, 0, 1}));  // x^2 + 2 = (x+1)(x+2)
  EXPECT_TRUE(is_irreducible({1, 0, 1}));       // x^2 + 1
  EXPECT_THROW(ExtField({2, 0, 1}, 3), std::invalid_argument);
  // x is not primitive modulo x^2 + 1 (order 4)
  EXPECT_THROW(ExtField({1, 0, 1}, 3), std::invalid_argument);
  EXPECT_THROW(ExtField({2, 2, 2}, 3), std::invalid_argument);
  EXPECT_THROW(ExtField({2, 2, 1}, 0), std::invalid_argument);
}

TEST(ExtField, FieldAxiomsAndTraceLinearity) {
  const std::vector<int> mod{2, 1, 0, 0, 1};  // x^4 + x + 2
  const ExtField f(mod, 3);
  std::mt19937 rng(4);
  std::uniform_int_distribution<std::uint32_t> d(0, f.size() - 1);
  std::set<int> values;
  for (int t = 0; t < 1000; ++t) {
    const auto a = d(rng), b = d(rng), c = d(rng);
    ASSERT_EQ(f.mul(a, b), poly_mulmod(a, b, mod));
    ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    ASSERT_EQ(f.trace(f.add(a, b)), f.trace(a) + f.trace(b));
    ASSERT_EQ(f.trace(f.pow(a, 3)), f.trace(a));
    // trace by the Frobenius sum
    std::uint32_t acc = 0, fr = a;
    for (int i = 0; i < 4; ++i, fr = f.pow(fr, 3)) acc = f.add(acc, fr);
    ASSERT_LT(acc, 3u);
    ASSERT_EQ(f.trace(a), Trit(static_cast<int>(acc)));
    values.insert(f.trace(a).value());
    if (a != 0) ASSERT_EQ(f.gen_pow(f.log(a)), a);
  }
  EXPECT_EQ(values.size(), 3u);
  EXPECT_THROW(f.log(0), std::invalid_argument);
}

TEST(ExtField, SporadicFunctionsClassify) {
  const auto& g2 = find_fixture("g2");
  const auto p2 = bent_profile(fixture_function(g2));
  EXPECT_EQ(p2.type, BentType::Plus);
  const auto s2 = span(4, p2.b_plus);
  EXPECT_TRUE(s2.is_subspace);
  EXPECT_EQ(s2.space.dim(), 3);

  const auto& g1 = find_fixture("g1");
  const auto p1 = bent_profile(fixture_function(g1));
  EXPECT_EQ(p1.type, BentType::Minus);
  const auto s1 = span(6, p1.b_minus);
  EXPECT_TRUE(s1.is_subspace);
  EXPECT_EQ(s1.space.dim(), 4);
}
