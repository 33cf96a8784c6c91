#include "bentcode/app/fixtures.hpp"

#include <stdexcept>

#include "bentcode/constructions/extfield.hpp"
#include "bentcode/constructions/poly.hpp"
#include "bentcode/constructions/quadratic.hpp"

namespace bentcode {

TernaryFunction diagonal(std::vector<int> d, int c) { return quadratic_function({std::move(d), c}); }

namespace {

Fixture named(std::string name, std::string summary, int n) {
  Fixture fx;
  fx.name = std::move(name);
  fx.summary = std::move(summary);
  fx.n = n;
  return fx;
}

// s = 1 family with f^(1) = f^(2)
GmmfSpec single(int m, TernaryFunction f0, TernaryFunction f12) { return {m, 1, {f0, f12, f12}}; }

GmmfSpec two_parameter() {
  std::vector<TernaryFunction> fam(9);
  // family index z6 + 3 z7
  auto put = [&](int a, int b, const TernaryFunction& f) { fam[a + 3 * b] = f; };
  put(0, 0, diagonal({2, 1, 1}, 2));
  put(1, 1, diagonal({1, 2, 1}));
  put(2, 2, diagonal({1, 2, 1}));
  put(0, 1, diagonal({1, 1, 1}));
  put(0, 2, diagonal({1, 1, 1}));
  put(1, 0, diagonal({2, 2, 1}));
  put(2, 0, diagonal({2, 2, 1}));
  put(1, 2, diagonal({2, 1, 2}));
  put(2, 1, diagonal({2, 1, 2}));
  return {3, 2, std::move(fam)};
}

std::vector<Fixture> make_fixtures() {
  std::vector<Fixture> out;
  const Expectation e98{BentType::Plus, Regularity::NonWeaklyRegular, true, 5, 0, "C0", 98, 5, 54,
                        "1+32y^54+162y^66+48y^72"};
  const Expectation e270{BentType::Plus, Regularity::NonWeaklyRegular, true, 6, 0, "C2", 270, 6, 162,
                         "1+80y^162+558y^180+90y^198"};

  {
    auto fx = named("ex-3.3", "even n, type +, C_{j0} with j0 = 0", 6);
    fx.gmmf = single(4, diagonal({2, 2, 1, 1}), diagonal({1, 1, 2, 1}));
    fx.poly = "2x1^2x6^2+2x1^2+2x2^2x6^2+2x2^2+x3^2x6^2+x3^2+x4^2+x5x6";
    fx.dual_poly = "x1^2x5^2+x1^2+x2^2x5^2+x2^2+2x3^2x5^2+2x3^2+2x4^2+2x5x6";
    fx.expect = e98;
    out.push_back(std::move(fx));
  }
  {
    auto fx = named("ex-3.4", "even n, type +, C_{j0} with j0 = 1", 6);
    fx.gmmf = single(4, diagonal({1, 2, 2, 1}, 1), diagonal({2, 2, 2, 1}));
    fx.poly = "x1^2x6^2+x1^2+2x2^2+2x3^2+x4^2+x5x6+2x6^2+1";
    fx.dual_poly = "2x1^2x5^2+2x1^2+x2^2+2x5^2+x3^2+2x4^2+2x5x6+1";
    fx.expect = e98;
    fx.expect.j0 = 1;
    fx.expect.set = "C1";
    out.push_back(std::move(fx));
  }
  {
    auto fx = named("ex-3.8", "odd n, type +, C_{j0+2}", 7);
    fx.gmmf = single(5, diagonal({2, 1, 2, 1, 1}), diagonal({1, 1, 1, 1, 2}));
    fx.poly = "2x1^2x7^2+2x1^2+x2^2+2x3^2x7^2+2x3^2+x4^2+x5^2x7^2+x5^2+x6x7";
    fx.dual_poly = "x1^2x6^2+x1^2+2x2^2+x3^2x6^2+x3^2+2x4^2+2x5^2x6^2+2x5^2+2x6x7";
    fx.expect = e270;
    out.push_back(std::move(fx));
  }
  {
    auto fx = named("ex-3.9", "odd n, type +, s = 2 with W+ = {(0,0),(1,1),(2,2)}", 7);
    fx.gmmf = two_parameter();
    fx.poly =
        "2x1^2x6^2x7^2+x1^2x6x7+2x1^2x7^2+2x1^2+x2^2x6^2x7^2+x2^2x6^2+2x2^2x6x7+x2^2+2x3^2x6^2x7^2"
        "+x3^2x6x7+x3^2+2x6^2x7^2+x6^2+x7^2+x4x6+x5x7+2";
    fx.expect = e270;
    fx.expect.j0 = 2;
    fx.expect.set = "C1";
    out.push_back(std::move(fx));
  }
  {
    auto fx = named("ex-4.4", "even n, type -, D_{j0+2}", 8);
    fx.gmmf = single(6, diagonal({2, 2, 1, 1, 1, 1}), diagonal({1, 2, 2, 2, 1, 1}));
    fx.poly = "2x1^2x8^2+2x1^2+x4^2x8^2+2x2^2+x3^2x8^2+x3^2+x4^2+x5^2+x6^2+x7x8";
    fx.dual_poly = "x1^2x7^2+x1^2+2x4^2x7^2+x2^2+2x3^2x7^2+2x3^2+2x4^2+2x5^2+2x6^2+2x7x8";
    fx.expect = {BentType::Minus, Regularity::NonWeaklyRegular, true, 7, 0, "D2", 756, 7, 486,
                 "1+476y^486+1458y^504+252y^540"};
    out.push_back(std::move(fx));
  }
  {
    auto fx = named("ex-4.5", "odd n, type -, D_{j0+1}", 5);
    fx.gmmf = single(3, diagonal({1, 1, 1}), diagonal({1, 2, 1}));
    fx.poly = "x2^2x5^2+x1^2+x2^2+x3^2+x4x5";
    fx.dual_poly = "2x2^2x4^2+2x1^2+2x2^2+2x3^2+2x4x5";
    fx.expect = {BentType::Minus, Regularity::NonWeaklyRegular, true, 4, 0, "D1", 36, 4, 18,
                 "1+8y^18+60y^24+12y^30"};
    out.push_back(std::move(fx));
  }
  {
    auto fx = named("ex-4.6", "odd n, type -, D_{j0+1} with j0 = 2", 7);
    fx.gmmf = single(5, diagonal({2, 1, 1, 1, 1}, 2), diagonal({1, 1, 1, 1, 1}));
    fx.poly = "2x1^2x7^2+2x1^2+x2^2+x3^2+x4^2+x7^2+x5^2+x6x7+2";
    fx.expect = {BentType::Minus, Regularity::NonWeaklyRegular, true, 6, 2, "D0", 270, 6, 162,
                 "1+80y^162+558y^180+90y^198"};
    out.push_back(std::move(fx));
  }
  {
    // x^6 + x + 2 is primitive; lambda = x
    auto fx = named("g1", "Tr_6(l x^20 + l^41 x^92), even n, type -", 6);
    fx.trace = TraceSpec{{2, 1, 0, 0, 0, 0, 1}, 3, {{1, 20}, {41, 92}}};
    fx.expect = {BentType::Minus, Regularity::NonWeaklyRegular, true, 4, 0, "D2", 36, 4, 18,
                 "1+4y^18+72y^24+4y^36"};
    out.push_back(std::move(fx));
  }
  {
    // x^4 + x + 2 is primitive; w = x
    auto fx = named("g2", "Tr_4(w^10 x^22 + x^4), dual not bent", 4);
    fx.trace = TraceSpec{{2, 1, 0, 0, 1}, 3, {{10, 22}, {0, 4}}};
    fx.set = "C0";
    fx.expect = {BentType::Plus, Regularity::NonWeaklyRegular, false, 3, 0, "C0", 14, 3, 6, "1+4y^6+18y^10+4y^12"};
    out.push_back(std::move(fx));
  }
  return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = make_fixtures();
  return all;
}

const Fixture& find_fixture(const std::string& name) {
  for (const auto& fx : fixtures()) {
    if (fx.name == name) return fx;
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

TernaryFunction trace_spec_function(const TraceSpec& spec) {
  return trace_function(ExtField(spec.modulus, spec.generator), spec.terms);
}

TernaryFunction fixture_function(const Fixture& fx) {
  if (fx.gmmf) return gmmf_build(*fx.gmmf);
  if (fx.trace) return trace_spec_function(*fx.trace);
  if (fx.poly) return eval_poly(parse_poly(*fx.poly, fx.n));
  throw std::logic_error("fixture without a construction");
}

}  // namespace bentcode
