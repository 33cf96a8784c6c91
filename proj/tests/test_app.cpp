#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "bentcode/app/fixtures.hpp"
#include "bentcode/app/inputs.hpp"
#include "bentcode/app/pipeline.hpp"
#include "bentcode/app/report_io.hpp"
#include "bentcode/app/search.hpp"
#include "bentcode/constructions/poly.hpp"

using namespace bentcode;

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = testing::TempDir() + "bentcode_" + name;
  std::ofstream(path) << content;
  return path;
}

struct CliResult {
  int code;
  std::string out;
};

CliResult cli(const std::string& args) {
  const std::string out = testing::TempDir() + "bentcode_cli_out.txt";
  const std::string cmd = std::string(BENTCODE_CLI) + " " + args + " > " + out + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  for (const auto& x : v)
    if (x.find(s) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Fixtures, AllPass) {
  ASSERT_EQ(fixtures().size(), 9u);
  for (const auto& fx : fixtures()) {
    const auto rep = run_fixture(fx);
    EXPECT_TRUE(rep.pass) << fx.name << ": "
                          << (rep.expectation_failures.empty() ? "" : rep.expectation_failures.front());
    ASSERT_TRUE(rep.code.has_value());
    EXPECT_EQ(enumerator_string(rep.code->distribution), fx.expect.enumerator) << fx.name;
  }
  EXPECT_THROW(find_fixture("ex-9.9"), std::invalid_argument);
}

TEST(Fixtures, ErratumFlaggedOnEvenPlus) {
  const auto rep = run_fixture(find_fixture("ex-3.3"));
  ASSERT_TRUE(rep.erratum.has_value());
  EXPECT_EQ(rep.erratum->tabulated, 30u);
  EXPECT_EQ(rep.erratum->derived, 32u);
  EXPECT_EQ(rep.erratum->measured, 32u);
  EXPECT_TRUE(rep.erratum->flagged);
  EXPECT_TRUE(contains(rep.notes, "reads 30, measured 32"));
}

TEST(Fixtures, SporadicDualNotBentNote) {
  const auto rep = run_fixture(find_fixture("g2"));
  EXPECT_TRUE(rep.pass);
  EXPECT_FALSE(rep.dual_bent);
  EXPECT_TRUE(contains(rep.notes, "dual not bent; theorem predictor skipped"));
  EXPECT_EQ(rep.parameters(), "[14,3,6]_3");
}

TEST(Pipeline, NotBentInput) {
  const auto rep = run_pipeline(eval_poly(parse_poly("x1 + x2", 2)));
  EXPECT_FALSE(rep.bent);
  EXPECT_FALSE(rep.pass);
  EXPECT_NE(rep.not_bent.find("not bent"), std::string::npos);
}

TEST(Pipeline, WeaklyRegularInput) {
  const auto rep = run_pipeline(diagonal({1, 1, 1, 1}));
  EXPECT_TRUE(rep.bent);
  EXPECT_FALSE(rep.pass);
  ASSERT_FALSE(rep.hypothesis_failures.empty());
  EXPECT_EQ(rep.hypothesis_failures.front(), "B-(f) is empty: not non-weakly regular");
}

TEST(Pipeline, ExplicitSetStillBuildsCode) {
  PipelineOptions opts;
  opts.set = "C0";
  const auto rep = run_pipeline(diagonal({1, 1, 1, 1}), opts);
  EXPECT_FALSE(rep.pass);
  ASSERT_TRUE(rep.code.has_value());
  EXPECT_EQ(rep.set, "C0");
}

TEST(Pipeline, AlternateSetFlagged) {
  PipelineOptions opts;
  opts.set = "D1";
  const auto rep = run_pipeline(fixture_function(find_fixture("ex-4.4")), opts);
  EXPECT_TRUE(rep.pass);
  EXPECT_TRUE(rep.alternate_set);
  EXPECT_EQ(rep.distribution_match, true);
}

TEST(Pipeline, StructureChecksOnExample) {
  const auto rep = run_fixture(find_fixture("ex-3.8"));
  ASSERT_TRUE(rep.structure.has_value());
  EXPECT_TRUE(rep.structure->ok());
  // the S0 - S1 identity is only evaluated up to n = 6
  EXPECT_FALSE(rep.structure->s0_s1.has_value());
  EXPECT_EQ(run_fixture(find_fixture("ex-3.3")).structure->s0_s1, true);
  EXPECT_EQ(rep.cardinality_match, true);
  EXPECT_EQ(rep.classifier->mismatches, 0u);
}

TEST(Search, MatchesAndIsDeterministic) {
  SearchParams p;
  p.m = 4;
  p.s = 1;
  p.count = 20;
  p.u_dim = 0;
  p.seed = 3;
  const auto a = run_search(p);
  EXPECT_EQ(a.generated, 20);
  EXPECT_EQ(a.eligible, 20);
  EXPECT_EQ(a.matched, 20);
  const auto b = run_search(p);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].report.code->distribution, b.records[i].report.code->distribution);
  }
}

TEST(Search, SingleTypeFamiliesAreSkipped) {
  SearchParams p;
  p.m = 3;
  p.s = 1;
  p.count = 5;
  p.u_dim = 1;
  const auto a = run_search(p);
  EXPECT_EQ(a.eligible, 0);
  EXPECT_EQ(a.skipped, 5);
}

TEST(Search, LineInPlaneDecidesPerInstance) {
  SearchParams p;
  p.m = 3;
  p.s = 2;
  p.count = 10;
  p.u_dim = 1;
  p.seed = 9;
  const auto a = run_search(p);
  EXPECT_EQ(a.eligible + a.skipped, 10);
  EXPECT_EQ(a.matched, a.eligible);
  for (const auto& [reason, count] : a.skip_reasons) EXPECT_NE(reason.find("degenerate"), std::string::npos);
}

TEST(Search, RejectsBadParams) {
  SearchParams p;
  p.m = 0;
  EXPECT_THROW(run_search(p), std::invalid_argument);
  p.m = 8;
  p.s = 3;
  EXPECT_THROW(run_search(p), std::invalid_argument);
}

TEST(Inputs, TableText) {
  const auto f = parse_table_text("# x^2\n1\n0, 1, 1\n");
  EXPECT_EQ(f, TernaryFunction(1, {0, 1, 1}));
  EXPECT_THROW(parse_table_text(""), InputError);
  EXPECT_THROW(parse_table_text("1 0 1"), InputError);
  EXPECT_THROW(parse_table_text("1 0 1 3"), InputError);
  EXPECT_THROW(parse_table_text("1 0 1 x"), InputError);
  EXPECT_THROW(parse_table_text("13 0"), InputError);
}

TEST(Inputs, GmmfJson) {
  const auto spec = parse_gmmf_json(
      R"({"m": 4, "s": 1, "family": [{"z": [0], "quadratic": [2,2,1,1]},
          {"z": [[1], 2], "quadratic": [1,1,2,1], "constant": 0}]})");
  EXPECT_EQ(gmmf_build(spec), fixture_function(find_fixture("ex-3.3")));
  const auto poly = parse_gmmf_json(R"({"m": 1, "s": 1, "family": [{"z": [0,1,2], "poly": "x1^2"}]})");
  EXPECT_EQ(poly.family[2], TernaryFunction(1, {0, 1, 1}));
  const auto tab = parse_gmmf_json(R"({"m": 1, "s": 1, "family": [{"z": [0,1,2], "table": [0,2,2]}]})");
  EXPECT_EQ(tab.family[0], TernaryFunction(1, {0, 2, 2}));
  EXPECT_THROW(parse_gmmf_json("{"), InputError);
  EXPECT_THROW(parse_gmmf_json(R"({"m": 1, "s": 1, "family": [{"z": [0,1], "poly": "x1"}]})"), InputError);
  EXPECT_THROW(parse_gmmf_json(R"({"m": 1, "s": 1, "family": [{"z": [0,1,1,2], "poly": "x1"}]})"), InputError);
  EXPECT_THROW(parse_gmmf_json(R"({"m": 1, "s": 1, "family": [{"z": [0,1,2]}]})"), InputError);
  EXPECT_THROW(parse_gmmf_json(R"({"m": 8, "s": 3, "family": []})"), InputError);
}

TEST(Inputs, TraceJson) {
  const auto spec = parse_trace_json(R"({"modulus": [2,1,0,0,1], "generator": [0,1,0,0], "terms": [[10,22],[0,4]]})");
  EXPECT_EQ(spec.generator, 3u);
  EXPECT_EQ(trace_spec_function(spec), fixture_function(find_fixture("g2")));
  EXPECT_THROW(parse_trace_json(R"({"modulus": [1], "generator": 1, "terms": []})"), InputError);
  EXPECT_THROW(parse_trace_json(R"({"modulus": [2,1,0,0,1], "generator": [0,1], "terms": []})"), InputError);
  EXPECT_THROW(parse_trace_json(R"({"generator": 1})"), InputError);
  EXPECT_THROW(read_file("/nonexistent/bentcode"), InputError);
}

TEST(Reports, JsonAndCsv) {
  const auto rep = run_fixture(find_fixture("ex-4.5"));
  const auto j = to_json(rep);
  EXPECT_EQ(j.at("enumerator"), "1+8y^18+60y^24+12y^30");
  EXPECT_EQ(j.at("case"), "OddMinus");
  EXPECT_EQ(j.at("match"), true);
  EXPECT_EQ(j.at("pass"), true);
  std::ostringstream csv;
  write_reports(csv, {rep}, Format::Csv);
  EXPECT_NE(csv.str().find("ex-4.5"), std::string::npos);
  const auto pj = to_json(predict_distribution(TheoremCase::EvenPlus, 6, 5));
  EXPECT_EQ(pj.at("length"), 98);
  EXPECT_EQ(parse_format("table"), Format::Table);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Cli, ExamplesExitZero) {
  const auto r = cli("examples ex-3.3 g2");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("[98,5,54]_3"), std::string::npos);
  EXPECT_NE(r.out.find("dual not bent; theorem predictor skipped"), std::string::npos);
  EXPECT_EQ(cli("examples --list").code, 0);
  EXPECT_EQ(cli("examples ex-4.4 --format json").code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("examples no-such-fixture").code, 2);
  EXPECT_EQ(cli("verify --poly 'x1 +' --n 2").code, 2);
  EXPECT_EQ(cli("verify --poly x3 --n 2").code, 2);
  EXPECT_EQ(cli("verify --n 2").code, 2);
  EXPECT_EQ(cli("verify --table /nonexistent/file").code, 2);
  EXPECT_EQ(cli("predict --case Nope --n 6 --r 5").code, 2);
  EXPECT_EQ(cli("predict --case EvenPlus --n 6 --r 2").code, 2);
  EXPECT_EQ(cli("--format xml predict --case EvenPlus --n 6 --r 5").code, 2);
  EXPECT_EQ(cli("search --m 8 --s 3").code, 2);
}

TEST(Cli, VerifyOutcomes) {
  const auto bad = cli("verify --poly 'x1 + x2' --n 2");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("not bent"), std::string::npos);
  const auto wr = cli("verify --poly 'x1^2 + x2^2 + x3^2 + x4^2' --n 4");
  EXPECT_EQ(wr.code, 1);
  EXPECT_NE(wr.out.find("B-(f) is empty: not non-weakly regular"), std::string::npos);

  const auto& fx = find_fixture("ex-3.9");
  const auto ok = cli("verify --poly '" + *fx.poly + "' --n 7");
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find("1+80y^162+558y^180+90y^198"), std::string::npos);

  const auto table = temp_file("table.txt", "4\n" + [] {
    std::string s;
    const auto f = fixture_function(find_fixture("g2"));
    for (auto v : f.table()) s += std::to_string(v) + " ";
    return s;
  }());
  EXPECT_EQ(cli("verify --table " + table + " --set C0").code, 1);

  const auto gmmf = temp_file("gmmf.json", R"({"m": 3, "s": 1, "family": [{"z": [0], "quadratic": [1,2,2]},
      {"z": [1, 2], "quadratic": [1,1,1]}]})");
  const auto g = cli("verify --gmmf " + gmmf + " --format json");
  EXPECT_TRUE(g.code == 0 || g.code == 1) << g.out;
  EXPECT_NE(g.out.find("\"n\": 5"), std::string::npos);

  const auto trace = temp_file("trace.json", R"({"modulus": [2,1,0,0,1], "generator": 3, "terms": [[10,22],[0,4]]})");
  const auto t = cli("verify --trace " + trace + " --set C0");
  EXPECT_NE(t.out.find("1+4y^6+18y^10+4y^12"), std::string::npos);
}

TEST(Cli, SearchAndPredict) {
  const auto s = cli("--seed 4 search --m 2 --s 1 --count 5 --u-dim 0");
  EXPECT_EQ(s.code, 0) << s.out;
  const auto p = cli("predict --case OddMinus --n 5 --r 4");
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("1+8y^18+60y^24+12y^30"), std::string::npos);
  const auto pj = cli("predict --case OddMinus --n 5 --r 4 --format csv");
  EXPECT_EQ(pj.code, 0);
}
