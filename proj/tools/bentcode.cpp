// bentcode: reproduce, verify and search three-weight ternary codes from bent functions.
//
// exit codes: 0 pass, 1 mismatch or failed hypothesis, 2 usage / parse error

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bentcode/app/fixtures.hpp"
#include "bentcode/app/inputs.hpp"
#include "bentcode/app/pipeline.hpp"
#include "bentcode/app/report_io.hpp"
#include "bentcode/app/search.hpp"
#include "bentcode/constructions/poly.hpp"

using namespace bentcode;

namespace {

struct Globals {
  std::string format = "table";
  std::uint64_t seed = 1;
  int max_n = kDefaultMaxDimension;
};

int run_examples(const Globals& g, const std::vector<std::string>& names, bool list) {
  const Format fmt = parse_format(g.format);
  if (list) {
    for (const auto& fx : fixtures()) std::cout << fx.name << "  " << fx.summary << "\n";
    return 0;
  }
  std::vector<PipelineReport> reports;
  if (names.empty()) {
    for (const auto& fx : fixtures()) reports.push_back(run_fixture(fx));
  } else {
    for (const auto& name : names) reports.push_back(run_fixture(find_fixture(name)));
  }
  write_reports(std::cout, reports, fmt);
  for (const auto& r : reports) {
    if (!r.pass) return 1;
  }
  return 0;
}

struct VerifyArgs {
  std::string poly;
  int n = 0;
  std::string table, gmmf, trace, set;
  bool no_structure = false;
};

int run_verify(const Globals& g, const VerifyArgs& a) {
  const Format fmt = parse_format(g.format);
  const int sources = !a.poly.empty() + !a.table.empty() + !a.gmmf.empty() + !a.trace.empty();
  if (sources != 1) throw CLI::ValidationError("verify", "give exactly one of --poly, --table, --gmmf, --trace");
  TernaryFunction f;
  std::string name;
  if (!a.poly.empty()) {
    if (a.n < 1) throw CLI::ValidationError("--n", "--poly needs --n >= 1");
    require_dimension(a.n, g.max_n);
    f = eval_poly(parse_poly(a.poly, a.n));
    name = "poly";
  } else if (!a.table.empty()) {
    f = load_table_file(a.table, g.max_n);
    name = a.table;
  } else if (!a.gmmf.empty()) {
    f = gmmf_build(load_gmmf_file(a.gmmf, g.max_n));
    name = a.gmmf;
  } else {
    f = trace_spec_function(load_trace_file(a.trace, g.max_n));
    name = a.trace;
  }
  require_dimension(f.dim(), g.max_n);
  PipelineOptions opts;
  if (!a.set.empty()) opts.set = a.set;
  opts.structure = !a.no_structure;
  const auto rep = run_pipeline(f, opts, name);
  write_reports(std::cout, {rep}, fmt);
  return rep.pass ? 0 : 1;
}

struct SearchArgs {
  int m = 4, s = 1, count = 20, u_dim = -1;
  std::string side = "plus";
  bool no_mix = false;
};

int run_search_cmd(const Globals& g, const SearchArgs& a) {
  const Format fmt = parse_format(g.format);
  SearchParams p;
  p.m = a.m;
  p.s = a.s;
  p.count = a.count;
  p.seed = g.seed;
  p.u_dim = a.u_dim;
  p.mix = !a.no_mix;
  p.max_n = g.max_n;
  if (a.side != "plus" && a.side != "minus") throw CLI::ValidationError("--side", "must be plus or minus");
  p.side = a.side == "plus" ? BentType::Plus : BentType::Minus;
  const auto summary = run_search(p);
  write_search(std::cout, summary, fmt);
  return summary.matched == summary.eligible ? 0 : 1;
}

int run_predict(const Globals& g, const std::string& kase, int n, int r) {
  write_prediction(std::cout, predict_distribution(parse_case(kase), n, r), parse_format(g.format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ternary bent functions and their three-weight codes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--seed", g.seed, "search seed");
  app.add_option("--max-n", g.max_n, "largest ambient dimension accepted")->check(CLI::Range(1, kHardMaxDimension));

  auto* ex = app.add_subcommand("examples", "run bundled fixtures (all, or those named)");
  std::vector<std::string> names;
  bool list = false;
  ex->add_option("names", names, "fixture names");
  ex->add_flag("--list", list, "list fixtures");

  auto* ver = app.add_subcommand("verify", "full pipeline on one function");
  VerifyArgs va;
  ver->add_option("--poly", va.poly, "polynomial in x1..xn");
  ver->add_option("--n", va.n, "number of variables for --poly");
  ver->add_option("--table", va.table, "truth-table file");
  ver->add_option("--gmmf", va.gmmf, "GMMF spec (json)");
  ver->add_option("--trace", va.trace, "trace spec (json)");
  ver->add_option("--set", va.set, "explicit defining set, C0..C2 or D0..D2");
  ver->add_flag("--no-structure", va.no_structure, "skip structural checks");

  auto* se = app.add_subcommand("search", "random GMMF instances through the pipeline");
  SearchArgs sa;
  se->add_option("--m", sa.m, "inner dimension");
  se->add_option("--s", sa.s, "parameter dimension");
  se->add_option("--count", sa.count, "instances to generate");
  se->add_option("--side", sa.side, "plus or minus: which W set is the subspace U");
  se->add_option("--u-dim", sa.u_dim, "dim U (default: random in [0, s-1])");
  se->add_flag("--no-mix", sa.no_mix, "diagonal components only");

  auto* pr = app.add_subcommand("predict", "closed-form weight distribution");
  std::string kase;
  int pn = 0, prr = 0;
  pr->add_option("--case", kase, "EvenPlus, OddPlus, EvenMinus or OddMinus")->required();
  pr->add_option("--n", pn, "ambient dimension")->required();
  pr->add_option("--r", prr, "subspace dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*ex) return run_examples(g, names, list);
    if (*ver) return run_verify(g, va);
    if (*se) return run_search_cmd(g, sa);
    return run_predict(g, kase, pn, prr);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
