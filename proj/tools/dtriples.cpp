// Command-line front end: batch verification, point counts, rational
// parametrizations and second-moment tables.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dtriples/error.hpp"
#include "dtriples/moments.hpp"
#include "dtriples/params.hpp"
#include "dtriples/suite.hpp"
#include "dtriples/triples.hpp"
#include "dtriples/varieties.hpp"

using namespace dtriples;

namespace {

struct Output {
  bool json = false;
  bool csv = false;

  OutputFormat format() const { return json ? OutputFormat::Json : csv ? OutputFormat::Csv : OutputFormat::Table; }
};

void add_format_flags(CLI::App* cmd, Output& out) {
  auto* j = cmd->add_flag("--json", out.json, "JSON lines");
  auto* c = cmd->add_flag("--csv", out.csv, "CSV with a header row");
  j->excludes(c);
}

int finish(const std::vector<VerifyReport>& reports, const Output& out) {
  emit(std::cout, reports, out.format());
  return all_match(reports) ? 0 : 1;
}

std::vector<Rat> parse_rats(const std::string& list) {
  std::vector<Rat> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  return out;
}

FieldElem parse_elem(const FieldCtx& F, long long k) { return F.from_int(k); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diophantine triples over fields: formulas checked against brute force"};
  app.require_subcommand(1);

  Output out;
  SuiteConfig config;
  int exit_code = 0;

  // verify
  std::vector<std::string> groups{"all"};
  auto* verify = app.add_subcommand("verify", "run verification groups");
  verify->add_option("groups", groups, "all or any of: " + [] {
    std::string s;
    for (const auto& g : suite_groups()) s += (s.empty() ? "" : ", ") + g;
    return s;
  }());
  verify->add_option("--seed", config.seed, "sampler seed");
  verify->add_option("--pmax", config.pmax, "prime bound for trace-sum identities");
  verify->add_option("--count-pmax", config.count_pmax, "prime bound for brute-force sweeps");
  verify->add_option("--n", config.N, "q-series order and bias bound");
  verify->add_option("--samples", config.samples, "rational samples per task");
  verify->add_option("--qlist", config.qlist, "extra field sizes")->delimiter(',');
  verify->add_flag("--timings", config.timings, "record runtime_ms");
  add_format_flags(verify, out);
  verify->callback([&] { exit_code = finish(run_suite(config, groups), out); });

  // count
  auto* count = app.add_subcommand("count", "brute-force counts next to closed forms");
  count->require_subcommand(1);
  std::uint32_t q = 0;
  std::optional<long long> k;
  std::string which;

  auto* ctriples = count->add_subcommand("triples", "Diophantine triples over F_q");
  ctriples->add_option("--q", q, "field size")->required();
  ctriples->add_option("--k", k, "fix the product abc = k (prime q > 3)");
  add_format_flags(ctriples, out);
  ctriples->callback([&] {
    const FieldCtx F = field_of_order(q);
    std::vector<VerifyReport> reports;
    if (k) {
      const FieldElem kk = parse_elem(F, *k);
      reports.push_back(make_report("triples.Npk96", {{"q", std::to_string(q)}, {"k", std::to_string(*k)}},
                                    N_pk_formula96(F, kk), 96 * count_triples_with_product(F, kk)));
    } else {
      reports.push_back(make_report("triples.N", {{"q", std::to_string(q)}}, N_formula(q), count_triples(F)));
    }
    exit_code = finish(reports, out);
  });

  auto* cvariety = count->add_subcommand("variety", "points on X_k, X or Xbar");
  cvariety->add_option("--q", q, "field size")->required();
  cvariety->add_option("--which", which, "Xk, X or Xbar")->required()->check(CLI::IsMember({"Xk", "X", "Xbar"}));
  cvariety->add_option("--k", k, "fiber parameter for Xk");
  add_format_flags(cvariety, out);
  cvariety->callback([&] {
    const FieldCtx F = field_of_order(q);
    const std::string qs = std::to_string(q);
    std::vector<VerifyReport> reports;
    if (which == "Xk") {
      if (!k) throw Error(ErrorKind::MissingParameter, "--which Xk needs --k");
      const FieldElem kk = parse_elem(F, *k);
      reports.push_back(make_report("varieties.Xk", {{"p", qs}, {"k", std::to_string(*k)}}, count_Xk_formula(F, kk),
                                    count_Xk_brute(F, kk)));
    } else if (which == "X") {
      reports.push_back(make_report("varieties.X", {{"q", qs}}, count_X_formula(F), count_X_brute(F)));
      reports.push_back(
          make_report("varieties.X_minus_X0", {{"q", qs}}, count_X_minus_X0_formula(F), count_X_minus_X0_brute(F)));
    } else {
      reports.push_back(make_report("varieties.Xbar", {{"q", qs}}, count_Xbar_formula(F), count_Xbar_brute(F)));
    }
    exit_code = finish(reports, out);
  });

  // param generate
  auto* param = app.add_subcommand("param", "exact rational parametrizations");
  param->require_subcommand(1);
  auto* generate = param->add_subcommand("generate", "tuple from parameters t");
  std::string tlist;
  std::optional<std::size_t> circular;
  generate->add_option("--t", tlist, "comma-separated rationals, e.g. 2,3,1/2")->required();
  generate->add_option("--circular", circular, "build a circular m-tuple from m parameters");
  add_format_flags(generate, out);
  generate->callback([&] {
    const auto t = parse_rats(tlist);
    std::vector<Rat> tuple;
    bool squares = false;
    if (circular) {
      if (t.size() != *circular) throw Error(ErrorKind::Usage, "--circular m needs exactly m values of t");
      tuple = circular_tuple(t);
      squares = circular_square_condition(tuple);
    } else {
      if (t.size() != 3) throw Error(ErrorKind::Usage, "expected three values of t");
      const RatTriple T = triple_from_t(t[0], t[1], t[2]);
      tuple.assign(T.a.begin(), T.a.end());
      squares = pairwise_square_condition(tuple);
    }
    if (out.json) {
      nlohmann::ordered_json j;
      j["t"] = nlohmann::ordered_json::array();
      for (const auto& v : t) j["t"].push_back(rat_str(v));
      j["tuple"] = nlohmann::ordered_json::array();
      for (const auto& v : tuple) j["tuple"].push_back(rat_str(v));
      j["square_conditions"] = squares;
      std::cout << j.dump() << '\n';
    } else {
      for (std::size_t i = 0; i < tuple.size(); ++i) std::cout << (i ? " " : "") << rat_str(tuple[i]);
      std::cout << '\n';
    }
    exit_code = squares ? 0 : 1;
  });

  // moments
  auto* moments = app.add_subcommand("moments", "second moments M_2,p per prime");
  std::string family = "E";
  std::uint32_t pmax = 199;
  moments->add_option("--family", family, "E, F or H")->check(CLI::IsMember({"E", "F", "H"}));
  moments->add_option("--pmax", pmax, "largest prime");
  add_format_flags(moments, out);
  moments->callback([&] {
    const Family fam = family == "E" ? Family::E : family == "F" ? Family::F : Family::H;
    bool ok = true;
    if (out.csv) std::cout << "p,family,M2,formula_M2,f0,f1,f2,f3,match\n";
    for (std::uint32_t p = fam == Family::H ? 5 : 3; p <= pmax; ++p) {
      if (!is_prime(p)) continue;
      const MomentRecord r = second_moment(p, fam);
      ok = ok && r.match();
      if (out.json) {
        nlohmann::ordered_json j;
        j["p"] = std::to_string(r.p);
        j["family"] = family;
        j["M2"] = std::to_string(r.M2);
        j["formula_M2"] = std::to_string(r.formula_M2);
        j["f_terms"] = {std::to_string(r.f0), std::to_string(r.f1), std::to_string(r.f2), std::to_string(r.f3)};
        j["match"] = r.match();
        std::cout << j.dump() << '\n';
      } else if (out.csv) {
        std::cout << r.p << ',' << family << ',' << r.M2 << ',' << r.formula_M2 << ',' << r.f0 << ',' << r.f1 << ','
                  << r.f2 << ',' << r.f3 << ',' << (r.match() ? "true" : "false") << '\n';
      } else {
        std::cout << "p=" << r.p << "  M2=" << r.M2 << "  formula=" << r.formula_M2 << (r.match() ? "  ok" : "  FAIL")
                  << '\n';
      }
    }
    exit_code = ok ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
