#include <sstream>

#include "dtriples/report.hpp"
#include "dtriples/suite.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace dtriples;

TEST_CASE("report emission") {
  VerifyReport r = make_report("triples.N", {{"q", "7"}}, std::string("2"), std::string("2"));
  CHECK(r.match);
  const auto j = nlohmann::json::parse(to_json_line(r));
  CHECK(j["task"] == "triples.N");
  CHECK(j["inputs"]["q"] == "7");
  CHECK(j["formula_value"] == "2");
  CHECK(j["oracle_value"] == "2");
  CHECK(j["match"] == true);
  CHECK(j["seed"].is_null());
  CHECK(to_json_line(r).find("\"match\":true") != std::string::npos);

  std::ostringstream empty;
  emit(empty, {}, OutputFormat::Json);
  emit(empty, {}, OutputFormat::Csv);
  emit(empty, {}, OutputFormat::Table);
  CHECK(empty.str().empty());
  CHECK(all_match({}));

  VerifyReport bad = make_report("x", {{"inputs", "a,b"}}, 1LL, 2LL);
  CHECK_FALSE(bad.match);
  CHECK_FALSE(all_match({r, bad}));
  std::ostringstream csv;
  emit(csv, {r, bad}, OutputFormat::Csv);
  CHECK(csv.str() ==
        "task,inputs,formula_value,oracle_value,match,runtime_ms\n"
        "triples.N,q=7,2,2,true,0\n"
        "x,\"inputs=a,b\",1,2,false,0\n");
}

TEST_CASE("canonical ordering compares integer inputs numerically") {
  std::vector<VerifyReport> v{
      make_report("b", {{"p", "11"}}, 0LL, 0LL),
      make_report("b", {{"p", "7"}}, 0LL, 0LL),
      make_report("a", {{"p", "100"}}, 0LL, 0LL),
      make_report("b", {{"p", "-3"}}, 0LL, 0LL),
  };
  sort_reports(v);
  CHECK(v[0].task == "a");
  CHECK(v[1].inputs.at("p") == "-3");
  CHECK(v[2].inputs.at("p") == "7");
  CHECK(v[3].inputs.at("p") == "11");
}

TEST_CASE("suite runs are deterministic and reject unknown groups") {
  SuiteConfig c;
  c.pmax = 31;
  c.samples = 50;
  c.seed = 9;
  const auto a = run_suite(c, {"params", "triples", "charsum"});
  const auto b = run_suite(c, {"charsum", "triples", "params"});
  std::ostringstream sa, sb;
  emit(sa, a, OutputFormat::Json);
  emit(sb, b, OutputFormat::Json);
  CHECK(sa.str() == sb.str());
  CHECK(all_match(a));
  CHECK(std::is_sorted(a.begin(), a.end(), report_less));
  for (const auto& r : a) {
    if (r.task.rfind("params.", 0) == 0 && r.task.find("example") == std::string::npos) CHECK(r.seed == 9u);
  }
  CHECK_THROWS_KIND(run_suite(c, {"nonsense"}), ErrorKind::Usage);
  CHECK(run_suite(c, {}).empty());

  bool found = false;
  for (const auto& r : run_suite(c, {"triples"})) {
    if (r.task == "triples.N" && r.inputs.at("q") == "7") {
      found = true;
      CHECK(r.formula_value == "2");
      CHECK(r.oracle_value == "2");
    }
  }
  CHECK(found);
}
