#include "dtriples/report.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>

#include "json.hpp"

namespace dtriples {

VerifyReport make_report(std::string task, std::map<std::string, std::string> inputs, std::string formula,
                         std::string oracle) {
  VerifyReport r;
  r.task = std::move(task);
  r.inputs = std::move(inputs);
  r.match = formula == oracle;
  r.formula_value = std::move(formula);
  r.oracle_value = std::move(oracle);
  return r;
}

namespace {

std::optional<long long> as_integer(const std::string& s) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

int compare_values(const std::string& a, const std::string& b) {
  const auto ia = as_integer(a);
  const auto ib = as_integer(b);
  if (ia && ib) return *ia < *ib ? -1 : (*ia > *ib ? 1 : 0);
  return a.compare(b);
}

std::string join_inputs(const std::map<std::string, std::string>& inputs) {
  std::string s;
  for (const auto& [k, v] : inputs) {
    if (!s.empty()) s += ';';
    s += k + '=' + v;
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

bool report_less(const VerifyReport& a, const VerifyReport& b) {
  if (a.task != b.task) return a.task < b.task;
  auto ia = a.inputs.begin();
  auto ib = b.inputs.begin();
  for (; ia != a.inputs.end() && ib != b.inputs.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    const int c = compare_values(ia->second, ib->second);
    if (c != 0) return c < 0;
  }
  return ia == a.inputs.end() && ib != b.inputs.end();
}

void sort_reports(std::vector<VerifyReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), report_less);
}

std::string to_json_line(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["task"] = r.task;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;
  j["formula_value"] = r.formula_value;
  j["oracle_value"] = r.oracle_value;
  j["match"] = r.match;
  j["runtime_ms"] = r.runtime_ms;
  j["seed"] = r.seed ? nlohmann::ordered_json(std::to_string(*r.seed)) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

void emit(std::ostream& os, const std::vector<VerifyReport>& reports, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      for (const auto& r : reports) os << to_json_line(r) << '\n';
      break;
    case OutputFormat::Csv:
      if (reports.empty()) break;
      os << "task,inputs,formula_value,oracle_value,match,runtime_ms\n";
      for (const auto& r : reports) {
        os << csv_field(r.task) << ',' << csv_field(join_inputs(r.inputs)) << ',' << csv_field(r.formula_value)
           << ',' << csv_field(r.oracle_value) << ',' << (r.match ? "true" : "false") << ',' << r.runtime_ms
           << '\n';
      }
      break;
    case OutputFormat::Table: {
      if (reports.empty()) break;
      std::size_t w_task = 4, w_in = 6, w_f = 7, w_o = 6;
      for (const auto& r : reports) {
        w_task = std::max(w_task, r.task.size());
        w_in = std::max(w_in, join_inputs(r.inputs).size());
        w_f = std::max(w_f, r.formula_value.size());
        w_o = std::max(w_o, r.oracle_value.size());
      }
      const auto row = [&](const std::string& t, const std::string& i, const std::string& f, const std::string& o,
                           const std::string& m) {
        os << std::left << std::setw(int(w_task)) << t << "  " << std::setw(int(w_in)) << i << "  "
           << std::right << std::setw(int(w_f)) << f << "  " << std::setw(int(w_o)) << o << "  " << m << '\n';
      };
      row("task", "inputs", "formula", "oracle", "match");
      for (const auto& r : reports) {
        row(r.task, join_inputs(r.inputs), r.formula_value, r.oracle_value, r.match ? "ok" : "FAIL");
      }
      break;
    }
  }
}

bool all_match(const std::vector<VerifyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.match; });
}

}  // namespace dtriples
