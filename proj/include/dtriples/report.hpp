#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dtriples {

/// One formula-versus-oracle comparison. Numbers are carried as decimal or
/// fraction strings so no consumer has to guess at integer widths.
struct VerifyReport {
  std::string task;
  std::map<std::string, std::string> inputs;
  std::string formula_value;
  std::string oracle_value;
  bool match = false;
  double runtime_ms = 0.0;
  std::optional<std::uint64_t> seed;
};

/// Builds a report with match set by exact string equality.
VerifyReport make_report(std::string task, std::map<std::string, std::string> inputs, std::string formula,
                         std::string oracle);

template <class T>
VerifyReport make_report(std::string task, std::map<std::string, std::string> inputs, const T& formula,
                         const T& oracle) {
  return make_report(std::move(task), std::move(inputs), std::to_string(formula), std::to_string(oracle));
}

enum class OutputFormat { Json, Csv, Table };

/// Canonical order: task, then inputs (integer-valued inputs compare numerically).
void sort_reports(std::vector<VerifyReport>& reports);
bool report_less(const VerifyReport& a, const VerifyReport& b);

std::string to_json_line(const VerifyReport& r);
void emit(std::ostream& os, const std::vector<VerifyReport>& reports, OutputFormat format);

bool all_match(const std::vector<VerifyReport>& reports);

}  // namespace dtriples
