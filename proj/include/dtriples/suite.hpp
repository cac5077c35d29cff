#pragma once

// Batch verification: every closed form checked against its brute-force
// oracle, grouped by topic and emitted in a canonical order.

#include <cstdint>
#include <string>
#include <vector>

#include "dtriples/report.hpp"

namespace dtriples {

struct SuiteConfig {
  std::uint32_t pmax = 199;                  // prime bound for the trace-sum identities
  std::vector<std::uint32_t> qlist{9, 25, 27};  // extension fields added to the field sweeps
  std::size_t samples = 200;                 // rational samples per parametrization task
  std::uint64_t seed = 0;
  std::size_t N = 10000;                     // q-series order, also the bias bound X
  std::uint32_t count_pmax = 31;             // prime bound for O(p^3) brute-force sweeps
  bool timings = false;                      // record runtime_ms (breaks byte-identical output)
};

/// xk, xbar, triples, npk, moments, bias, params, modform, charsum, curves.
const std::vector<std::string>& suite_groups();

/// Runs the named groups ("all" selects every group) concurrently and
/// returns the reports sorted by task and inputs. Throws Error(Usage) on an
/// unknown group name.
std::vector<VerifyReport> run_suite(const SuiteConfig& config, const std::vector<std::string>& groups);

/// Individual groups, exposed for tests.
std::vector<VerifyReport> verify_xk(const SuiteConfig& config);
std::vector<VerifyReport> verify_xbar(const SuiteConfig& config);
std::vector<VerifyReport> verify_triples(const SuiteConfig& config);
std::vector<VerifyReport> verify_npk(const SuiteConfig& config);
std::vector<VerifyReport> verify_moments(const SuiteConfig& config);
std::vector<VerifyReport> verify_bias(const SuiteConfig& config);
std::vector<VerifyReport> verify_params(const SuiteConfig& config);
std::vector<VerifyReport> verify_modform(const SuiteConfig& config);
std::vector<VerifyReport> verify_charsum(const SuiteConfig& config);
std::vector<VerifyReport> verify_curves(const SuiteConfig& config);

}  // namespace dtriples
