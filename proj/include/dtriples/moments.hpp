#pragma once

// Second moments of the trace families E_k, F_k, H_k over F_p, the trace-sum
// identities tying them to the level-8 newform coefficients c_f(p), and the
// finite-X bias averages.

#include <cstdint>
#include <vector>

#include "dtriples/curves.hpp"
#include "dtriples/report.hpp"
#include "dtriples/varieties.hpp"

namespace dtriples {

struct MomentRecord {
  std::uint32_t p = 0;
  Family family = Family::E;
  long long M2 = 0;
  long long formula_M2 = 0;
  // M2 = p^2 + f1 p^{3/2} + f2 + f3 + f0 with the lower-order terms below.
  long long f0 = -1;
  long long f1 = 0;
  long long f2 = 0;
  long long f3 = 0;

  bool match() const noexcept { return M2 == formula_M2; }
};

/// Traces a_k (family E) and b_k (family F) for every k in F_p, computed once.
struct TraceTable {
  std::uint32_t p = 0;
  std::vector<long long> a;  // index k; singular members use the fiber convention
  std::vector<long long> b;

  explicit TraceTable(std::uint32_t p);
};

/// sum_k a_k^2 with the fiber convention, against the closed form. Family H
/// is evaluated on the HTwist model; p > 3 is required for it.
MomentRecord second_moment(std::uint32_t p, Family family);

/// Sum of a_k^2 over k^2 not in {-1, 0}; Sum of b_k^2 over k not in {-1, 0, 1}.
CountPair sum_a_sq(std::uint32_t p);
CountPair sum_b_sq(std::uint32_t p);

/// sum phi(k^2+1) a_k^2 over k^2 not in {-1, 0}, against the two equivalent
/// closed forms (tasks moments.twisted and moments.twisted_star).
std::vector<VerifyReport> twisted_sum(std::uint32_t p);

/// 2 lambda^2 + 2 sum a_k^2 over k with k^2+1 a nonzero square, against sum b_k^2.
VerifyReport prop_lem1_check(std::uint32_t p);

struct BiasEstimate {
  double mu2 = 0.0;
  double mu3 = 0.0;
  std::size_t primes = 0;
};

/// Averages of f2(p)/p and -c_f(p)/p^{3/2} over odd primes p <= X.
BiasEstimate bias_mu(Family family, std::uint32_t X);

/// f2(p) for E, F and H.
long long f2_term(Family family, std::uint32_t p);

}  // namespace dtriples
