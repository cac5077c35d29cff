#pragma once

// Exact q-expansions of eta quotients, and the weight-4 level-8 newform
// f = eta(2 tau)^4 eta(4 tau)^4 = q - 4q^3 - 2q^5 + 24q^7 - ...

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "dtriples/report.hpp"

namespace dtriples {

/// Power series in q truncated after q^order, with exact integer coefficients.
class QSeries {
 public:
  explicit QSeries(std::size_t order) : coeffs_(order + 1) {}
  static QSeries one(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const mpz_class& operator[](std::size_t n) const { return coeffs_.at(n); }
  mpz_class& operator[](std::size_t n) { return coeffs_.at(n); }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  std::vector<mpz_class>& coeffs() noexcept { return coeffs_; }

  QSeries& operator+=(const QSeries& other);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  /// Multiplies by q^shift, dropping terms past the order.
  QSeries shifted(std::size_t shift) const;
  /// Exponent may be negative; needs a unit constant term in that case.
  QSeries pow(int e) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<mpz_class> coeffs_;
};

struct EtaFactor {
  int scale = 1;     // d in eta(d tau)
  int exponent = 1;  // e
};
using EtaQuotientSpec = std::vector<EtaFactor>;

/// prod_{n>=1} (1 - q^{d n}) truncated at order, via the pentagonal number theorem.
QSeries euler_product(int d, std::size_t order);

/// q^{sum d e / 24} prod_d (prod_n (1 - q^{dn}))^{e_d}. Throws
/// Error(UnsupportedSpec) when sum d e / 24 is not a nonnegative integer.
QSeries eta_quotient_qexp(const EtaQuotientSpec& spec, std::size_t order);

/// The eta quotient eta(2 tau)^4 eta(4 tau)^4.
EtaQuotientSpec newform_spec();

inline constexpr std::size_t kDefaultSeriesOrder = 10000;

/// Expansion of f, computed once per order and shared read-only.
const QSeries& newform_expansion(std::size_t order = kDefaultSeriesOrder);

/// c_f(n); throws Error(OutOfRange) when n = 0 or n > order.
mpz_class cf(std::size_t n, std::size_t order = kDefaultSeriesOrder);
long long cf_int(std::size_t n, std::size_t order = kDefaultSeriesOrder);

/// Multiplicativity on coprime pairs and the weight-4 prime-power recurrence
/// for odd primes, over all indices up to order.
VerifyReport hecke_check(std::size_t order);

/// |c(p)| <= 2 p^{3/2} for every prime p <= order, compared exactly as c^2 <= 4p^3.
VerifyReport deligne_check(std::size_t order);

}  // namespace dtriples
