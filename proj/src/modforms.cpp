#include "dtriples/modforms.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <utility>

#include "dtriples/error.hpp"
#include "dtriples/ff.hpp"

namespace dtriples {

namespace {

using SparseSeries = std::vector<std::pair<std::size_t, int>>;  // (exponent, +-1)

// prod_{n>=1}(1 - x^n) = sum_k (-1)^k x^{k(3k-1)/2}, k over all integers, with x = q^d.
SparseSeries pentagonal(int d, std::size_t order) {
  SparseSeries terms{{0, 1}};
  for (long long k = 1;; ++k) {
    const auto g1 = static_cast<std::size_t>(d * (k * (3 * k - 1) / 2));
    const auto g2 = static_cast<std::size_t>(d * (k * (3 * k + 1) / 2));
    if (g1 > order) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    terms.emplace_back(g1, sign);
    if (g2 <= order) terms.emplace_back(g2, sign);
  }
  return terms;
}

void multiply_sparse(std::vector<mpz_class>& c, const SparseSeries& s) {
  for (std::size_t n = c.size(); n-- > 0;) {
    for (std::size_t j = 1; j < s.size(); ++j) {
      const auto [e, sign] = s[j];
      if (e > n) continue;
      if (sign > 0) {
        c[n] += c[n - e];
      } else {
        c[n] -= c[n - e];
      }
    }
  }
}

// Divides by a sparse series with constant term 1.
void divide_sparse(std::vector<mpz_class>& c, const SparseSeries& s) {
  for (std::size_t n = 0; n < c.size(); ++n) {
    for (std::size_t j = 1; j < s.size(); ++j) {
      const auto [e, sign] = s[j];
      if (e > n) continue;
      if (sign > 0) {
        c[n] -= c[n - e];
      } else {
        c[n] += c[n - e];
      }
    }
  }
}

QSeries inverse(const QSeries& a) {
  const mpz_class& c0 = a[0];
  if (c0 != 1 && c0 != -1) throw Error(ErrorKind::Domain, "series inverse needs a unit constant term");
  QSeries r(a.order());
  r[0] = c0;
  for (std::size_t n = 1; n <= a.order(); ++n) {
    mpz_class acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += a[j] * r[n - j];
    r[n] = -acc * c0;
  }
  return r;
}

}  // namespace

QSeries QSeries::one(std::size_t order) {
  QSeries s(order);
  s[0] = 1;
  return s;
}

QSeries& QSeries::operator+=(const QSeries& other) {
  if (other.order() != order()) throw Error(ErrorKind::Domain, "series orders differ");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  if (a.order() != b.order()) throw Error(ErrorKind::Domain, "series orders differ");
  QSeries r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

QSeries QSeries::shifted(std::size_t shift) const {
  QSeries r(order());
  for (std::size_t n = 0; n + shift <= order(); ++n) r[n + shift] = coeffs_[n];
  return r;
}

QSeries QSeries::pow(int e) const {
  QSeries base = e < 0 ? inverse(*this) : *this;
  unsigned u = e < 0 ? static_cast<unsigned>(-e) : static_cast<unsigned>(e);
  QSeries r = one(order());
  while (u) {
    if (u & 1) r = r * base;
    u >>= 1;
    if (u) base = base * base;
  }
  return r;
}

QSeries euler_product(int d, std::size_t order) {
  if (d <= 0) throw Error(ErrorKind::UnsupportedSpec, "eta scale must be positive");
  QSeries s(order);
  for (const auto& [e, sign] : pentagonal(d, order)) s[e] = sign;
  return s;
}

QSeries eta_quotient_qexp(const EtaQuotientSpec& spec, std::size_t order) {
  long long weight = 0;
  for (const auto& f : spec) {
    if (f.scale <= 0) throw Error(ErrorKind::UnsupportedSpec, "eta scale must be positive");
    weight += static_cast<long long>(f.scale) * f.exponent;
  }
  if (weight < 0 || weight % 24 != 0) {
    throw Error(ErrorKind::UnsupportedSpec, "q-power prefactor " + std::to_string(weight) + "/24 is not a nonnegative integer");
  }
  const auto shift = static_cast<std::size_t>(weight / 24);

  QSeries r = QSeries::one(order);
  std::vector<mpz_class>& c = r.coeffs();
  for (const auto& f : spec) {
    const SparseSeries s = pentagonal(f.scale, order);
    for (int i = 0; i < f.exponent; ++i) multiply_sparse(c, s);
    for (int i = 0; i < -f.exponent; ++i) divide_sparse(c, s);
  }
  return shift ? r.shifted(shift) : r;
}

EtaQuotientSpec newform_spec() { return {{2, 4}, {4, 4}}; }

const QSeries& newform_expansion(std::size_t order) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<const QSeries>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<const QSeries>(eta_quotient_qexp(newform_spec(), order));
  return *slot;
}

mpz_class cf(std::size_t n, std::size_t order) {
  if (n == 0 || n > order) {
    throw Error(ErrorKind::OutOfRange, "coefficient index " + std::to_string(n) + " outside 1.." + std::to_string(order));
  }
  return newform_expansion(order)[n];
}

long long cf_int(std::size_t n, std::size_t order) { return cf(n, order).get_si(); }

VerifyReport hecke_check(std::size_t order) {
  if (order < 25) throw Error(ErrorKind::OutOfRange, "hecke_check needs order >= 25");
  const QSeries& f = newform_expansion(order);
  long long checked = 0;
  long long held = 0;

  for (std::size_t m = 2; m * m < order; ++m) {
    for (std::size_t n = m + 1; m * n <= order; ++n) {
      if (std::gcd(m, n) != 1) continue;
      ++checked;
      if (f[m * n] == f[m] * f[n]) ++held;
    }
  }
  for (std::size_t p = 3; p * p <= order; p += 2) {
    if (!is_prime(p)) continue;
    const mpz_class p3 = mpz_class(p) * p * p;
    std::size_t prev = 1;  // p^{r-1}
    std::size_t cur = p;   // p^r
    while (cur <= order / p) {
      const std::size_t next = cur * p;
      ++checked;
      if (f[next] == f[p] * f[cur] - p3 * f[prev]) ++held;
      prev = cur;
      cur = next;
    }
  }
  return make_report("modform.hecke", {{"order", std::to_string(order)}}, checked, held);
}

VerifyReport deligne_check(std::size_t order) {
  const QSeries& f = newform_expansion(order);
  long long checked = 0;
  long long held = 0;
  for (std::size_t p = 2; p <= order; ++p) {
    if (!is_prime(p)) continue;
    ++checked;
    const mpz_class bound = mpz_class(4) * p * p * p;
    if (f[p] * f[p] <= bound) ++held;
  }
  return make_report("modform.deligne", {{"order", std::to_string(order)}}, checked, held);
}

}  // namespace dtriples
