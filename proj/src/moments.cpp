#include "dtriples/moments.hpp"

#include <cmath>

#include "dtriples/error.hpp"
#include "dtriples/modforms.hpp"

namespace dtriples {

namespace {

void require_odd_prime(std::uint32_t p) {
  if (p == 2 || !is_prime(p)) throw Error(ErrorKind::InvalidPrime, "needs an odd prime");
}

int phi_minus_one(std::uint32_t p) { return p % 4 == 1 ? 1 : -1; }

std::map<std::string, std::string> p_input(std::uint32_t p) { return {{"p", std::to_string(p)}}; }

}  // namespace

TraceTable::TraceTable(std::uint32_t p_) : p(p_), a(p_), b(p_) {
  require_odd_prime(p);
  const FieldCtx F = prime_field(p);
  for (std::uint32_t k = 0; k < p; ++k) {
    a[k] = trace_with_convention(Family::E, F, F.from_int(k)).a;
    b[k] = trace_with_convention(Family::F, F, F.from_int(k)).a;
  }
}

long long f2_term(Family family, std::uint32_t p) {
  const long long P = p;
  switch (family) {
    case Family::E: return -(3 + 2 * phi_minus_one(p)) * P;
    case Family::F: return -3 * P;
    case Family::H: return -3 * P - 2 * lambda_sq(p);
    default: throw Error(ErrorKind::Unsupported, "moments are defined for E, F and H");
  }
}

MomentRecord second_moment(std::uint32_t p, Family family) {
  require_odd_prime(p);
  if (family == Family::H && p <= 3) throw Error(ErrorKind::Domain, "family H needs p > 3");
  const Family model = family == Family::H ? Family::HTwist : family;
  MomentRecord r;
  r.p = p;
  r.family = family;
  r.f2 = f2_term(family, p);
  r.f3 = -cf_int(p);
  const FieldCtx F = prime_field(p);
  for (std::uint32_t k = 0; k < p; ++k) {
    const long long a = trace_with_convention(model, F, F.from_int(k)).a;
    r.M2 += a * a;
  }
  const long long P = p;
  r.formula_M2 = P * P + r.f2 + r.f3 + r.f0;
  return r;
}

CountPair sum_a_sq(std::uint32_t p) {
  const TraceTable T(p);
  CountPair out;
  out.inputs = p_input(p);
  for (std::uint32_t k = 1; k < p; ++k) {
    if ((std::uint64_t{k} * k + 1) % p == 0) continue;
    out.brute += T.a[k] * T.a[k];
  }
  const long long P = p;
  out.formula = (p % 4 == 1 ? P * P - 5 * P - 2 : P * P - P - 2) - cf_int(p);
  return out;
}

CountPair sum_b_sq(std::uint32_t p) {
  const TraceTable T(p);
  CountPair out;
  out.inputs = p_input(p);
  for (std::uint32_t k = 2; k + 1 < p; ++k) out.brute += T.b[k] * T.b[k];
  const long long P = p;
  out.formula = P * P - 3 * P - 4 - cf_int(p);
  return out;
}

std::vector<VerifyReport> twisted_sum(std::uint32_t p) {
  const TraceTable T(p);
  const FieldCtx F = prime_field(p);
  long long lhs = 0;
  for (std::uint32_t k = 1; k < p; ++k) {
    const FieldElem s = F.add(F.sqr(F.from_int(k)), F.one());
    if (s == F.zero()) continue;
    lhs += F.chi(s) * T.a[k] * T.a[k];
  }
  const long long P = p;
  const long long lam = lambda_sq(p);
  const int e = phi_minus_one(p);
  const long long star2 = -2 - lam * (1 + e) + 2 * e * P;
  const long long star1 = -2 - 2 * lam + 2 * e * P;
  return {make_report("moments.twisted", p_input(p), star2, lhs),
          make_report("moments.twisted_star", p_input(p), star1, lhs)};
}

VerifyReport prop_lem1_check(std::uint32_t p) {
  const TraceTable T(p);
  const FieldCtx F = prime_field(p);
  long long lhs = 2 * lambda_sq(p);
  for (std::uint32_t k = 1; k < p; ++k) {
    const FieldElem s = F.add(F.sqr(F.from_int(k)), F.one());
    if (F.chi(s) == 1) lhs += 2 * T.a[k] * T.a[k];
  }
  long long rhs = 0;
  for (std::uint32_t k = 2; k + 1 < p; ++k) rhs += T.b[k] * T.b[k];
  return make_report("moments.prop_lem1", p_input(p), lhs, rhs);
}

BiasEstimate bias_mu(Family family, std::uint32_t X) {
  if (X > newform_expansion().order()) throw Error(ErrorKind::OutOfRange, "X exceeds the series order");
  BiasEstimate est;
  double s2 = 0.0;
  double s3 = 0.0;
  for (std::uint32_t p = 3; p <= X; p += 2) {
    if (!is_prime(p)) continue;
    const double P = p;
    s2 += static_cast<double>(f2_term(family, p)) / P;
    s3 += -static_cast<double>(cf_int(p)) / (P * std::sqrt(P));
    ++est.primes;
  }
  if (est.primes > 0) {
    est.mu2 = s2 / static_cast<double>(est.primes);
    est.mu3 = s3 / static_cast<double>(est.primes);
  }
  return est;
}

}  // namespace dtriples
