#include <cmath>

#include "dtriples/modforms.hpp"
#include "dtriples/moments.hpp"
#include "dtriples/varieties.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace dtriples;

namespace {

// Squared trace with the fiber convention, straight from a double-loop count:
// for a singular cubic q + 1 - #C is already +1, -1 or 0.
long long a2_oracle(long long p, long long a2, long long a4) {
  const long long a = oracle::trace(p, a2, a4);
  return a * a;
}

long long M2_E(long long p) {
  long long s = 0;
  for (long long k = 0; k < p; ++k) s += oracle::trace_E(p, k) * oracle::trace_E(p, k);
  return s;
}

}  // namespace

TEST_CASE("second moments at small primes") {
  const MomentRecord e5 = second_moment(5, Family::E);
  CHECK(e5.M2 == 1);
  CHECK(e5.formula_M2 == 1);
  CHECK(e5.f3 == 2);
  const MomentRecord e7 = second_moment(7, Family::E);
  CHECK(e7.M2 == 17);
  CHECK(e7.formula_M2 == 17);
  const MomentRecord f5 = second_moment(5, Family::F);
  CHECK(f5.M2 == 11);
  CHECK(f5.formula_M2 == 11);
  CHECK(f5.f0 == -1);
  CHECK(f5.f1 == 0);
  CHECK(f5.f2 == -15);
  CHECK_THROWS_KIND(second_moment(3, Family::H), ErrorKind::Domain);
  CHECK_THROWS_KIND(second_moment(9, Family::E), ErrorKind::InvalidPrime);
}

TEST_CASE("second moments match double-loop counts") {
  for (auto p : oracle::odd_primes_upto(43)) {
    CHECK(second_moment(static_cast<std::uint32_t>(p), Family::E).M2 == M2_E(p));
    long long f = 0, h = 0;
    for (long long k = 0; k < p; ++k) {
      const long long r1 = oracle::mod((k - 1) * (k - 1), p), r2 = oracle::mod((k + 1) * (k + 1), p);
      f += a2_oracle(p, oracle::mod(-(r1 + r2), p), r1 * r2 % p);
      const long long d = oracle::mod(k * k + 1, p), e = oracle::mod(k * k - 1, p);
      h += a2_oracle(p, 2 * d * d % p, e * e % p * (d * d % p) % p);
    }
    CHECK(second_moment(static_cast<std::uint32_t>(p), Family::F).M2 == f);
    if (p > 3) CHECK(second_moment(static_cast<std::uint32_t>(p), Family::H).M2 == h);
  }
}

TEST_CASE("second moment closed forms for every odd prime up to 199") {
  for (auto p : oracle::odd_primes_upto(199)) {
    const auto P = static_cast<std::uint32_t>(p);
    CHECK(second_moment(P, Family::E).match());
    CHECK(second_moment(P, Family::F).match());
    if (p > 3) CHECK(second_moment(P, Family::H).match());
    CHECK(second_moment(P, Family::E).f3 == -cf_int(P));
  }
}

TEST_CASE("the fixed-product model of H does not give the H second moment") {
  // The twist of F_k by -(k^2+1) is the curve whose moment has the closed form;
  // y^2 = x^3 + (2k^2+4)x^2 + k^4 x differs already at p = 7.
  const long long p = 7;
  long long cor = 0;
  for (long long k = 0; k < p; ++k) cor += a2_oracle(p, (2 * k * k + 4) % p, k * k % p * (k * k % p) % p);
  CHECK(cor != second_moment(7, Family::H).formula_M2);
}

TEST_CASE("trace sums") {
  CHECK(sum_a_sq(7).brute == 16);
  CHECK(sum_a_sq(7).formula == 16);
  CHECK(sum_a_sq(5).brute == 0);
  CHECK(sum_a_sq(5).formula == 0);
  CHECK(sum_b_sq(5).brute == 8);
  CHECK(sum_b_sq(5).formula == 8);

  const auto t5 = twisted_sum(5);
  CHECK(t5[0].oracle_value == "0");
  CHECK(t5[0].formula_value == "0");
  const auto t7 = twisted_sum(7);
  CHECK(t7[0].oracle_value == "-16");
  CHECK(t7[0].formula_value == "-16");

  CHECK(prop_lem1_check(5).formula_value == "8");
  CHECK(prop_lem1_check(5).match);

  for (auto p : oracle::odd_primes_upto(199)) {
    const auto P = static_cast<std::uint32_t>(p);
    CHECK(sum_a_sq(P).match());
    CHECK(sum_b_sq(P).match());
    for (const auto& r : twisted_sum(P)) CHECK(r.match);
    CHECK(prop_lem1_check(P).match);
  }
}

TEST_CASE("twisted sum recovered from X_k point counts") {
  for (auto p : oracle::odd_primes_upto(31)) {
    const FieldCtx F = prime_field(static_cast<std::uint32_t>(p));
    long long from_counts = 0;
    for (long long k = 1; k < p; ++k) {
      const long long s = oracle::mod(k * k + 1, p);
      if (s == 0) continue;
      const long long chi = oracle::legendre(s, p);
      // #X_k = 7 - 5p + p^2 + chi (a^2 - p), solved for chi a^2
      from_counts += count_Xk_brute(F, F.from_int(k)) - 7 + 5 * p - p * p + chi * p;
    }
    CHECK(std::to_string(from_counts) == twisted_sum(static_cast<std::uint32_t>(p))[0].oracle_value);
  }
}

TEST_CASE("bias averages") {
  const BiasEstimate e = bias_mu(Family::E, 10000);
  const BiasEstimate f = bias_mu(Family::F, 10000);
  const BiasEstimate h = bias_mu(Family::H, 10000);
  CHECK(e.primes == 1228);
  CHECK(std::fabs(e.mu2 + 3.0) <= 0.1);
  CHECK(f.mu2 == doctest::Approx(-3.0));
  CHECK(std::fabs(h.mu2 + 5.0) <= 0.2);
  CHECK(std::fabs(e.mu3) <= 0.1);
  CHECK_THROWS_KIND(bias_mu(Family::E, 20000), ErrorKind::OutOfRange);
}
