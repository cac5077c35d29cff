#include "dtriples/ff.hpp"
#include "dtriples/modforms.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace dtriples;

TEST_CASE("eta quotient expansions") {
  const QSeries f = eta_quotient_qexp(newform_spec(), 11);
  const long long expected[] = {0, 1, 0, -4, 0, -2, 0, 24, 0, -11, 0, -44};
  for (int n = 0; n <= 11; ++n) CHECK(f[n].get_si() == expected[n]);

  const QSeries eta = eta_quotient_qexp({}, 7);
  CHECK(eta == QSeries::one(7));

  const QSeries e1 = euler_product(1, 7);
  const long long pent[] = {1, -1, -1, 0, 0, 1, 0, 1};
  for (int n = 0; n <= 7; ++n) CHECK(e1[n].get_si() == pent[n]);

  CHECK_THROWS_KIND(eta_quotient_qexp({{1, 1}}, 10), ErrorKind::UnsupportedSpec);
  CHECK_THROWS_KIND(eta_quotient_qexp({{1, -24}}, 10), ErrorKind::UnsupportedSpec);
}

TEST_CASE("series arithmetic") {
  const QSeries e = euler_product(1, 50);
  const QSeries inv = e.pow(-1);
  CHECK(e * inv == QSeries::one(50));
  // partition numbers
  CHECK(inv[10] == 42);
  CHECK(inv[50] == 204226);
  CHECK(e.pow(3) == e * e * e);
}

TEST_CASE("newform coefficients against naive products") {
  const auto naive = oracle::newform_coeffs(200);
  for (std::size_t n = 1; n <= 200; ++n) CHECK(cf_int(n) == naive[n]);
  CHECK(cf_int(7) == 24);
  CHECK(cf_int(2) == 0);
  CHECK(cf_int(9) == -11);
  CHECK_THROWS_KIND(cf(0), ErrorKind::OutOfRange);
  CHECK_THROWS_KIND(cf(kDefaultSeriesOrder + 1), ErrorKind::OutOfRange);
  CHECK_THROWS_KIND(cf(30, 20), ErrorKind::OutOfRange);
}

TEST_CASE("Hecke relations") {
  CHECK(cf_int(15) == 8);
  CHECK(cf_int(15) == cf_int(3) * cf_int(5));
  CHECK(cf_int(9) == cf_int(3) * cf_int(3) - 27);
  CHECK(cf_int(25) == -121);

  const VerifyReport h = hecke_check(kDefaultSeriesOrder);
  CHECK(h.match);
  CHECK(h.task == "modform.hecke");
  CHECK(std::stoll(h.formula_value) > 10000);
  CHECK_THROWS_KIND(hecke_check(24), ErrorKind::OutOfRange);

  // a corrupted coefficient must be caught
  QSeries broken = newform_expansion(100);
  broken[15] += 1;
  CHECK(broken[15] != broken[3] * broken[5]);
}

TEST_CASE("coefficient bounds and parity") {
  CHECK(deligne_check(kDefaultSeriesOrder).match);
  const QSeries& f = newform_expansion();
  for (std::size_t n = 2; n <= kDefaultSeriesOrder; n += 2) REQUIRE(f[n] == 0);
}
