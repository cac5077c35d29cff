#include <random>

#include "dtriples/ff.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace dtriples;

TEST_CASE("quadratic character values") {
  const FieldCtx F5 = prime_field(5), F7 = prime_field(7), F13 = prime_field(13);
  CHECK(quadratic_character(F5, F5.from_int(4)) == 1);
  CHECK(quadratic_character(F7, F7.from_int(3)) == -1);
  CHECK(quadratic_character(F13, F13.zero()) == 0);
  CHECK_THROWS_KIND(quadratic_character(prime_field(2), FieldElem{1}), ErrorKind::UnsupportedCharacteristic);
}

TEST_CASE("quadratic character agrees with Euler's criterion") {
  for (auto p : oracle::odd_primes_upto(101)) {
    const FieldCtx F = prime_field(static_cast<std::uint32_t>(p));
    for (long long a = 0; a < p; ++a) CHECK(F.chi(F.from_int(a)) == oracle::legendre(a, p));
  }
}

TEST_CASE("quadratic character is multiplicative in every small field") {
  for (std::uint32_t q : {3u, 5u, 9u, 25u, 27u, 49u}) {
    const FieldCtx F = field_of_order(q);
    for (std::uint32_t a = 1; a < q; ++a) {
      CHECK(F.chi(F.sqr(FieldElem{a})) == 1);
      for (std::uint32_t b = 1; b < q; b += 3) {
        CHECK(F.chi(F.mul(FieldElem{a}, FieldElem{b})) == F.chi(FieldElem{a}) * F.chi(FieldElem{b}));
      }
    }
  }
}

TEST_CASE("square roots") {
  const FieldCtx F13 = prime_field(13), F7 = prime_field(7), F5 = prime_field(5);
  CHECK(sqrt_in_field(F13, F13.from_int(4)) == F13.from_int(2));
  CHECK_FALSE(sqrt_in_field(F7, F7.from_int(3)).has_value());
  CHECK(sqrt_in_field(F5, F5.zero()) == F5.zero());

  for (std::uint32_t q : {3u, 7u, 11u, 9u, 25u, 27u, 81u, 121u}) {
    const FieldCtx F = field_of_order(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto r = sqrt_in_field(F, FieldElem{a});
      CHECK(r.has_value() == (F.chi(FieldElem{a}) >= 0));
      if (!r) continue;
      CHECK(F.sqr(*r) == FieldElem{a});
      CHECK(*r <= F.neg(*r));
    }
  }
}

TEST_CASE("character sum examples") {
  const FieldCtx F5 = prime_field(5), F7 = prime_field(7);
  const auto e = [](const FieldCtx& F, int a, int b, int c) {
    return char_sum_exhaustive(F, F.from_int(a), F.from_int(b), F.from_int(c));
  };
  const auto f = [](const FieldCtx& F, int a, int b, int c) {
    return char_sum_formula(F, F.from_int(a), F.from_int(b), F.from_int(c));
  };
  CHECK(e(F5, 1, 0, 1) == -1);
  CHECK(e(F5, 0, 0, 2) == -5);
  CHECK(e(F7, 1, 2, 1) == 6);
  CHECK(f(F5, 1, 0, 1) == -1);
  CHECK(f(F7, 0, 1, 0) == 0);
  CHECK(f(F5, 2, 0, 0) == -4);
}

TEST_CASE("character sum closed form matches the exhaustive sum everywhere") {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    const FieldCtx F = field_of_order(q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c)
          REQUIRE(char_sum_exhaustive(F, {a}, {b}, {c}) == char_sum_formula(F, {a}, {b}, {c}));
  }
  // and against a sum written with nothing but Euler's criterion
  for (long long p : {5, 7, 11}) {
    const FieldCtx F = prime_field(static_cast<std::uint32_t>(p));
    for (long long a = 0; a < p; ++a)
      for (long long b = 0; b < p; ++b)
        for (long long c = 0; c < p; ++c) {
          long long s = 0;
          for (long long t = 0; t < p; ++t) s += oracle::legendre(a * t * t + b * t + c, p);
          REQUIRE(char_sum_formula(F, F.from_int(a), F.from_int(b), F.from_int(c)) == s);
        }
  }
}

TEST_CASE("extension fields") {
  const FieldCtx F9 = build_extension(3, 2);
  CHECK(F9.q() == 9);
  CHECK(F9.modulus().size() == 3);
  const FieldCtx F5 = build_extension(5, 1);
  CHECK(F5.is_prime_field());
  CHECK(F5.q() == 5);
  CHECK(build_extension(2, 3).q() == 8);
  CHECK_THROWS_KIND(build_extension(9, 2), ErrorKind::InvalidPrime);
  CHECK_THROWS_KIND(field_of_order(12), ErrorKind::InvalidPrime);

  std::mt19937_64 rng(7);
  for (auto [p, m] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}, {5u, 2u}, {7u, 3u}, {31u, 2u}}) {
    const FieldCtx F = build_extension(p, m);
    // degree <= 3 moduli are irreducible iff they have no roots in F_p
    const auto mod = F.modulus();
    CHECK(mod.back() == 1u);
    for (std::uint32_t x = 0; x < p; ++x) {
      std::uint64_t v = 0;
      for (std::size_t i = mod.size(); i-- > 0;) v = (v * x + mod[i]) % p;
      if (m <= 3) CHECK(v != 0);
    }
    for (int i = 0; i < 200; ++i) {
      const FieldElem a = F.from_code(static_cast<std::uint32_t>(rng() % F.q()));
      CHECK(F.pow(a, F.q()) == a);
      if (a != F.zero()) CHECK(F.mul(a, F.inv(a)) == F.one());
    }
  }
}

TEST_CASE("extension field arithmetic matches an independent implementation") {
  for (auto [p, m] : {std::pair{3, 2}, {5, 2}, {3, 3}, {2, 3}}) {
    const FieldCtx F = build_extension(p, m);
    const oracle::GF G(p, m);
    // The two fields may use different moduli; compare structure instead:
    // the number of squares and of solutions to x^2 + x + 1 = 0.
    std::set<std::uint32_t> sq1;
    std::set<long long> sq2;
    long long roots1 = 0, roots2 = 0;
    for (std::uint32_t x = 0; x < F.q(); ++x) {
      sq1.insert(F.sqr(FieldElem{x}).code);
      sq2.insert(G.mul(x, x));
      roots1 += F.add(F.add(F.sqr(FieldElem{x}), FieldElem{x}), F.one()) == F.zero();
      roots2 += G.add(G.add(G.mul(x, x), x), 1) == 0;
    }
    CHECK(sq1.size() == sq2.size());
    CHECK(roots1 == roots2);
  }
}

TEST_CASE("sums of two squares") {
  CHECK(two_squares(5).a == 2);
  CHECK(two_squares(5).b == 1);
  CHECK(two_squares(13).a == 2);
  CHECK(two_squares(13).b == 3);
  CHECK_THROWS_KIND(two_squares(7), ErrorKind::NoRepresentation);
  for (std::uint32_t p = 5; p <= 10000; p += 4) {
    if (!is_prime(p)) continue;
    const TwoSquares t = two_squares(p);
    REQUIRE(std::uint64_t{t.a} * t.a + std::uint64_t{t.b} * t.b == p);
    CHECK(t.b % 2 == 1);
    CHECK(t.a > 0);
  }
}

TEST_CASE("element printing") {
  CHECK(prime_field(7).to_string(FieldElem{3}) == "3");
  const FieldCtx F9 = build_extension(3, 2);
  CHECK(F9.to_string(F9.from_coeffs(std::vector<std::uint32_t>{1, 2})) == "[1,2]");
}
