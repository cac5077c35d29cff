#include "dtriples/triples.hpp"

#include "dtriples/curves.hpp"
#include "dtriples/error.hpp"

namespace dtriples {

namespace {

std::vector<char> square_table(const FieldCtx& F) {
  std::vector<char> sq(F.q(), 0);
  for (std::uint32_t i = 0; i < F.q(); ++i) sq[F.sqr(F.from_code(i)).code] = 1;
  return sq;
}

void require_fixed_product_domain(const FieldCtx& F, FieldElem k) {
  if (!F.is_prime_field() || F.p() <= 3) {
    throw Error(ErrorKind::Unsupported, "fixed-product counts need a prime field with p > 3");
  }
  if (k == F.zero()) throw Error(ErrorKind::Domain, "product must be nonzero");
}

FieldElem plus_one(const FieldCtx& F, FieldElem a, FieldElem b) { return F.add(F.mul(a, b), F.one()); }

}  // namespace

std::optional<std::array<FieldElem, 3>> is_triple(const FieldCtx& F, FieldElem a, FieldElem b, FieldElem c) {
  if (!F.odd_characteristic()) throw Error(ErrorKind::UnsupportedCharacteristic, "witnesses need odd characteristic");
  if (a == F.zero() || b == F.zero() || c == F.zero() || a == b || a == c || b == c) return std::nullopt;
  const auto r = sqrt_in_field(F, plus_one(F, a, b));
  if (!r) return std::nullopt;
  const auto s = sqrt_in_field(F, plus_one(F, a, c));
  if (!s) return std::nullopt;
  const auto t = sqrt_in_field(F, plus_one(F, b, c));
  if (!t) return std::nullopt;
  return std::array<FieldElem, 3>{*r, *s, *t};
}

std::vector<DiophTriple> enumerate_triples(const FieldCtx& F) {
  if (!F.odd_characteristic()) throw Error(ErrorKind::UnsupportedCharacteristic, "witnesses need odd characteristic");
  const auto sq = square_table(F);
  std::vector<DiophTriple> out;
  for (std::uint32_t ai = 1; ai < F.q(); ++ai) {
    const FieldElem a = F.from_code(ai);
    for (std::uint32_t bi = ai + 1; bi < F.q(); ++bi) {
      const FieldElem b = F.from_code(bi);
      if (!sq[plus_one(F, a, b).code]) continue;
      for (std::uint32_t ci = bi + 1; ci < F.q(); ++ci) {
        const FieldElem c = F.from_code(ci);
        if (!sq[plus_one(F, a, c).code] || !sq[plus_one(F, b, c).code]) continue;
        const auto w = is_triple(F, a, b, c);
        out.push_back({a, b, c, (*w)[0], (*w)[1], (*w)[2], F.mul(F.mul(a, b), c)});
      }
    }
  }
  return out;
}

long long count_triples(const FieldCtx& F) {
  const auto sq = square_table(F);
  long long n = 0;
  for (std::uint32_t ai = 1; ai < F.q(); ++ai) {
    const FieldElem a = F.from_code(ai);
    for (std::uint32_t bi = ai + 1; bi < F.q(); ++bi) {
      const FieldElem b = F.from_code(bi);
      if (!sq[plus_one(F, a, b).code]) continue;
      for (std::uint32_t ci = bi + 1; ci < F.q(); ++ci) {
        const FieldElem c = F.from_code(ci);
        if (sq[plus_one(F, a, c).code] && sq[plus_one(F, b, c).code]) ++n;
      }
    }
  }
  return n;
}

long long N_formula(std::uint64_t q) {
  const long long Q = static_cast<long long>(q);
  if (q % 2 == 0) return (Q - 1) * (Q - 2) * (Q - 3) / 6;
  if (q % 4 == 1) return (Q - 1) * (Q - 3) * (Q - 5) / 48;
  return (Q - 3) * (Q * Q - 6 * Q + 17) / 48;
}

long long count_triples_with_product(const FieldCtx& F, FieldElem k) {
  require_fixed_product_domain(F, k);
  long long n = 0;
  for (const auto& T : enumerate_triples(F)) n += T.product == k;
  return n;
}

long long e_count(const FieldCtx& F, FieldElem k) {
  const FieldElem target = F.neg(F.sqr(k));
  long long n = 0;
  for (std::uint32_t i = 0; i < F.q(); ++i) {
    const FieldElem u = F.sub(F.sqr(F.from_code(i)), F.one());
    n += F.sqr(u) == target;
  }
  return n;
}

long long f_count(const FieldCtx& F, FieldElem k) {
  const FieldElem target = F.sqr(k);
  long long n = 0;
  for (std::uint32_t i = 0; i < F.q(); ++i) {
    const FieldElem u = F.sub(F.sqr(F.from_code(i)), F.one());
    n += F.mul(u, F.sqr(u)) == target;
  }
  return n;
}

long long N_pk_formula96(const FieldCtx& F, FieldElem k) {
  require_fixed_product_domain(F, k);
  const long long p = F.p();
  const long long f = f_count(F, k);
  const FieldElem s = F.add(F.sqr(k), F.one());
  if (s == F.zero()) {
    const long long b = two_squares(F.p()).b;
    return 2 * (p * p + 4 * b * b - 10 * p + 8 * f + 13);
  }
  const long long a = trace(make_family_curve(Family::E, F, k));
  const long long c = trace(make_family_curve(Family::G, F, k));
  const long long d = trace(make_family_curve(Family::H, F, k));
  const long long e = e_count(F, k);
  const int chi = F.chi(s);
  return 2 * p * p + 2 * chi * (a * a - p) - 16 * p + 12 * c - 6 * d + 50 - 12 * e + 16 * f - 6 * chi;
}

bool on_X(const FieldCtx& F, const CorrespondencePoint& P) {
  const auto m = [&](FieldElem v) { return F.sub(F.sqr(v), F.one()); };
  return F.mul(F.mul(m(P.x), m(P.y)), m(P.z)) == F.sqr(P.k);
}

bool is_valid_point(const FieldCtx& F, const CorrespondencePoint& P) {
  const FieldElem x2 = F.sqr(P.x), y2 = F.sqr(P.y), z2 = F.sqr(P.z);
  const FieldElem v = F.mul(F.mul(P.k, F.sub(x2, y2)), F.mul(F.sub(x2, z2), F.sub(y2, z2)));
  return v != F.zero();
}

CorrespondencePoint triple_to_point(const FieldCtx& F, const OrderedTriple& T) {
  const bool ok = T.a != F.zero() && T.b != F.zero() && T.c != F.zero() && T.a != T.b && T.a != T.c &&
                  T.b != T.c && F.sqr(T.r) == plus_one(F, T.a, T.b) && F.sqr(T.s) == plus_one(F, T.a, T.c) &&
                  F.sqr(T.t) == plus_one(F, T.b, T.c);
  if (!ok) throw Error(ErrorKind::CorrespondenceDomain, "not a Diophantine triple with these witnesses");
  return {T.r, T.s, T.t, F.mul(F.mul(T.a, T.b), T.c)};
}

OrderedTriple point_to_triple(const FieldCtx& F, const CorrespondencePoint& P) {
  if (!on_X(F, P)) throw Error(ErrorKind::CorrespondenceDomain, "point is not on X");
  if (!is_valid_point(F, P)) {
    throw Error(ErrorKind::CorrespondenceDomain, "k (x^2-y^2)(x^2-z^2)(y^2-z^2) vanishes");
  }
  const auto m = [&](FieldElem v) { return F.sub(F.sqr(v), F.one()); };
  return {F.div(P.k, m(P.z)), F.div(P.k, m(P.y)), F.div(P.k, m(P.x)), P.x, P.y, P.z};
}

}  // namespace dtriples
