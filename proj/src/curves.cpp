#include "dtriples/curves.hpp"

#include "dtriples/error.hpp"

namespace dtriples {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::H: return "H";
    case Family::HTwist: return "HTwist";
    case Family::Ykz: return "Ykz";
    case Family::Wk: return "Wk";
    case Family::CM: return "CM";
    case Family::Custom: return "custom";
  }
  return "?";
}

std::string_view fiber_kind_name(FiberKind k) {
  switch (k) {
    case FiberKind::Smooth: return "smooth";
    case FiberKind::SplitMultiplicative: return "split-multiplicative";
    case FiberKind::NonsplitMultiplicative: return "nonsplit-multiplicative";
    case FiberKind::Additive: return "additive";
  }
  return "?";
}

WeierstrassCurve make_curve(const FieldCtx& F, FieldElem a1, FieldElem a2, FieldElem a3, FieldElem a4,
                            FieldElem a6) {
  return WeierstrassCurve{F, a1, a2, a3, a4, a6, Family::Custom, {}};
}

WeierstrassCurve make_family_curve(Family family, const FieldCtx& F, FieldElem k, std::optional<FieldElem> z) {
  if (!F.odd_characteristic()) {
    throw Error(ErrorKind::UnsupportedCharacteristic, "family curves need odd characteristic");
  }
  const FieldElem zero = F.zero();
  const FieldElem one = F.one();
  const auto c = [&](long long v) { return F.from_int(v); };
  const FieldElem k2 = F.sqr(k);
  WeierstrassCurve C{F, zero, zero, zero, zero, zero, family, {k}};

  switch (family) {
    case Family::E: {
      const FieldElem s = F.add(one, k2);
      C.a2 = F.mul(c(2), F.sqr(s));
      C.a4 = F.mul(k2, F.mul(s, F.sqr(s)));
      break;
    }
    case Family::F: {
      const FieldElem r1 = F.sqr(F.sub(k, one));
      const FieldElem r2 = F.sqr(F.add(k, one));
      C.a2 = F.neg(F.add(r1, r2));
      C.a4 = F.mul(r1, r2);
      break;
    }
    case Family::G:
      C.a2 = one;
      C.a4 = F.neg(F.div(k2, c(4)));
      break;
    case Family::H:
      C.a2 = F.add(F.mul(c(2), k2), c(4));
      C.a4 = F.sqr(k2);
      break;
    case Family::HTwist: {
      const FieldElem d = F.add(k2, one);
      const FieldElem e = F.sub(k2, one);
      C.a2 = F.mul(c(2), F.sqr(d));
      C.a4 = F.mul(F.sqr(e), F.sqr(d));
      break;
    }
    case Family::Ykz:
    case Family::Wk: {
      if (!z) throw Error(ErrorKind::MissingParameter, "z is required for the fiber families");
      C.params.push_back(*z);
      const FieldElem z2 = F.sqr(*z);
      const FieldElem Z = F.sub(z2, one);
      if (family == Family::Ykz) {
        // 4z^4 + (-2k^2 - 8) z^2 + (2k^2 + 4)
        C.a2 = F.add(F.add(F.mul(c(4), F.sqr(z2)), F.mul(F.sub(F.neg(F.mul(c(2), k2)), c(8)), z2)),
                     F.add(F.mul(c(2), k2), c(4)));
        C.a4 = F.mul(F.sqr(k2), F.sqr(Z));
      } else {
        // 4Z(k^2 - 2z^2 + 2) and -16 Z^3 (k^2 - z^2 + 1)
        C.a2 = F.mul(F.mul(c(4), Z), F.add(F.sub(k2, F.mul(c(2), z2)), c(2)));
        C.a4 = F.neg(F.mul(F.mul(c(16), F.mul(Z, F.sqr(Z))), F.add(F.sub(k2, z2), one)));
      }
      break;
    }
    case Family::CM:
      C.params.clear();
      C.a4 = F.neg(one);
      break;
    case Family::Custom:
      throw Error(ErrorKind::Domain, "custom curves are built with make_curve");
  }
  return C;
}

FieldElem discriminant(const WeierstrassCurve& C) {
  const FieldCtx& F = C.ctx;
  const auto c = [&](long long v) { return F.from_int(v); };
  const FieldElem b2 = F.add(F.sqr(C.a1), F.mul(c(4), C.a2));
  const FieldElem b4 = F.add(F.mul(c(2), C.a4), F.mul(C.a1, C.a3));
  const FieldElem b6 = F.add(F.sqr(C.a3), F.mul(c(4), C.a6));
  FieldElem b8 = F.mul(F.sqr(C.a1), C.a6);
  b8 = F.add(b8, F.mul(c(4), F.mul(C.a2, C.a6)));
  b8 = F.sub(b8, F.mul(C.a1, F.mul(C.a3, C.a4)));
  b8 = F.add(b8, F.mul(C.a2, F.sqr(C.a3)));
  b8 = F.sub(b8, F.sqr(C.a4));
  FieldElem d = F.neg(F.mul(F.sqr(b2), b8));
  d = F.sub(d, F.mul(c(8), F.mul(b4, F.sqr(b4))));
  d = F.sub(d, F.mul(c(27), F.sqr(b6)));
  d = F.add(d, F.mul(c(9), F.mul(b2, F.mul(b4, b6))));
  return d;
}

namespace {

FieldElem rhs(const WeierstrassCurve& C, FieldElem x) {
  const FieldCtx& F = C.ctx;
  return F.add(F.mul(F.add(F.mul(F.add(x, C.a2), x), C.a4), x), C.a6);
}

FieldElem lhs(const WeierstrassCurve& C, FieldElem x, FieldElem y) {
  const FieldCtx& F = C.ctx;
  return F.add(F.sqr(y), F.mul(y, F.add(F.mul(C.a1, x), C.a3)));
}

}  // namespace

bool on_curve(const WeierstrassCurve& C, const CurvePoint& P) {
  return P.infinity || lhs(C, P.x, P.y) == rhs(C, P.x);
}

long long count_points_exhaustive(const WeierstrassCurve& C) {
  const std::uint32_t q = C.ctx.q();
  long long n = 1;
  for (std::uint32_t x = 0; x < q; ++x) {
    const FieldElem r = rhs(C, {x});
    for (std::uint32_t y = 0; y < q; ++y) {
      if (lhs(C, {x}, {y}) == r) ++n;
    }
  }
  return n;
}

long long count_points(const WeierstrassCurve& C) {
  if (!C.is_short() || !C.ctx.odd_characteristic()) return count_points_exhaustive(C);
  const std::uint32_t q = C.ctx.q();
  long long n = 1;
  for (std::uint32_t x = 0; x < q; ++x) n += 1 + C.ctx.chi(rhs(C, {x}));
  return n;
}

long long trace(const WeierstrassCurve& C) {
  if (is_singular(C)) throw Error(ErrorKind::Domain, "trace of a singular curve; use trace_with_convention");
  return static_cast<long long>(C.ctx.q()) + 1 - count_points(C);
}

FiberKind reduction_kind(const WeierstrassCurve& C) {
  const FieldCtx& F = C.ctx;
  if (!F.odd_characteristic()) throw Error(ErrorKind::UnsupportedCharacteristic, "reduction type in char 2");
  if (!is_singular(C)) return FiberKind::Smooth;
  // Complete the square: y'^2 = x^3 + A x^2 + B x + D.
  const FieldElem half = F.inv(F.from_int(2));
  const FieldElem quarter = F.sqr(half);
  const FieldElem A = F.add(C.a2, F.mul(F.sqr(C.a1), quarter));
  const FieldElem B = F.add(C.a4, F.mul(F.mul(C.a1, C.a3), half));
  const FieldElem D = F.add(C.a6, F.mul(F.sqr(C.a3), quarter));
  const FieldElem three = F.from_int(3);
  const FieldElem two = F.from_int(2);
  for (std::uint32_t code = 0; code < F.q(); ++code) {
    const FieldElem x{code};
    const FieldElem f = F.add(F.mul(F.add(F.mul(F.add(x, A), x), B), x), D);
    const FieldElem df = F.add(F.mul(F.add(F.mul(three, x), F.mul(two, A)), x), B);
    if (f != F.zero() || df != F.zero()) continue;
    // f = (x - x0)^2 (x - s) with s = -A - 2 x0.
    const FieldElem s = F.sub(F.neg(A), F.mul(two, x));
    if (s == x) return FiberKind::Additive;
    return F.chi(F.sub(x, s)) == 1 ? FiberKind::SplitMultiplicative : FiberKind::NonsplitMultiplicative;
  }
  throw Error(ErrorKind::Domain, "singular point not found");
}

TraceRecord trace_with_convention(const WeierstrassCurve& C) {
  const FieldElem k = C.params.empty() ? C.ctx.zero() : C.params.front();
  const FiberKind kind = reduction_kind(C);
  switch (kind) {
    case FiberKind::Smooth: return {k, trace(C), kind};
    case FiberKind::SplitMultiplicative: return {k, 1, kind};
    case FiberKind::NonsplitMultiplicative: return {k, -1, kind};
    case FiberKind::Additive: return {k, 0, kind};
  }
  return {k, 0, kind};
}

TraceRecord trace_with_convention(Family family, const FieldCtx& F, FieldElem k) {
  return trace_with_convention(make_family_curve(family, F, k));
}

long long lambda_sq(std::uint32_t p) {
  if (p == 2 || !is_prime(p)) throw Error(ErrorKind::InvalidPrime, "lambda needs an odd prime");
  if (p % 4 == 3) return 0;
  const long long b = two_squares(p).b;
  return 4 * b * b;
}

long long lambda_trace(std::uint32_t p) { return trace(cm_curve(prime_field(p))); }

CurvePoint isogeny_psi(const WeierstrassCurve& ykz, const CurvePoint& P) {
  if (ykz.family != Family::Ykz || ykz.params.size() != 2) {
    throw Error(ErrorKind::Domain, "isogeny source must be a Ykz curve");
  }
  const FieldCtx& F = ykz.ctx;
  const FieldElem k = ykz.params[0];
  const FieldElem Z = F.sub(F.sqr(ykz.params[1]), F.one());
  if (k == F.zero() || Z == F.zero()) throw Error(ErrorKind::Domain, "need k != 0 and z^2 != 1");
  if (!on_curve(ykz, P)) throw Error(ErrorKind::Domain, "point is not on Y_{k,z}");
  if (P.infinity || P.x == F.zero()) return CurvePoint::at_infinity();

  const FieldElem k4Z2 = F.mul(F.sqr(F.sqr(k)), F.sqr(Z));
  const FieldElem x = P.x;
  FieldElem X = F.div(k4Z2, x);
  X = F.sub(X, F.mul(F.from_int(2), F.mul(F.sqr(k), Z)));
  X = F.add(X, x);
  X = F.add(X, F.mul(F.from_int(4), F.sqr(Z)));
  const FieldElem Y = F.div(F.mul(P.y, F.sub(F.sqr(x), k4Z2)), F.sqr(x));
  return CurvePoint::affine(X, Y);
}

bool on_fiber_curve(const FieldCtx& F, FieldElem k, FieldElem z, AffinePoint P) {
  const FieldElem Z = F.sub(F.sqr(z), F.one());
  const FieldElem l = F.mul(F.sub(F.sqr(P.x), F.one()), F.sub(F.sqr(P.y), F.one()));
  // compare l * (z^2 - 1) = k^2 to stay polynomial
  return F.mul(l, Z) == F.sqr(k);
}

AffinePoint fiber_map_phi(const FieldCtx& F, FieldElem k, FieldElem z, AffinePoint P, MapDirection dir) {
  const FieldElem one = F.one();
  const FieldElem Z = F.sub(F.sqr(z), one);
  if (k == F.zero() || Z == F.zero()) throw Error(ErrorKind::Domain, "need k != 0 and z^2 != 1");
  const FieldElem k2 = F.sqr(k);
  const FieldElem two = F.from_int(2);

  if (dir == MapDirection::Forward) {
    if (P.x == one) throw Error(ErrorKind::Pole, "denominator x - 1 vanishes");
    if (!on_fiber_curve(F, k, z, P)) throw Error(ErrorKind::Domain, "point is not on X_{k,z}");
    const FieldElem xp1 = F.add(P.x, one);
    const FieldElem X = F.div(F.mul(k2, F.mul(xp1, Z)), F.sub(P.x, one));
    const FieldElem Y = F.div(F.mul(F.mul(two, k2), F.mul(F.mul(xp1, P.y), F.sqr(Z))), F.sub(one, P.x));
    return {X, Y};
  }

  const FieldElem den_x = F.add(F.mul(k2, F.neg(Z)), P.x);  // k^2 (1 - z^2) + X
  if (den_x == F.zero()) throw Error(ErrorKind::Pole, "denominator k^2(1 - z^2) + X vanishes");
  if (P.x == F.zero()) throw Error(ErrorKind::Pole, "denominator 2X(1 - z^2) vanishes");
  const WeierstrassCurve Y = make_family_curve(Family::Ykz, F, k, z);
  if (!on_curve(Y, CurvePoint::affine(P.x, P.y))) throw Error(ErrorKind::Domain, "point is not on Y_{k,z}");
  const FieldElem x = F.sub(F.div(F.mul(two, P.x), den_x), one);
  const FieldElem y = F.div(P.y, F.mul(F.mul(two, P.x), F.neg(Z)));
  return {x, y};
}

}  // namespace dtriples
