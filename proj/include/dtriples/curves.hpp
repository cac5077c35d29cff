#pragma once

// Weierstrass curves over finite fields: the families attached to the
// Diophantine-triple threefold, exhaustive point counts and Frobenius traces.

#include <optional>
#include <string_view>
#include <vector>

#include "dtriples/ff.hpp"

namespace dtriples {

enum class Family {
  E,       // y^2 = x(k^2(1+k^2)^3 + 2(1+k^2)^2 x + x^2)
  F,       // y^2 = (x-(k-1)^2)(x-(k+1)^2)x
  G,       // y^2 = x^3 + x^2 - (k^2/4) x
  H,       // y^2 = x^3 + (2k^2+4) x^2 + k^4 x
  HTwist,  // twist of F_k by -(k^2+1): y^2 = x^3 + 2(k^2+1)^2 x^2 + (k^2-1)^2 (k^2+1)^2 x
  Ykz,     // fiber model of X_{k,z}
  Wk,      // 2-isogenous image of Ykz
  CM,      // y^2 = x^3 - x
  Custom,
};

std::string_view family_name(Family f);

struct WeierstrassCurve {
  FieldCtx ctx;
  FieldElem a1, a2, a3, a4, a6;
  Family family = Family::Custom;
  std::vector<FieldElem> params;  // k, then z for the two-parameter families

  bool is_short() const { return a1 == ctx.zero() && a3 == ctx.zero(); }
};

struct CurvePoint {
  bool infinity = true;
  FieldElem x, y;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(FieldElem x, FieldElem y) { return {false, x, y}; }
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct AffinePoint {
  FieldElem x, y;
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

enum class FiberKind { Smooth, SplitMultiplicative, NonsplitMultiplicative, Additive };
std::string_view fiber_kind_name(FiberKind k);

struct TraceRecord {
  FieldElem k;
  long long a = 0;
  FiberKind fiber_kind = FiberKind::Smooth;
};

WeierstrassCurve make_curve(const FieldCtx& F, FieldElem a1, FieldElem a2, FieldElem a3, FieldElem a4,
                            FieldElem a6);

/// z is required for Ykz and Wk. Singular members are allowed.
WeierstrassCurve make_family_curve(Family family, const FieldCtx& F, FieldElem k,
                                   std::optional<FieldElem> z = std::nullopt);
inline WeierstrassCurve cm_curve(const FieldCtx& F) { return make_family_curve(Family::CM, F, F.zero()); }

FieldElem discriminant(const WeierstrassCurve& C);
inline bool is_singular(const WeierstrassCurve& C) { return discriminant(C) == C.ctx.zero(); }
bool on_curve(const WeierstrassCurve& C, const CurvePoint& P);

/// Projective point count: character sum for short forms in odd
/// characteristic, exhaustive (x, y) scan otherwise.
long long count_points(const WeierstrassCurve& C);
long long count_points_exhaustive(const WeierstrassCurve& C);

/// q + 1 - #C(F_q). Throws Error(Domain) for singular curves.
long long trace(const WeierstrassCurve& C);

/// Node/cusp classification of a curve; Smooth when the discriminant is nonzero.
FiberKind reduction_kind(const WeierstrassCurve& C);

/// Trace for smooth members, +1 / -1 / 0 for split / nonsplit / additive ones.
TraceRecord trace_with_convention(const WeierstrassCurve& C);
TraceRecord trace_with_convention(Family family, const FieldCtx& F, FieldElem k);

/// lambda(p)^2 from p = a^2 + b^2: 4b^2 when p = 1 mod 4, else 0.
long long lambda_sq(std::uint32_t p);
/// lambda(p) = p + 1 - #{y^2 = x^3 - x}(F_p), by counting.
long long lambda_trace(std::uint32_t p);

/// The 2-isogeny Y_{k,z} -> W_k with kernel {O, (0,0)}.
/// Throws Error(Domain) if P is not on ykz or k = 0 or z^2 = 1.
CurvePoint isogeny_psi(const WeierstrassCurve& ykz, const CurvePoint& P);

enum class MapDirection { Forward, Inverse };

/// Points of X_{k,z}: (x^2 - 1)(y^2 - 1) = k^2 / (z^2 - 1).
bool on_fiber_curve(const FieldCtx& F, FieldElem k, FieldElem z, AffinePoint P);

/// Forward: X_{k,z} -> Y_{k,z}. Inverse: Y_{k,z} -> X_{k,z}.
/// Throws Error(Pole) at a vanishing denominator, Error(Domain) off the source curve.
AffinePoint fiber_map_phi(const FieldCtx& F, FieldElem k, FieldElem z, AffinePoint P, MapDirection dir);

}  // namespace dtriples
