#pragma once

// Diophantine triples over F_q: sets {a, b, c} of distinct nonzero elements
// with ab + 1, ac + 1 and bc + 1 all squares (0 included).

#include <array>
#include <optional>
#include <vector>

#include "dtriples/ff.hpp"

namespace dtriples {

/// a < b < c in code order; r^2 = ab + 1, s^2 = ac + 1, t^2 = bc + 1.
struct DiophTriple {
  FieldElem a, b, c;
  FieldElem r, s, t;
  FieldElem product;

  friend bool operator==(const DiophTriple&, const DiophTriple&) = default;
};

/// Canonical witnesses (r, s, t), or nothing. Throws in characteristic 2.
std::optional<std::array<FieldElem, 3>> is_triple(const FieldCtx& F, FieldElem a, FieldElem b, FieldElem c);

/// All triples, sorted lexicographically. Odd characteristic.
std::vector<DiophTriple> enumerate_triples(const FieldCtx& F);

/// Brute-force N(q); in characteristic 2 every element is a square.
long long count_triples(const FieldCtx& F);
/// Closed form for N(q); C(q-1, 3) when q is even.
long long N_formula(std::uint64_t q);

/// Triples with abc = k, by enumeration. Prime fields with p > 3, k != 0.
long long count_triples_with_product(const FieldCtx& F, FieldElem k);

/// 96 N(p, k) from traces of E_k, G_k, H_k and the root counts e, f.
long long N_pk_formula96(const FieldCtx& F, FieldElem k);

/// #{x : (x^2 - 1)^2 = -k^2} and #{x : (x^2 - 1)^3 = k^2}.
long long e_count(const FieldCtx& F, FieldElem k);
long long f_count(const FieldCtx& F, FieldElem k);

/// Ordered triple with witnesses: ab + 1 = r^2, ac + 1 = s^2, bc + 1 = t^2.
struct OrderedTriple {
  FieldElem a, b, c;
  FieldElem r, s, t;
  friend bool operator==(const OrderedTriple&, const OrderedTriple&) = default;
};

struct CorrespondencePoint {
  FieldElem x, y, z, k;
  friend bool operator==(const CorrespondencePoint&, const CorrespondencePoint&) = default;
};

bool on_X(const FieldCtx& F, const CorrespondencePoint& P);
/// k (x^2 - y^2)(x^2 - z^2)(y^2 - z^2) != 0
bool is_valid_point(const FieldCtx& F, const CorrespondencePoint& P);

/// (a, b, c, r, s, t) -> (r, s, t, abc). Throws Error(CorrespondenceDomain)
/// unless the input is a triple with matching witnesses.
CorrespondencePoint triple_to_point(const FieldCtx& F, const OrderedTriple& T);

/// (x, y, z, k) -> (k/(z^2-1), k/(y^2-1), k/(x^2-1), x, y, z). Throws
/// Error(CorrespondenceDomain) off X or on the invalid locus.
OrderedTriple point_to_triple(const FieldCtx& F, const CorrespondencePoint& P);

}  // namespace dtriples
