#pragma once

// Point counts on the Diophantine-triple threefold
//   X: (x^2 - 1)(y^2 - 1)(z^2 - 1) = k^2,
// its fibers X_k (fixed k) and X_{k,z} (fixed k and z), and the projective
// closure Xbar in P^4. Brute-force counters sit next to the closed forms
// they are compared with.

#include <map>
#include <string>

#include "dtriples/ff.hpp"

namespace dtriples {

struct CountPair {
  long long brute = 0;
  long long formula = 0;
  std::map<std::string, std::string> inputs;

  bool match() const noexcept { return brute == formula; }
};

/// #{(x, y, z) : (x^2-1)(y^2-1)(z^2-1) = k^2}, by convolving the value
/// multiset of x^2 - 1. Throws Error(Domain) for k = 0.
long long count_Xk_brute(const FieldCtx& F, FieldElem k);

/// 7 - 5p + p^2 + phi(k^2+1)(a_k^2 - p), or 7 - (6 + phi(-1))p + p^2 + lambda^2
/// when k^2 = -1. Prime fields of odd characteristic, k != 0.
long long count_Xk_formula(const FieldCtx& F, FieldElem k);

/// #X(F_q) over all (x, y, z, k); works in characteristic 2.
long long count_X_brute(const FieldCtx& F);
long long count_X_formula(const FieldCtx& F);

/// Points of X with k != 0.
long long count_X_minus_X0_brute(const FieldCtx& F);
long long count_X_minus_X0_formula(const FieldCtx& F);

/// #Xbar(F_q): canonical representatives [x:y:z:k:w] of
/// (x^2-w^2)(y^2-w^2)(z^2-w^2) = k^2 w^4.
long long count_Xbar_brute(const FieldCtx& F);
long long count_Xbar_formula(const FieldCtx& F);

/// #X_{k,z}(F_q) against #Y_{k,z} - 4, or the special values at z^2 = 1 and
/// z^2 = k^2 + 1.
CountPair fiber_compare(const FieldCtx& F, FieldElem k, FieldElem z);

/// Points of X minus X_0 over F_p split by how x^2, y^2, z^2 coincide.
struct SpecialLoci {
  CountPair n1;  // pairwise distinct squares, xyz = 0
  CountPair n2;  // pairwise distinct squares, xyz != 0
  CountPair n3;  // x^2 = y^2 = z^2
  CountPair n4;  // exactly two of the squares agree
};

SpecialLoci special_loci(const FieldCtx& F);

}  // namespace dtriples
