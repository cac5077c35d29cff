#pragma once

// Finite fields F_q, q = p^m, with the order-2 character and square roots.
//
// Elements are stored as the base-p integer code sum c_i p^i of their
// coefficient vector over F_p[x]/(modulus). The code is canonical, so element
// equality and the total order used for enumeration are plain integer
// comparisons. FieldCtx is a cheap shared handle to immutable tables.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dtriples {

struct FieldElem {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

class FieldCtx {
 public:
  std::uint32_t p() const noexcept;
  unsigned m() const noexcept;
  std::uint32_t q() const noexcept;
  bool is_prime_field() const noexcept { return m() == 1; }
  bool odd_characteristic() const noexcept { return p() != 2; }

  /// Monic modulus, coefficients low to high (size m + 1). {0, 1} for prime fields.
  std::span<const std::uint32_t> modulus() const noexcept;

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  FieldElem from_int(std::int64_t v) const noexcept;
  FieldElem from_code(std::uint32_t code) const;
  FieldElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElem a) const;

  FieldElem add(FieldElem a, FieldElem b) const noexcept;
  FieldElem sub(FieldElem a, FieldElem b) const noexcept;
  FieldElem neg(FieldElem a) const noexcept;
  FieldElem mul(FieldElem a, FieldElem b) const noexcept;
  FieldElem sqr(FieldElem a) const noexcept { return mul(a, a); }
  FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;
  /// Throws Error(Domain) on zero.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

  /// Order-2 character with chi(0) = 0. Odd characteristic only.
  int chi(FieldElem a) const;

  /// Prime fields print the residue; extensions print "[c0,c1,...]".
  std::string to_string(FieldElem a) const;

  friend bool operator==(const FieldCtx& x, const FieldCtx& y) noexcept;

 private:
  struct Impl;
  explicit FieldCtx(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend FieldCtx build_extension(std::uint32_t p, unsigned m);
};

bool is_prime(std::uint64_t n) noexcept;

/// Field with p^m elements and the lexicographically least monic irreducible
/// modulus. Throws Error(InvalidPrime) when p is not prime.
FieldCtx build_extension(std::uint32_t p, unsigned m);
inline FieldCtx prime_field(std::uint32_t p) { return build_extension(p, 1); }
/// Field of order q; throws Error(InvalidPrime) unless q is a prime power.
FieldCtx field_of_order(std::uint32_t q);

/// phi_q(a) in {-1, 0, 1}. Throws Error(UnsupportedCharacteristic) in char 2.
int quadratic_character(const FieldCtx& F, FieldElem a);

/// Canonical root: the smaller code of {r, -r}. For prime fields this is the
/// root in [0, p/2].
std::optional<FieldElem> sqrt_in_field(const FieldCtx& F, FieldElem a);

/// Sum over t in F_q of phi_q(alpha t^2 + beta t + gamma), by direct summation.
long long char_sum_exhaustive(const FieldCtx& F, FieldElem alpha, FieldElem beta, FieldElem gamma);

/// Closed form for the same sum, branching on alpha and 4 alpha gamma - beta^2.
/// The case alpha = 0, beta != 0 evaluates to 0.
long long char_sum_formula(const FieldCtx& F, FieldElem alpha, FieldElem beta, FieldElem gamma);

struct TwoSquares {
  std::uint32_t a = 0;
  std::uint32_t b = 0;  // odd
};

/// p = a^2 + b^2 with b odd. Throws Error(NoRepresentation) unless p = 1 mod 4.
TwoSquares two_squares(std::uint32_t p);

}  // namespace dtriples
