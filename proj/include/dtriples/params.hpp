#pragma once

// Exact rational parametrizations: the two-parameter-chart triple formula,
// the birational maps phi: Xbar -> P^3 and psi: P^3 -> Xbar, and circular
// Diophantine m-tuples built from the nested forms F_m and G_m.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dtriples/report.hpp"

namespace dtriples {

using Rat = mpq_class;

/// Parses "n", "-n" or "n/d" into a canonical rational. Throws Error(Usage).
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& r);
/// Exact rational square root, if one exists.
std::optional<Rat> rat_sqrt(const Rat& r);
bool is_rat_square(const Rat& r);

/// Homogeneous coordinates scaled so the first nonzero entry is 1.
class ProjPoint {
 public:
  /// Throws Error(BaseLocus) when every coordinate is zero.
  explicit ProjPoint(std::vector<Rat> coords);

  const std::vector<Rat>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_.at(i); }
  std::string to_string() const;
  /// Coprime integer coordinates with a positive leading entry, e.g. [3:5:8:1].
  std::string primitive_string() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  std::vector<Rat> coords_;
};

struct RatTriple {
  std::array<Rat, 3> a;
  bool degenerate = false;  // some a_i is zero or two coincide
};

/// a1 = 2(t1^2-1) t3 / D, a2 = 2(t2^2-1) t3 / D, a3 = D / (2 t3) with
/// D = t1^2 t3^2 - t2^2 - t3^2 + 1. Throws Error(DegenerateParameters) when D t3 = 0.
RatTriple triple_from_t(const Rat& t1, const Rat& t2, const Rat& t3);

/// ab + 1 is a square for every pair of entries.
bool pairwise_square_condition(const std::vector<Rat>& a);
/// a_{i-1} a_i + 1 is a square for every cyclically adjacent pair.
bool circular_square_condition(const std::vector<Rat>& a);

/// (x^2-w^2)(y^2-w^2)(z^2-w^2) = k^2 w^4 for [x:y:z:k:w].
bool on_Xbar(const ProjPoint& P);

/// [x:y:z:k:w] -> [(x+w)y : (x+w)z : kw : (x+w)w]. Throws Error(Domain) off
/// Xbar and Error(BaseLocus) when the image vanishes.
ProjPoint phi_map(const ProjPoint& P);
/// [t1:t2:t3:u] -> point of Xbar. Throws Error(BaseLocus) when the image vanishes.
ProjPoint psi_map(const ProjPoint& Q);

/// F_m(T_1, ..., T_m) and G_m(T_1, ..., T_m) by nested accumulation. Throw
/// Error(Pole) when (T_1 ... T_m)^2 = 1 and Error(Domain) when m < 3.
Rat circular_F(const std::vector<Rat>& T);
Rat circular_G(const std::vector<Rat>& T);

/// (F_m(T), F_m(T rotated by 1), ...) and likewise for G_m.
std::vector<Rat> circular_tuple(const std::vector<Rat>& T);
std::vector<Rat> circular_G_tuple(const std::vector<Rat>& T);

struct RecoveredT {
  std::vector<Rat> t;
  /// The regenerated tuple equals the input shifted left by this many places.
  std::size_t rotation = 0;
};

/// Sign choices t_i = (1 +- sqrt(1 + a_{i-1} a_i)) / a_i that regenerate the
/// tuple up to rotation. Throws Error(NotCircularTuple) on a non-square, and
/// Error(Domain) on a zero entry.
std::vector<RecoveredT> recover_t(const std::vector<Rat>& a);

struct AffineX {
  Rat x, y, z, k;
  friend bool operator==(const AffineX&, const AffineX&) = default;
};
std::string affine_str(const AffineX& P);

/// Delta from the symmetric parametrization.
Rat delta(const Rat& t1, const Rat& t2, const Rat& t3);
/// (G_3(t1,t2,t3), G_3(t2,t3,t1), G_3(t3,t1,t2), Delta).
AffineX L_map(const Rat& t1, const Rat& t2, const Rat& t3);
/// (s, t, a3 a1 / t1); see mu_as_printed for the literal formula.
std::array<Rat, 3> mu_map(const Rat& t1, const Rat& t2, const Rat& t3);
/// (s, t, a1 a2 / t2).
std::array<Rat, 3> mu_as_printed(const Rat& t1, const Rat& t2, const Rat& t3);
/// psi restricted to the chart u = 1, dehomogenised by w. Throws
/// Error(Pole) when w vanishes.
AffineX psi_affine(const Rat& T1, const Rat& T2, const Rat& T3);

/// Two reports: the Delta identity and L = psi . mu. Throws
/// Error(DegenerateParameters) at poles of any ingredient.
std::vector<VerifyReport> mu_and_delta_check(const Rat& t1, const Rat& t2, const Rat& t3);

/// Seeded rationals n/d with |n| <= bound and 1 <= d <= bound. Callers log
/// rejected samples through reject().
class RatSampler {
 public:
  explicit RatSampler(std::uint64_t seed, int bound = 20) : rng_(seed), bound_(bound) {}

  Rat next();
  std::vector<Rat> next_n(std::size_t n);
  void reject(std::string reason) { rejections_.push_back(std::move(reason)); }
  const std::vector<std::string>& rejections() const noexcept { return rejections_; }

 private:
  std::mt19937_64 rng_;
  int bound_;
  std::vector<std::string> rejections_;
};

}  // namespace dtriples
