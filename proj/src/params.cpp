#include "dtriples/params.hpp"

#include <sstream>

#include "dtriples/error.hpp"

namespace dtriples {

Rat parse_rat(const std::string& s) {
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0) throw Error(ErrorKind::Usage, "not a rational number: '" + s + "'");
  if (r.get_den() == 0) throw Error(ErrorKind::Usage, "zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

std::optional<Rat> rat_sqrt(const Rat& r) {
  if (sgn(r) < 0) return std::nullopt;
  const mpz_class& n = r.get_num();
  const mpz_class& d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  return Rat(mpz_class(sqrt(n)), mpz_class(sqrt(d)));
}

bool is_rat_square(const Rat& r) { return rat_sqrt(r).has_value(); }

ProjPoint::ProjPoint(std::vector<Rat> coords) : coords_(std::move(coords)) {
  std::size_t lead = 0;
  while (lead < coords_.size() && coords_[lead] == 0) ++lead;
  if (lead == coords_.size()) throw Error(ErrorKind::BaseLocus, "all coordinates vanish");
  const Rat scale = coords_[lead];
  for (auto& c : coords_) c /= scale;
}

std::string ProjPoint::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ':';
    s += rat_str(coords_[i]);
  }
  return s + ']';
}

std::string ProjPoint::primitive_string() const {
  mpz_class den = 1;
  for (const auto& c : coords_) den = lcm(den, mpz_class(c.get_den()));
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& c : coords_) {
    ints.push_back(mpz_class(c.get_num() * (den / c.get_den())));
    g = gcd(g, ints.back());
  }
  std::string s = "[";
  for (std::size_t i = 0; i < ints.size(); ++i) {
    if (i) s += ':';
    s += mpz_class(ints[i] / g).get_str();
  }
  return s + ']';
}

RatTriple triple_from_t(const Rat& t1, const Rat& t2, const Rat& t3) {
  const Rat D = t1 * t1 * t3 * t3 - t2 * t2 - t3 * t3 + 1;
  if (D == 0 || t3 == 0) throw Error(ErrorKind::DegenerateParameters, "t1^2 t3^2 - t2^2 - t3^2 + 1 or t3 vanishes");
  RatTriple T;
  T.a[0] = 2 * (t1 * t1 - 1) * t3 / D;
  T.a[1] = 2 * (t2 * t2 - 1) * t3 / D;
  T.a[2] = D / (2 * t3);
  T.degenerate = T.a[0] == 0 || T.a[1] == 0 || T.a[2] == 0 || T.a[0] == T.a[1] || T.a[0] == T.a[2] ||
                 T.a[1] == T.a[2];
  return T;
}

bool pairwise_square_condition(const std::vector<Rat>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (!is_rat_square(a[i] * a[j] + 1)) return false;
    }
  }
  return true;
}

bool circular_square_condition(const std::vector<Rat>& a) {
  const std::size_t m = a.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_rat_square(a[(i + m - 1) % m] * a[i] + 1)) return false;
  }
  return true;
}

bool on_Xbar(const ProjPoint& P) {
  if (P.size() != 5) return false;
  const Rat w2 = P[4] * P[4];
  const Rat lhs = (P[0] * P[0] - w2) * (P[1] * P[1] - w2) * (P[2] * P[2] - w2);
  return lhs == P[3] * P[3] * w2 * w2;
}

ProjPoint phi_map(const ProjPoint& P) {
  if (!on_Xbar(P)) throw Error(ErrorKind::Domain, "point is not on Xbar");
  const Rat& x = P[0];
  const Rat& w = P[4];
  const Rat xw = x + w;
  return ProjPoint({xw * P[1], xw * P[2], P[3] * w, xw * w});
}

ProjPoint psi_map(const ProjPoint& Q) {
  if (Q.size() != 4) throw Error(ErrorKind::Domain, "psi takes a point of P^3");
  const Rat& t1 = Q[0];
  const Rat& t2 = Q[1];
  const Rat& t3 = Q[2];
  const Rat& u = Q[3];
  const Rat u2 = u * u;
  const Rat t12 = t1 * t1;
  const Rat t22 = t2 * t2;
  const Rat S = t12 + t22 + t3 * t3;
  const Rat common = -t12 * t22 * u - u2 * u2 * u;
  return ProjPoint({
      (t12 + t22 - t3 * t3) * u2 * u + common,
      -t1 * u2 * u2 + t1 * S * u2 - t12 * t1 * t22,
      -t2 * u2 * u2 + t2 * S * u2 - t12 * t22 * t2,
      2 * t3 * (t1 - u) * (t1 + u) * (u - t2) * (t2 + u),
      S * u2 * u + common,
  });
}

namespace {

Rat circular_denominator(const std::vector<Rat>& T) {
  if (T.size() < 3) throw Error(ErrorKind::Domain, "circular tuples need m >= 3");
  Rat P = 1;
  for (const auto& t : T) P *= t;
  const Rat den = P * P - 1;
  if (den == 0) throw Error(ErrorKind::Pole, "T_1 T_2 ... T_m = +-1");
  return den;
}

std::vector<Rat> rotated(const std::vector<Rat>& T, std::size_t i) {
  std::vector<Rat> out(T.size());
  for (std::size_t j = 0; j < T.size(); ++j) out[j] = T[(i + j) % T.size()];
  return out;
}

}  // namespace

Rat circular_F(const std::vector<Rat>& T) {
  const Rat den = circular_denominator(T);
  const std::size_t m = T.size();
  Rat acc = 1 + T[m - 2] * T[m - 1];
  for (std::size_t i = m - 2; i-- > 0;) acc = 1 + T[i] * T[i + 1] * acc;
  return 2 * T[0] * acc / den;
}

Rat circular_G(const std::vector<Rat>& T) {
  const Rat den = circular_denominator(T);
  const std::size_t m = T.size();
  Rat acc = 2 + T[m - 1] * T[0];
  for (std::size_t i = m - 1; i-- > 1;) acc = 2 + T[i] * T[i + 1] * acc;
  return (1 + T[0] * T[1] * acc) / den;
}

std::vector<Rat> circular_tuple(const std::vector<Rat>& T) {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < T.size(); ++i) out.push_back(circular_F(rotated(T, i)));
  return out;
}

std::vector<Rat> circular_G_tuple(const std::vector<Rat>& T) {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < T.size(); ++i) out.push_back(circular_G(rotated(T, i)));
  return out;
}

std::vector<RecoveredT> recover_t(const std::vector<Rat>& a) {
  const std::size_t m = a.size();
  if (m < 3) throw Error(ErrorKind::Domain, "circular tuples need m >= 3");
  std::vector<Rat> roots(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) throw Error(ErrorKind::Domain, "tuple entries must be nonzero");
    const auto r = rat_sqrt(a[(i + m - 1) % m] * a[i] + 1);
    if (!r) throw Error(ErrorKind::NotCircularTuple, "1 + a_{i-1} a_i is not a square at i = " + std::to_string(i + 1));
    roots[i] = *r;
  }

  std::vector<RecoveredT> found;
  for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << m); ++signs) {
    std::vector<Rat> t(m);
    Rat P = 1;
    for (std::size_t i = 0; i < m; ++i) {
      const Rat root = (signs >> i) & 1 ? Rat(-roots[i]) : roots[i];
      t[i] = (1 + root) / a[i];
      P *= t[i];
    }
    if (P * P == 1) continue;
    const auto regen = circular_tuple(t);
    for (std::size_t rot = 0; rot < m; ++rot) {
      if (regen == rotated(a, rot)) {
        found.push_back({std::move(t), rot});
        break;
      }
    }
  }
  return found;
}

std::string affine_str(const AffineX& P) {
  return "(" + rat_str(P.x) + "," + rat_str(P.y) + "," + rat_str(P.z) + "," + rat_str(P.k) + ")";
}

Rat delta(const Rat& t1, const Rat& t2, const Rat& t3) {
  const Rat den = t1 * t1 * t2 * t2 * t3 * t3 - 1;
  if (den == 0) throw Error(ErrorKind::DegenerateParameters, "t1 t2 t3 = +-1");
  const Rat num = 8 * t1 * t2 * t3 * ((t1 * t2 + 1) * t1 * t3 + 1) * ((t1 * t3 + 1) * t2 * t3 + 1) *
                  ((t2 * t3 + 1) * t1 * t2 + 1);
  return num / (den * den * den);
}

AffineX L_map(const Rat& t1, const Rat& t2, const Rat& t3) {
  const auto G = circular_G_tuple({t1, t2, t3});
  return {G[0], G[1], G[2], delta(t1, t2, t3)};
}

std::array<Rat, 3> mu_map(const Rat& t1, const Rat& t2, const Rat& t3) {
  if (t1 == 0) throw Error(ErrorKind::DegenerateParameters, "t1 = 0");
  const auto a = circular_tuple({t1, t2, t3});
  const auto G = circular_G_tuple({t1, t2, t3});
  return {G[1], G[2], a[2] * a[0] / t1};
}

std::array<Rat, 3> mu_as_printed(const Rat& t1, const Rat& t2, const Rat& t3) {
  if (t2 == 0) throw Error(ErrorKind::DegenerateParameters, "t2 = 0");
  const auto a = circular_tuple({t1, t2, t3});
  const auto G = circular_G_tuple({t1, t2, t3});
  return {G[1], G[2], a[0] * a[1] / t2};
}

AffineX psi_affine(const Rat& T1, const Rat& T2, const Rat& T3) {
  const Rat T12 = T1 * T1;
  const Rat T22 = T2 * T2;
  const Rat S = T12 + T22 + T3 * T3;
  const Rat w = S - T12 * T22 - 1;
  if (w == 0) throw Error(ErrorKind::Pole, "psi leaves the affine chart");
  const Rat x = (T12 + T22 - T3 * T3) - T12 * T22 - 1;
  const Rat y = -T1 + T1 * S - T12 * T1 * T22;
  const Rat z = -T2 + T2 * S - T12 * T22 * T2;
  const Rat k = 2 * T3 * (T1 - 1) * (T1 + 1) * (1 - T2) * (T2 + 1);
  return {x / w, y / w, z / w, k / w};
}

std::vector<VerifyReport> mu_and_delta_check(const Rat& t1, const Rat& t2, const Rat& t3) {
  const std::map<std::string, std::string> inputs{{"t1", rat_str(t1)}, {"t2", rat_str(t2)}, {"t3", rat_str(t3)}};
  AffineX L;
  AffineX composed;
  try {
    L = L_map(t1, t2, t3);
    const auto m = mu_map(t1, t2, t3);
    composed = psi_affine(m[0], m[1], m[2]);
  } catch (const Error& e) {
    throw Error(ErrorKind::DegenerateParameters, e.what());
  }
  const Rat lhs = (L.x * L.x - 1) * (L.y * L.y - 1) * (L.z * L.z - 1);
  return {
      make_report("params.delta", inputs, rat_str(L.k * L.k), rat_str(lhs)),
      make_report("params.L_psi_mu", inputs, affine_str(L), affine_str(composed)),
  };
}

Rat RatSampler::next() {
  const auto span = static_cast<std::uint64_t>(2 * bound_ + 1);
  const long num = static_cast<long>(rng_() % span) - bound_;
  const long den = static_cast<long>(rng_() % static_cast<std::uint64_t>(bound_)) + 1;
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::vector<Rat> RatSampler::next_n(std::size_t n) {
  std::vector<Rat> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(next());
  return out;
}

}  // namespace dtriples
