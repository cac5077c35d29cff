#include "dtriples/varieties.hpp"

#include <algorithm>
#include <vector>

#include "dtriples/curves.hpp"
#include "dtriples/error.hpp"

namespace dtriples {

namespace {

void require_odd(const FieldCtx& F) {
  if (!F.odd_characteristic()) throw Error(ErrorKind::UnsupportedCharacteristic, "needs odd characteristic");
}

void require_prime_odd(const FieldCtx& F) {
  require_odd(F);
  if (!F.is_prime_field()) throw Error(ErrorKind::Unsupported, "closed form is stated for prime fields");
}

// mult[c] = #{x : x^2 - 1 = c}
std::vector<long long> factor_multiplicities(const FieldCtx& F) {
  std::vector<long long> mult(F.q(), 0);
  for (std::uint32_t i = 0; i < F.q(); ++i) {
    const FieldElem x = F.from_code(i);
    ++mult[F.sub(F.sqr(x), F.one()).code];
  }
  return mult;
}

// roots[c] = #{y : y^2 = c}; valid in every characteristic
std::vector<long long> root_multiplicities(const FieldCtx& F) {
  std::vector<long long> roots(F.q(), 0);
  for (std::uint32_t i = 0; i < F.q(); ++i) ++roots[F.sqr(F.from_code(i)).code];
  return roots;
}

long long cube(long long q) { return q * q * q; }

std::string str(long long v) { return std::to_string(v); }

}  // namespace

long long count_Xk_brute(const FieldCtx& F, FieldElem k) {
  require_odd(F);
  if (k == F.zero()) throw Error(ErrorKind::Domain, "k = 0 lies outside the K3 fibers");
  const auto mult = factor_multiplicities(F);
  const FieldElem k2 = F.sqr(k);
  long long total = 0;
  for (std::uint32_t u = 1; u < F.q(); ++u) {
    if (mult[u] == 0) continue;
    for (std::uint32_t v = 1; v < F.q(); ++v) {
      if (mult[v] == 0) continue;
      const FieldElem w = F.div(k2, F.mul(F.from_code(u), F.from_code(v)));
      total += mult[u] * mult[v] * mult[w.code];
    }
  }
  return total;
}

long long count_Xk_formula(const FieldCtx& F, FieldElem k) {
  require_prime_odd(F);
  if (k == F.zero()) throw Error(ErrorKind::Domain, "k = 0 lies outside the K3 fibers");
  const long long p = F.p();
  const FieldElem s = F.add(F.sqr(k), F.one());
  if (s == F.zero()) return 7 - (6 + F.chi(F.from_int(-1))) * p + p * p + lambda_sq(F.p());
  const long long a = trace(make_family_curve(Family::E, F, k));
  return 7 - 5 * p + p * p + F.chi(s) * (a * a - p);
}

long long count_X_brute(const FieldCtx& F) {
  const auto mult = factor_multiplicities(F);
  const auto roots = root_multiplicities(F);
  long long total = 0;
  for (std::uint32_t u = 0; u < F.q(); ++u) {
    if (mult[u] == 0) continue;
    for (std::uint32_t v = 0; v < F.q(); ++v) {
      if (mult[v] == 0) continue;
      const FieldElem uv = F.mul(F.from_code(u), F.from_code(v));
      for (std::uint32_t w = 0; w < F.q(); ++w) {
        if (mult[w] == 0) continue;
        total += mult[u] * mult[v] * mult[w] * roots[F.mul(uv, F.from_code(w)).code];
      }
    }
  }
  return total;
}

long long count_X_formula(const FieldCtx& F) {
  const long long q = F.q();
  return F.odd_characteristic() ? cube(q) - 1 : cube(q);
}

long long count_X_minus_X0_brute(const FieldCtx& F) {
  const auto mult = factor_multiplicities(F);
  const auto roots = root_multiplicities(F);
  long long total = 0;
  for (std::uint32_t u = 1; u < F.q(); ++u) {
    if (mult[u] == 0) continue;
    for (std::uint32_t v = 1; v < F.q(); ++v) {
      if (mult[v] == 0) continue;
      const FieldElem uv = F.mul(F.from_code(u), F.from_code(v));
      for (std::uint32_t w = 1; w < F.q(); ++w) {
        if (mult[w] == 0) continue;
        total += mult[u] * mult[v] * mult[w] * roots[F.mul(uv, F.from_code(w)).code];
      }
    }
  }
  return total;
}

long long count_X_minus_X0_formula(const FieldCtx& F) {
  const long long q = F.q();
  if (!F.odd_characteristic()) return cube(q) - 3 * q * q + 3 * q - 1;
  return cube(q) - 6 * q * q + 12 * q - 9;
}

long long count_Xbar_brute(const FieldCtx& F) {
  const std::uint32_t q = F.q();
  // Coordinates (x, y, z, k, w); the leading nonzero one is fixed to 1.
  long long total = 0;
  for (int lead = 0; lead < 5; ++lead) {
    std::uint64_t tail = 1;
    for (int i = lead + 1; i < 5; ++i) tail *= q;
    for (std::uint64_t idx = 0; idx < tail; ++idx) {
      FieldElem c[5] = {F.zero(), F.zero(), F.zero(), F.zero(), F.zero()};
      c[lead] = F.one();
      std::uint64_t rest = idx;
      for (int i = 4; i > lead; --i) {
        c[i] = F.from_code(static_cast<std::uint32_t>(rest % q));
        rest /= q;
      }
      const FieldElem w2 = F.sqr(c[4]);
      FieldElem lhs = F.one();
      for (int i = 0; i < 3; ++i) lhs = F.mul(lhs, F.sub(F.sqr(c[i]), w2));
      if (lhs == F.mul(F.sqr(c[3]), F.sqr(w2))) ++total;
    }
  }
  return total;
}

long long count_Xbar_formula(const FieldCtx& F) {
  const long long q = F.q();
  return cube(q) + 3 * q * q + std::max<long long>(3 - static_cast<long long>(F.p()), 0);
}

CountPair fiber_compare(const FieldCtx& F, FieldElem k, FieldElem z) {
  require_odd(F);
  if (k == F.zero()) throw Error(ErrorKind::Domain, "k = 0 lies outside the K3 fibers");
  CountPair out;
  out.inputs = {{"q", str(F.q())}, {"k", F.to_string(k)}, {"z", F.to_string(z)}};

  const auto mult = factor_multiplicities(F);
  const FieldElem k2 = F.sqr(k);
  const FieldElem zf = F.sub(F.sqr(z), F.one());
  for (std::uint32_t u = 1; u < F.q(); ++u) {
    if (mult[u] == 0) continue;
    for (std::uint32_t v = 1; v < F.q(); ++v) {
      if (mult[v] == 0) continue;
      if (F.mul(F.mul(F.from_code(u), F.from_code(v)), zf) == k2) out.brute += mult[u] * mult[v];
    }
  }

  const long long q = F.q();
  if (zf == F.zero()) {
    out.formula = 0;
  } else if (F.sqr(z) == F.add(k2, F.one())) {
    out.formula = q - 3 - F.chi(F.from_int(-1));
  } else {
    out.formula = count_points(make_family_curve(Family::Ykz, F, k, z)) - 4;
  }
  return out;
}

SpecialLoci special_loci(const FieldCtx& F) {
  require_prime_odd(F);
  SpecialLoci s;
  const long long p = F.p();
  const std::map<std::string, std::string> inputs{{"p", str(p)}};
  s.n1.inputs = s.n2.inputs = s.n3.inputs = s.n4.inputs = inputs;

  const auto roots = root_multiplicities(F);
  for (std::uint32_t xi = 0; xi < F.q(); ++xi) {
    const FieldElem x = F.from_code(xi);
    const FieldElem x2 = F.sqr(x);
    for (std::uint32_t yi = 0; yi < F.q(); ++yi) {
      const FieldElem y = F.from_code(yi);
      const FieldElem y2 = F.sqr(y);
      const FieldElem xy = F.mul(F.sub(x2, F.one()), F.sub(y2, F.one()));
      for (std::uint32_t zi = 0; zi < F.q(); ++zi) {
        const FieldElem z = F.from_code(zi);
        const FieldElem z2 = F.sqr(z);
        const FieldElem rhs = F.mul(xy, F.sub(z2, F.one()));
        if (rhs == F.zero()) continue;
        const long long n = roots[rhs.code];
        if (n == 0) continue;
        const int equal_pairs = (x2 == y2) + (x2 == z2) + (y2 == z2);
        if (equal_pairs == 3) {
          s.n3.brute += n;
        } else if (equal_pairs == 1) {
          s.n4.brute += n;
        } else if (xi == 0 || yi == 0 || zi == 0) {
          s.n1.brute += n;
        } else {
          s.n2.brute += n;
        }
      }
    }
  }

  if (p % 4 == 1) {
    s.n3.formula = 4 * (p - 5) + 2;
    s.n4.formula = 6 * p * p - 45 * p + 99;
    s.n1.formula = 3 * (p * p - 10 * p + 25);
    s.n2.formula = p * p * p - 15 * p * p + 83 * p - 165;
  } else {
    s.n3.formula = 4 * (p - 3);
    s.n4.formula = 6 * p * p - 45 * p + 81;
    s.n1.formula = 3 * (p * p - 6 * p + 9);
    s.n2.formula = (p - 7) * (p - 5) * (p - 3);
  }
  return s;
}

}  // namespace dtriples
