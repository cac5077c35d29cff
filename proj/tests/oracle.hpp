#pragma once

// Independent brute-force oracles. Nothing here touches the library: prime
// fields use plain int64 residues, and small extension fields get their own
// polynomial arithmetic with a modulus found by root search. Every count is
// the dumbest loop that could possibly work.

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using i64 = long long;

inline i64 mod(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline i64 powmod(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline i64 inv(i64 a, i64 p) { return powmod(a, p - 2, p); }

// Euler's criterion
inline int legendre(i64 a, i64 p) {
  a = mod(a, p);
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<i64> odd_primes_upto(i64 n) {
  std::vector<i64> out;
  for (i64 p = 3; p <= n; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

// Projective points of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_p.
inline i64 count_points(i64 p, i64 a1, i64 a2, i64 a3, i64 a4, i64 a6) {
  i64 n = 1;
  for (i64 x = 0; x < p; ++x) {
    for (i64 y = 0; y < p; ++y) {
      const i64 lhs = mod(y * y + a1 * x % p * y + a3 * y, p);
      const i64 rhs = mod(x * x % p * x + a2 * x % p * x + a4 * x + a6, p);
      n += lhs == rhs;
    }
  }
  return n;
}

inline i64 trace(i64 p, i64 a2, i64 a4, i64 a6 = 0) { return p + 1 - count_points(p, 0, a2, 0, a4, a6); }

// a_{k,p} for y^2 = x^3 + 2(1+k^2)^2 x^2 + k^2 (1+k^2)^3 x
inline i64 trace_E(i64 p, i64 k) {
  const i64 s = mod(1 + k * k, p);
  return trace(p, 2 * s % p * s % p, k * k % p * (s * s % p * s % p) % p);
}

// b_{k,p} for y^2 = (x - (k-1)^2)(x - (k+1)^2) x
inline i64 trace_F(i64 p, i64 k) {
  const i64 r1 = mod((k - 1) * (k - 1), p), r2 = mod((k + 1) * (k + 1), p);
  return trace(p, mod(-(r1 + r2), p), r1 * r2 % p);
}

// (x^2-1)(y^2-1)(z^2-1) = k^2 by a triple loop.
inline i64 count_Xk(i64 p, i64 k) {
  i64 n = 0;
  const i64 k2 = mod(k * k, p);
  for (i64 x = 0; x < p; ++x)
    for (i64 y = 0; y < p; ++y)
      for (i64 z = 0; z < p; ++z)
        n += mod((x * x - 1) % p * ((y * y - 1) % p) % p * ((z * z - 1) % p), p) == k2;
  return n;
}

// Diophantine triples over F_p with product restricted to k (or any when k < 0).
inline i64 count_triples_prime(i64 p, i64 k = -1) {
  std::set<i64> squares;
  for (i64 x = 0; x < p; ++x) squares.insert(x * x % p);
  const auto sq = [&](i64 v) { return squares.count(mod(v, p)) > 0; };
  i64 n = 0;
  for (i64 a = 1; a < p; ++a)
    for (i64 b = a + 1; b < p; ++b)
      for (i64 c = b + 1; c < p; ++c) {
        if (k >= 0 && a * b % p * c % p != k) continue;
        n += sq(a * b + 1) && sq(a * c + 1) && sq(b * c + 1);
      }
  return n;
}

// GF(p^m) for m <= 3: elements are coefficient vectors packed base p.
struct GF {
  i64 p, m, q;
  std::vector<i64> modulus;  // monic, degree m, low to high

  explicit GF(i64 p_, i64 m_) : p(p_), m(m_), q(1) {
    for (i64 i = 0; i < m; ++i) q *= p;
    if (m == 1) {
      modulus = {0, 1};
      return;
    }
    // Degree <= 3 polynomials are irreducible iff they have no roots.
    for (i64 code = 0; code < q; ++code) {
      std::vector<i64> f = unpack(code);
      f.push_back(1);
      bool root = false;
      for (i64 x = 0; x < p && !root; ++x) {
        i64 v = 0;
        for (i64 i = m; i >= 0; --i) v = (v * x + f[i]) % p;
        root = v == 0;
      }
      if (!root) {
        modulus = f;
        return;
      }
    }
  }

  std::vector<i64> unpack(i64 code) const {
    std::vector<i64> c(m);
    for (i64 i = 0; i < m; ++i) {
      c[i] = code % p;
      code /= p;
    }
    return c;
  }
  i64 pack(const std::vector<i64>& c) const {
    i64 code = 0;
    for (i64 i = m - 1; i >= 0; --i) code = code * p + c[i];
    return code;
  }
  i64 add(i64 a, i64 b) const {
    auto x = unpack(a), y = unpack(b);
    for (i64 i = 0; i < m; ++i) x[i] = (x[i] + y[i]) % p;
    return pack(x);
  }
  i64 neg(i64 a) const {
    auto x = unpack(a);
    for (auto& c : x) c = (p - c) % p;
    return pack(x);
  }
  i64 sub(i64 a, i64 b) const { return add(a, neg(b)); }
  i64 mul(i64 a, i64 b) const {
    auto x = unpack(a), y = unpack(b);
    std::vector<i64> r(2 * m, 0);
    for (i64 i = 0; i < m; ++i)
      for (i64 j = 0; j < m; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
    for (i64 d = 2 * m - 1; d >= m; --d) {
      const i64 c = r[d];
      if (c == 0) continue;
      for (i64 i = 0; i <= m; ++i) r[d - m + i] = mod(r[d - m + i] - c * modulus[i], p);
    }
    r.resize(m);
    return pack(r);
  }
  i64 one() const { return 1; }
};

// #X(F_q) by a quadruple loop.
inline i64 count_X(const GF& F, bool skip_k0) {
  std::vector<i64> u(F.q);
  for (i64 x = 0; x < F.q; ++x) u[x] = F.sub(F.mul(x, x), 1);
  i64 n = 0;
  for (i64 x = 0; x < F.q; ++x)
    for (i64 y = 0; y < F.q; ++y) {
      const i64 xy = F.mul(u[x], u[y]);
      for (i64 z = 0; z < F.q; ++z) {
        const i64 lhs = F.mul(xy, u[z]);
        for (i64 k = skip_k0 ? 1 : 0; k < F.q; ++k) n += F.mul(k, k) == lhs;
      }
    }
  return n;
}

// #Xbar(F_q) as (#nonzero affine solutions of the homogeneous equation) / (q - 1).
inline i64 count_Xbar(const GF& F) {
  std::vector<i64> sq(F.q);
  for (i64 x = 0; x < F.q; ++x) sq[x] = F.mul(x, x);
  i64 cone = 0;
  for (i64 x = 0; x < F.q; ++x)
    for (i64 y = 0; y < F.q; ++y)
      for (i64 z = 0; z < F.q; ++z)
        for (i64 w = 0; w < F.q; ++w) {
          const i64 w2 = sq[w];
          const i64 lhs = F.mul(F.mul(F.sub(sq[x], w2), F.sub(sq[y], w2)), F.sub(sq[z], w2));
          const i64 w4 = F.mul(w2, w2);
          for (i64 k = 0; k < F.q; ++k) cone += lhs == F.mul(sq[k], w4);
        }
  return (cone - 1) / (F.q - 1);
}

inline i64 count_triples(const GF& F) {
  std::vector<char> is_sq(F.q, 0);
  for (i64 x = 0; x < F.q; ++x) is_sq[F.mul(x, x)] = 1;
  i64 n = 0;
  for (i64 a = 1; a < F.q; ++a)
    for (i64 b = a + 1; b < F.q; ++b)
      for (i64 c = b + 1; c < F.q; ++c)
        n += is_sq[F.add(F.mul(a, b), 1)] && is_sq[F.add(F.mul(a, c), 1)] && is_sq[F.add(F.mul(b, c), 1)];
  return n;
}

// Coefficients of q prod_n (1 - q^{2n})^4 (1 - q^{4n})^4 up to q^N by naive
// dense multiplication, one binomial factor at a time.
inline std::vector<i64> newform_coeffs(int N) {
  std::vector<i64> s(N + 1, 0);
  s[0] = 1;
  const auto times_one_minus = [&](int d) {
    for (int i = N; i >= d; --i) s[i] -= s[i - d];
  };
  for (int n = 1; 2 * n <= N; ++n)
    for (int r = 0; r < 4; ++r) times_one_minus(2 * n);
  for (int n = 1; 4 * n <= N; ++n)
    for (int r = 0; r < 4; ++r) times_one_minus(4 * n);
  std::vector<i64> out(N + 1, 0);
  for (int i = 0; i + 1 <= N; ++i) out[i + 1] = s[i];
  return out;
}

}  // namespace oracle
