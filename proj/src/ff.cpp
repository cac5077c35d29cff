#include "dtriples/ff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dtriples/error.hpp"

namespace dtriples {

namespace {

constexpr std::uint32_t kMaxTableOrder = 1024;       // add/mul tables for small extensions
constexpr std::uint32_t kMaxChiTableOrder = 1u << 20;

using Poly = std::vector<std::uint32_t>;  // coefficients over F_p, low to high

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) { return mod_pow(a, p - 2, p); }

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint32_t lead_inv = mod_inv(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t c = std::uint64_t(f.back()) * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - c * g[i] % p) % p);
    }
    trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), g, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// f of degree m is irreducible iff gcd(f, x^{p^i} - x) = 1 for all i <= m/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m <= 1) return true;
  Poly xp = {0, 1};
  for (std::size_t i = 1; i <= m / 2; ++i) {
    // xp <- xp^p mod f
    Poly acc = {1};
    Poly base = xp;
    for (std::uint32_t e = p; e; e >>= 1) {
      if (e & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
    }
    xp = acc;
    Poly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

}  // namespace

struct FieldCtx::Impl {
  std::uint32_t p = 0;
  unsigned m = 1;
  std::uint32_t q = 0;
  Poly modulus;
  std::vector<std::uint32_t> powers;  // p^i, i < m
  std::vector<std::uint32_t> add_tab, mul_tab;
  std::vector<std::int8_t> chi_tab;

  Poly decode(std::uint32_t code) const {
    Poly c(m);
    for (unsigned i = 0; i < m; ++i) {
      c[i] = code % p;
      code /= p;
    }
    return c;
  }
  std::uint32_t encode(const Poly& c) const {
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < c.size() && i < m; ++i) code += c[i] * powers[i];
    return code;
  }
  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    for (unsigned i = 0; i < m; ++i) {
      r += ((a % p + b % p) % p) * powers[i];
      a /= p;
      b /= p;
    }
    return r;
  }
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
    return encode(poly_mulmod(decode(a), decode(b), modulus, p));
  }
};

std::uint32_t FieldCtx::p() const noexcept { return impl_->p; }
unsigned FieldCtx::m() const noexcept { return impl_->m; }
std::uint32_t FieldCtx::q() const noexcept { return impl_->q; }
std::span<const std::uint32_t> FieldCtx::modulus() const noexcept { return impl_->modulus; }

bool operator==(const FieldCtx& x, const FieldCtx& y) noexcept {
  return x.impl_ == y.impl_ || (x.impl_->p == y.impl_->p && x.impl_->modulus == y.impl_->modulus);
}

FieldElem FieldCtx::from_int(std::int64_t v) const noexcept {
  const std::int64_t p = impl_->p;
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return {static_cast<std::uint32_t>(r)};
}

FieldElem FieldCtx::from_code(std::uint32_t code) const {
  if (code >= impl_->q) throw Error(ErrorKind::OutOfRange, "element code " + std::to_string(code));
  return {code};
}

FieldElem FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > impl_->m) throw Error(ErrorKind::OutOfRange, "too many coefficients");
  Poly c(coeffs.begin(), coeffs.end());
  for (auto& x : c) x %= impl_->p;
  return {impl_->encode(c)};
}

std::vector<std::uint32_t> FieldCtx::coeffs(FieldElem a) const { return impl_->decode(a.code); }

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const noexcept {
  const Impl& F = *impl_;
  if (F.m == 1) {
    std::uint32_t r = a.code + b.code;
    return {r >= F.p ? r - F.p : r};
  }
  if (!F.add_tab.empty()) return {F.add_tab[std::size_t(a.code) * F.q + b.code]};
  return {F.add_slow(a.code, b.code)};
}

FieldElem FieldCtx::neg(FieldElem a) const noexcept {
  const Impl& F = *impl_;
  if (F.m == 1) return {a.code == 0 ? 0 : F.p - a.code};
  Poly c = F.decode(a.code);
  for (auto& x : c) x = (F.p - x) % F.p;
  return {F.encode(c)};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const noexcept {
  const Impl& F = *impl_;
  if (F.m == 1) return {static_cast<std::uint32_t>(std::uint64_t(a.code) * b.code % F.p)};
  if (!F.mul_tab.empty()) return {F.mul_tab[std::size_t(a.code) * F.q + b.code]};
  return {F.mul_slow(a.code, b.code)};
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t e) const noexcept {
  FieldElem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a.code == 0) throw Error(ErrorKind::Domain, "inverse of zero");
  return pow(a, std::uint64_t(impl_->q) - 2);
}

int FieldCtx::chi(FieldElem a) const {
  const Impl& F = *impl_;
  if (F.p == 2) throw Error(ErrorKind::UnsupportedCharacteristic, "quadratic character in characteristic 2");
  if (!F.chi_tab.empty()) return F.chi_tab[a.code];
  if (a.code == 0) return 0;
  return pow(a, (std::uint64_t(F.q) - 1) / 2) == one() ? 1 : -1;
}

std::string FieldCtx::to_string(FieldElem a) const {
  if (impl_->m == 1) return std::to_string(a.code);
  std::string s = "[";
  const Poly c = impl_->decode(a.code);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + "]";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldCtx build_extension(std::uint32_t p, unsigned m) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorKind::Domain, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > (1ull << 31)) throw Error(ErrorKind::OutOfRange, "field order too large");
  }

  auto impl = std::make_shared<FieldCtx::Impl>();
  impl->p = p;
  impl->m = m;
  impl->q = static_cast<std::uint32_t>(q);
  impl->powers.resize(m);
  for (unsigned i = 0; i < m; ++i) impl->powers[i] = i == 0 ? 1 : impl->powers[i - 1] * p;

  if (m == 1) {
    impl->modulus = {0, 1};
  } else {
    // Lexicographic search by code of the non-leading coefficients.
    for (std::uint32_t code = 0; code < q; ++code) {
      Poly f = impl->decode(code);
      f.push_back(1);
      if (f[0] != 0 && is_irreducible(f, p)) {
        impl->modulus = std::move(f);
        break;
      }
    }
  }

  if (m > 1 && q <= kMaxTableOrder) {
    impl->add_tab.resize(q * q);
    impl->mul_tab.resize(q * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        impl->add_tab[a * q + b] = impl->add_slow(a, b);
        impl->mul_tab[a * q + b] = impl->mul_slow(a, b);
      }
    }
  }

  FieldCtx ctx(impl);
  if (p != 2 && q <= kMaxChiTableOrder) {
    impl->chi_tab.assign(q, -1);
    impl->chi_tab[0] = 0;
    for (std::uint32_t x = 1; x < q; ++x) impl->chi_tab[ctx.sqr({x}).code] = 1;
  }
  return ctx;
}

FieldCtx field_of_order(std::uint32_t q) {
  if (q < 2) throw Error(ErrorKind::InvalidPrime, "field order must be >= 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  unsigned m = 0;
  std::uint32_t r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) throw Error(ErrorKind::InvalidPrime, std::to_string(q) + " is not a prime power");
  return build_extension(p, m);
}

int quadratic_character(const FieldCtx& F, FieldElem a) { return F.chi(a); }

std::optional<FieldElem> sqrt_in_field(const FieldCtx& F, FieldElem a) {
  const int c = F.chi(a);
  if (c == 0) return F.zero();
  if (c < 0) return std::nullopt;

  // Tonelli-Shanks over F_q.
  std::uint64_t t = F.q() - 1;
  unsigned s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  FieldElem z{2};
  while (F.chi(z) != -1) z.code++;

  unsigned M = s;
  FieldElem cc = F.pow(z, t);
  FieldElem T = F.pow(a, t);
  FieldElem R = F.pow(a, (t + 1) / 2);
  while (T != F.one()) {
    unsigned i = 0;
    FieldElem T2 = T;
    while (T2 != F.one()) {
      T2 = F.sqr(T2);
      ++i;
    }
    FieldElem b = cc;
    for (unsigned j = 0; j + i + 1 < M; ++j) b = F.sqr(b);
    M = i;
    cc = F.sqr(b);
    T = F.mul(T, cc);
    R = F.mul(R, b);
  }
  const FieldElem other = F.neg(R);
  return std::min(R, other);
}

long long char_sum_exhaustive(const FieldCtx& F, FieldElem alpha, FieldElem beta, FieldElem gamma) {
  long long sum = 0;
  for (std::uint32_t c = 0; c < F.q(); ++c) {
    const FieldElem t{c};
    const FieldElem v = F.add(F.mul(F.add(F.mul(alpha, t), beta), t), gamma);
    sum += F.chi(v);
  }
  return sum;
}

long long char_sum_formula(const FieldCtx& F, FieldElem alpha, FieldElem beta, FieldElem gamma) {
  const long long q = F.q();
  if (alpha != F.zero()) {
    const FieldElem disc = F.sub(F.mul(F.from_int(4), F.mul(alpha, gamma)), F.sqr(beta));
    return disc != F.zero() ? -F.chi(alpha) : (q - 1) * F.chi(alpha);
  }
  if (beta == F.zero()) return q * F.chi(gamma);
  return 0;
}

TwoSquares two_squares(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidPrime, std::to_string(p) + " is not prime");
  if (p % 4 != 1) throw Error(ErrorKind::NoRepresentation, std::to_string(p) + " is not 1 mod 4");
  for (std::uint32_t a = 1; a * a < p; ++a) {
    const std::uint32_t rest = p - a * a;
    auto b = static_cast<std::uint32_t>(std::lround(std::sqrt(double(rest))));
    while (b * b > rest) --b;
    while ((b + 1) * (b + 1) <= rest) ++b;
    if (b * b == rest && b % 2 == 1) return {a, b};
  }
  throw Error(ErrorKind::NoRepresentation, "no representation found for " + std::to_string(p));
}

}  // namespace dtriples
