#include "chatelet/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace chatelet::oracle {

namespace {

using i64 = std::int64_t;

i64 modpow(i64 a, i64 e, i64 n) {
  i64 r = 1 % n;
  a %= n;
  if (a < 0) a += n;
  while (e > 0) {
    if (e & 1) r = static_cast<i64>((static_cast<__int128>(r) * a) % n);
    a = static_cast<i64>((static_cast<__int128>(a) * a) % n);
    e >>= 1;
  }
  return r;
}

i64 ipow(i64 p, int k) {
  i64 r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

int vp(BigInt n, i64 p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int vp(const Rational& x, i64 p) { return vp(x.num(), p) - vp(x.den(), p); }

// x * p^(2j) with valuation in {0, 1}.
Rational normalize(const Rational& x, i64 p) {
  int v = vp(x, p);
  Rational out = x;
  const Rational p2(BigInt(p * p));
  while (v >= 2) {
    out = out / p2;
    v -= 2;
  }
  while (v < 0) {
    out = out * p2;
    v += 2;
  }
  return out;
}

i64 residue(const Rational& x, i64 n) {
  BigInt inv;
  const BigInt mod(n);
  BigInt den = x.den() % mod;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw std::domain_error("oracle: non-integral value");
  }
  BigInt r = (x.num() * inv) % mod;
  if (r < 0) r += mod;
  return r.get_si();
}

// Bitset of {scale * x^2 mod n}.
std::vector<bool> scaled_squares(i64 scale, i64 n) {
  std::vector<bool> s(static_cast<std::size_t>(n), false);
  for (i64 x = 0; x < n; ++x) {
    const i64 v = static_cast<i64>((static_cast<__int128>(x) * x % n) * scale % n);
    s[static_cast<std::size_t>(v)] = true;
  }
  return s;
}

}  // namespace

int euler_criterion(i64 a, i64 p) {
  const i64 r = modpow(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

bool conic_solvable(const Rational& a0, const Rational& b0, i64 p, int k) {
  const i64 n = ipow(p, k);
  const i64 a = residue(normalize(a0, p), n);
  const i64 b = residue(normalize(b0, p), n);
  const auto ax2 = scaled_squares(a, n);
  const auto psq = scaled_squares(p * p % n, n);
  auto sqr = [n](i64 x) { return static_cast<i64>(static_cast<__int128>(x) * x % n); };
  auto at = [n](const std::vector<bool>& s, i64 v) { return static_cast<bool>(s[static_cast<std::size_t>(((v % n) + n) % n)]); };
  // z = 1: 1 - b y^2 in {a x^2}.
  for (i64 y = 0; y < n; ++y) {
    if (at(ax2, 1 - b * sqr(y) % n)) return true;
  }
  // z in p, x = 1: a + b y^2 in {(p z)^2}.
  for (i64 y = 0; y < n; ++y) {
    if (at(psq, a + b * sqr(y) % n)) return true;
  }
  // z, x in p, y = 1: b + a x^2 in {(p z)^2}.
  for (i64 x = 0; x < n; x += p) {
    if (at(psq, b + a * sqr(x) % n)) return true;
  }
  return false;
}

bool surface_solvable(const Rational& a0, const Rational& c, const QPoly& P, i64 p, int k) {
  const i64 n = ipow(p, k);
  const i64 a = residue(normalize(a0, p), n);
  const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
  // Squares modulo n, laid out twice so any cyclic window is contiguous.
  const std::vector<bool> sq = scaled_squares(1, n);
  std::vector<std::uint64_t> twice(2 * words + 2, 0);
  for (i64 v = 0; v < 2 * n; ++v) {
    if (sq[static_cast<std::size_t>(v % n)]) twice[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
  }
  // norms[v] = OR over s in {-a z^2} of sq[v - s].
  std::vector<std::uint64_t> norms(words, 0);
  const std::vector<bool> shifts = scaled_squares(((n - a) % n + n) % n, n);
  for (i64 s = 0; s < n; ++s) {
    if (!shifts[static_cast<std::size_t>(s)]) continue;
    const i64 off = n - s;
    const std::size_t q = static_cast<std::size_t>(off / 64);
    const unsigned r = static_cast<unsigned>(off % 64);
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t lo = twice[q + w] >> r;
      const std::uint64_t hi = r == 0 ? 0 : twice[q + w + 1] << (64 - r);
      norms[w] |= lo | hi;
    }
  }
  auto is_norm = [&norms](i64 v) { return ((norms[static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1U) != 0; };
  // Chart polynomials scaled by an even power of p to be integral.
  const QPoly f = P.scaled(c);
  for (int chart = 0; chart < 2; ++chart) {
    QPoly g = chart == 0 ? f : f.reversed(4);
    int low = 0;
    for (const Rational& x : g.coeffs()) {
      if (!x.is_zero()) low = std::min(low, vp(x, p));
    }
    if (low < 0) g = g.scaled(Rational(BigInt(ipow(p, 2 * ((-low + 1) / 2)))));
    std::vector<i64> coeffs;
    for (const Rational& x : g.coeffs()) coeffs.push_back(residue(x, n));
    const i64 step = chart == 0 ? 1 : p;
    for (i64 t = 0; t < n; t += step) {
      i64 acc = 0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = static_cast<i64>((static_cast<__int128>(acc) * t + *it) % n);
      }
      if (is_norm(acc)) return true;
    }
  }
  return false;
}

}  // namespace chatelet::oracle
