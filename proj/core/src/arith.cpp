#include "chatelet/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace chatelet {

namespace {

constexpr unsigned kTrialBound = 1000000;

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = primes_up_to(kTrialBound);
  return primes;
}

bool miller_rabin_round(const BigInt& n, const BigInt& d, unsigned s, unsigned long base) {
  BigInt a(base);
  if (a % n == 0) return true;
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const BigInt n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's cycle detection with batched gcds.
BigInt pollard_brent(const BigInt& n, unsigned long c) {
  if (n % 2 == 0) return 2;
  BigInt y = 2;
  BigInt x;
  BigInt ys;
  BigInt q = 1;
  BigInt g = 1;
  const unsigned long m = 128;
  unsigned long r = 1;
  auto step = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      const unsigned long lim = std::min(m, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        y = step(y);
        q = (q * abs(BigInt(x - y))) % n;
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = step(ys);
      g = gcd(abs(BigInt(x - ys)), n);
    } while (g == 1);
  }
  return g;
}

void split_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (unsigned long c = 1;; ++c) {
    const BigInt d = pollard_brent(n, c);
    if (d != n && d != 1) {
      split_into(d, out);
      split_into(BigInt(n / d), out);
      return;
    }
  }
}

}  // namespace

std::vector<unsigned> primes_up_to(unsigned bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<unsigned> primes;
  for (unsigned i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (unsigned long long j = static_cast<unsigned long long>(i) * i; j <= bound; j += i) {
      composite[j] = true;
    }
  }
  return primes;
}

BigInt FactoredInteger::value() const {
  BigInt v = sign;
  for (const auto& [p, e] : factors) v *= ipow(p, e);
  return v;
}

std::vector<BigInt> FactoredInteger::primes() const {
  std::vector<BigInt> out;
  out.reserve(factors.size());
  for (const auto& entry : factors) out.push_back(entry.first);
  return out;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static constexpr unsigned long kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (unsigned long b : kBases) {
    if (!miller_rabin_round(n, d, s, b)) return false;
  }
  return true;
}

FactoredInteger factor_integer(const BigInt& n) {
  if (n == 0) throw std::domain_error("factor_integer: zero has no factorization");
  FactoredInteger result;
  result.sign = n < 0 ? -1 : 1;
  BigInt rest = abs(n);
  for (unsigned p : small_primes()) {
    if (BigInt(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      rest /= p;
      ++e;
    }
    result.factors[BigInt(p)] = e;
  }
  split_into(rest, result.factors);
  return result;
}

int kronecker_symbol(const BigInt& a, const BigInt& n) {
  if (n == 0) throw std::domain_error("kronecker_symbol: n must be nonzero");
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int legendre_symbol(const BigInt& a, const BigInt& p) {
  return mpz_legendre(BigInt(((a % p) + p) % p).get_mpz_t(), p.get_mpz_t());
}

int valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  if (p == 2) return static_cast<int>(mpz_scan1(n.get_mpz_t(), 0));
  BigInt rest = n;
  int v = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

BigInt ipow(const BigInt& p, unsigned k) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), k);
  return out;
}

BigInt squarefree_part(const Rational& q) {
  if (q.is_zero()) throw std::domain_error("squarefree_part of zero");
  BigInt d = q.sign();
  for (const BigInt& part : {q.num(), q.den()}) {
    const FactoredInteger f = factor_integer(part);
    for (const auto& [p, e] : f.factors) {
      if (e % 2 == 1) d *= p;
    }
  }
  return d;
}

bool is_rational_square(const Rational& q) {
  if (q.is_zero()) return true;
  if (q.sign() < 0) return false;
  return mpz_perfect_square_p(q.num().get_mpz_t()) != 0 && mpz_perfect_square_p(q.den().get_mpz_t()) != 0;
}

Rational rational_sqrt(const Rational& q) {
  if (!is_rational_square(q)) throw std::domain_error("not a rational square: " + q.to_string());
  return Rational(sqrt(q.num()), sqrt(q.den()));
}

std::vector<BigInt> prime_support(const Rational& q) {
  std::vector<BigInt> out;
  for (const BigInt& part : {q.num(), q.den()}) {
    for (const auto& entry : factor_integer(part).factors) out.push_back(entry.first);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt sqrt_mod_prime(const BigInt& m, const BigInt& p) {
  BigInt root;
  const BigInt a = ((m % p) + p) % p;
  if (legendre_symbol(a, p) != 1) throw std::domain_error("sqrt_mod_prime: not a residue");
  // Tonelli-Shanks.
  BigInt q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  BigInt z = 2;
  while (legendre_symbol(z, p) != -1) ++z;
  BigInt c;
  BigInt t;
  BigInt r;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  const BigInt half = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
  unsigned mm = s;
  while (t != 1) {
    unsigned i = 0;
    BigInt tt = t;
    while (tt != 1) {
      tt = (tt * tt) % p;
      ++i;
    }
    BigInt b = c;
    for (unsigned j = 0; j + i + 1 < mm; ++j) b = (b * b) % p;
    mm = i;
    c = (b * b) % p;
    t = (t * c) % p;
    r = (r * b) % p;
  }
  root = r;
  if (2 * root > p) root = p - root;
  return root;
}

BigInt sqrt_mod_prime_power(const BigInt& m, const BigInt& p, unsigned k, const BigInt& residue) {
  if (p == 2) {
    if (((m % 8) + 8) % 8 != 1) throw std::domain_error("sqrt_mod_prime_power: m must be 1 mod 8");
    // Lift r^2 = m mod 2^j; each step fixes one more bit of the root.
    BigInt r = residue == 1 ? 1 : 3;
    for (unsigned j = 3; j < k + 1; ++j) {
      const BigInt mod = ipow(2, j + 1);
      BigInt diff = ((r * r - m) % mod + mod) % mod;
      if (diff != 0) r += ipow(2, j - 1);
    }
    const BigInt mod = ipow(2, k);
    return ((r % mod) + mod) % mod;
  }
  BigInt r = ((residue % p) + p) % p;
  BigInt pk = p;
  // Newton: r <- r - (r^2 - m) / (2r) modulo increasing powers of p.
  for (unsigned j = 1; j < k;) {
    j = std::min(2 * j, k);
    pk = ipow(p, j);
    BigInt inv;
    BigInt two_r = (2 * r) % pk;
    if (mpz_invert(inv.get_mpz_t(), two_r.get_mpz_t(), pk.get_mpz_t()) == 0) {
      throw std::domain_error("sqrt_mod_prime_power: p divides m");
    }
    r = ((r - (r * r - m) * inv) % pk + pk) % pk;
  }
  return r;
}

}  // namespace chatelet
