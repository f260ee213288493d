#pragma once

#include <map>
#include <vector>

#include "chatelet/rational.hpp"

namespace chatelet {

/// Prime factorization `sign * prod(p^e)` of a nonzero integer.
struct FactoredInteger {
  int sign = 1;
  std::map<BigInt, unsigned> factors;

  [[nodiscard]] BigInt value() const;
  [[nodiscard]] std::vector<BigInt> primes() const;
};

/// Miller-Rabin with the first thirteen prime bases. Deterministic below
/// 3.3e24, which covers every discriminant the surface pipeline produces.
bool is_prime(const BigInt& n);

/// Trial division to 10^6, then Brent's variant of Pollard rho.
/// Throws std::domain_error for n == 0.
FactoredInteger factor_integer(const BigInt& n);

/// Kronecker symbol (a/n) for n != 0.
int kronecker_symbol(const BigInt& a, const BigInt& n);

/// Legendre symbol for an odd prime p (0 when p | a).
int legendre_symbol(const BigInt& a, const BigInt& p);

/// The squarefree integer d with q = d * (rational square). Throws for q == 0.
BigInt squarefree_part(const Rational& q);

/// True iff q is the square of a rational.
bool is_rational_square(const Rational& q);

/// Exact square root of a rational square; throws std::domain_error otherwise.
Rational rational_sqrt(const Rational& q);

/// v_p(n) for n != 0.
int valuation(const BigInt& n, const BigInt& p);

/// Distinct primes dividing numerator or denominator of q (q != 0).
std::vector<BigInt> prime_support(const Rational& q);

/// p^k as an integer.
BigInt ipow(const BigInt& p, unsigned k);

/// A square root of m modulo p^k, where m is a nonzero square mod p^k with
/// p not dividing m (for p == 2 require m == 1 mod 8). For odd p the root is
/// congruent to `residue` mod p; for p == 2 it is 1 mod 4 when `residue` == 1
/// and 3 mod 4 otherwise.
BigInt sqrt_mod_prime_power(const BigInt& m, const BigInt& p, unsigned k, const BigInt& residue);

/// Least positive square root of m modulo an odd prime p (p not dividing m,
/// m a quadratic residue).
BigInt sqrt_mod_prime(const BigInt& m, const BigInt& p);

/// Primes up to `bound`, ascending.
std::vector<unsigned> primes_up_to(unsigned bound);

}  // namespace chatelet
