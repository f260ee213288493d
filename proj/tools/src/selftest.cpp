#include "chatelet_tools/selftest.hpp"

#include <random>
#include <set>

#include "chatelet/arith.hpp"
#include "chatelet/local_solver.hpp"
#include "chatelet/oracle.hpp"

namespace chatelet::tools {

std::vector<ChateletSurface> oracle_surfaces() {
  return {
      {Rational(5), Rational(3, 5), QPoly{1, 0, 7, 0, 5}},
      {Rational(2), Rational(5), QPoly{2, 0, 0, 0, 1}},
      {Rational(3), Rational(7), QPoly{2, 0, 3, 0, 1}},
      {Rational(3), Rational(1), QPoly{1, 0, 0, 0, 1}},
      {Rational(-1), Rational(1), QPoly{0, 2, -1, -2, 1}},
      {Rational(5), Rational(3), QPoly{-18, 0, 2, 0, 1}},
      {Rational(-3), Rational(5), QPoly{-1, 0, 1, -1, 1}},
      {Rational(7), Rational(2), QPoly{-5, 0, -9, 0, 2}},
      {Rational(2), Rational(3), QPoly{1, 1, 0, 0, 1}},
      {Rational(-5), Rational(7, 3), QPoly{1, 0, -5, 0, 4}},
  };
}

void product_formula_sweep(const SelftestOptions& opts, SelftestResult& out) {
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<long> num(-10000, 10000);
  std::uniform_int_distribution<long> den(1, 10000);
  auto draw = [&] {
    long n = 0;
    while (n == 0) n = num(rng);
    return Rational(BigInt(n), BigInt(den(rng)));
  };
  for (int i = 0; i < opts.pairs; ++i) {
    const Rational a = draw();
    const Rational b = draw();
    std::set<BigInt> primes{BigInt(2)};
    for (const Rational& q : {a, b}) {
      for (const BigInt& p : prime_support(q)) primes.insert(p);
    }
    InvariantValue sum = invariant(hilbert_symbol(a, b, Place::real()));
    for (const BigInt& p : primes) sum += invariant(hilbert_symbol(a, b, Place::finite(p)));
    ++out.product_formula_pairs;
    if (sum.is_half()) {
      out.failures.push_back("product formula fails for (" + a.to_string() + ", " + b.to_string() + ")");
    }
  }
}

void oracle_suite(SelftestResult& out) {
  for (long p : {3L, 5L, 7L}) {
    const Place v = Place::finite(BigInt(p));
    for (long a = -7; a <= 7; ++a) {
      for (long b = -7; b <= 7; ++b) {
        if (a == 0 || b == 0 || b < a) continue;
        ++out.conic_checks;
        const bool lib = hilbert_symbol(Rational(a), Rational(b), v) == 1;
        if (lib != oracle::conic_solvable(Rational(a), Rational(b), p)) {
          out.failures.push_back("hilbert symbol (" + std::to_string(a) + ", " + std::to_string(b) + ") at " +
                                 std::to_string(p) + " disagrees with brute force");
        }
      }
    }
    for (const ChateletSurface& X : oracle_surfaces()) {
      ++out.surface_checks;
      const bool lib = local_points(X, Completion::of(v)).nonempty;
      if (lib != oracle::surface_solvable(X.a(), X.c(), X.P(), p)) {
        out.failures.push_back("local points of " + X.to_string() + " at " + std::to_string(p) +
                               " disagree with brute force");
      }
    }
  }
}

SelftestResult run_selftest(const SelftestOptions& opts) {
  SelftestResult r;
  product_formula_sweep(opts, r);
  oracle_suite(r);
  return r;
}

}  // namespace chatelet::tools
