#include <random>
#include <set>

#include <gtest/gtest.h>

#include "chatelet/arith.hpp"
#include "chatelet/local_symbols.hpp"
#include "chatelet/oracle.hpp"

using namespace chatelet;

namespace {

Place P(long p) { return Place::finite(BigInt(p)); }

std::vector<Place> places_for(const Rational& a, const Rational& b) {
  std::set<BigInt> primes{BigInt(2)};
  for (const Rational& q : {a, b}) {
    for (const BigInt& p : prime_support(q)) primes.insert(p);
  }
  std::vector<Place> out;
  for (const BigInt& p : primes) out.push_back(Place::finite(p));
  out.push_back(Place::real());
  return out;
}

Rational random_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  long n = 0;
  while (n == 0) n = num(rng);
  return {BigInt(n), BigInt(den(rng))};
}

}  // namespace

TEST(Valuation, Examples) {
  EXPECT_EQ(padic_valuation(Rational(3, 5), BigInt(5)), -1);
  EXPECT_EQ(padic_valuation(Rational(469), BigInt(3)), 0);
  EXPECT_EQ(padic_valuation(Rational(12), BigInt(2)), 2);
  EXPECT_THROW((void)padic_valuation(Rational(0), BigInt(3)), std::domain_error);
}

TEST(SquareLocal, Examples) {
  EXPECT_TRUE(is_square_local(Rational(1239), P(5)));
  EXPECT_FALSE(is_square_local(Rational(5), P(3)));
  EXPECT_TRUE(is_square_local(Rational(17), P(2)));
  EXPECT_FALSE(is_square_local(Rational(-1), Place::real()));
  EXPECT_TRUE(is_square_local(Rational(2, 9), Place::real()));
}

TEST(SquareLocal, TwoAdicBruteForce) {
  // Odd units that are squares modulo 2^5 are squares in Q_2.
  std::set<long> squares;
  for (long x = 1; x < 32; x += 2) squares.insert(x * x % 32);
  for (long u = 1; u < 200; u += 2) {
    EXPECT_EQ(is_square_local(Rational(u), P(2)), squares.count(u % 32) == 1) << u;
    EXPECT_FALSE(is_square_local(Rational(2 * u), P(2)));
  }
}

TEST(Hilbert, Examples) {
  EXPECT_EQ(hilbert_symbol(Rational(5), Rational(10), P(5)), -1);
  EXPECT_EQ(hilbert_symbol(Rational(5), Rational(3), P(3)), -1);
  for (const Place& v : {P(2), P(3), P(5), P(29), Place::real()}) {
    EXPECT_EQ(hilbert_symbol(Rational(1), Rational(-7, 12), v), 1);
  }
  EXPECT_EQ(hilbert_symbol(Rational(-1), Rational(-1), Place::real()), -1);
  EXPECT_EQ(hilbert_symbol(Rational(-1), Rational(-1), P(2)), -1);
}

TEST(Hilbert, Invariant) {
  EXPECT_EQ(invariant(1), InvariantValue{});
  EXPECT_EQ(invariant(-1), InvariantValue::half());
  for (int s : {1, -1}) {
    for (int t : {1, -1}) EXPECT_EQ(invariant(s * t), invariant(s) + invariant(t));
  }
}

TEST(Hilbert, ProductFormula) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const Rational a = random_rational(rng, 10000);
    const Rational b = random_rational(rng, 10000);
    InvariantValue sum;
    for (const Place& v : places_for(a, b)) sum += invariant(hilbert_symbol(a, b, v));
    ASSERT_FALSE(sum.is_half()) << a.to_string() << " " << b.to_string();
  }
}

TEST(Hilbert, BilinearSymmetric) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 400; ++i) {
    const Rational a = random_rational(rng, 300);
    const Rational b = random_rational(rng, 300);
    const Rational c = random_rational(rng, 300);
    for (const Place& v : places_for(a * b, c)) {
      ASSERT_EQ(hilbert_symbol(a * b, c, v), hilbert_symbol(a, c, v) * hilbert_symbol(b, c, v));
      ASSERT_EQ(hilbert_symbol(a, c, v), hilbert_symbol(c, a, v));
    }
  }
}

TEST(Hilbert, Steinberg) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 400; ++i) {
    const Rational a = random_rational(rng, 500);
    for (const Place& v : places_for(a, Rational(1) - a)) {
      ASSERT_EQ(hilbert_symbol(a, -a, v), 1);
      if (a != Rational(1)) {
        ASSERT_EQ(hilbert_symbol(a, Rational(1) - a, v), 1);
      }
    }
  }
}

TEST(Hilbert, BruteForceOracle) {
  for (long p : {3L, 5L, 7L}) {
    for (long a = -12; a <= 12; ++a) {
      for (long b = a; b <= 12; ++b) {
        if (a == 0 || b == 0) continue;
        ASSERT_EQ(hilbert_symbol(Rational(a), Rational(b), P(p)) == 1,
                  oracle::conic_solvable(Rational(a), Rational(b), p))
            << a << " " << b << " " << p;
      }
    }
    ASSERT_EQ(hilbert_symbol(Rational(3, 25), Rational(-p, 7), P(p)) == 1,
              oracle::conic_solvable(Rational(3, 25), Rational(-p, 7), p));
  }
}

TEST(PlacesAbove, SplittingBehaviour) {
  const BigInt m(29);
  EXPECT_EQ(places_above(P(3), m).at(0).behavior, Splitting::inert);
  EXPECT_EQ(places_above(P(2), m).at(0).behavior, Splitting::inert);
  EXPECT_EQ(places_above(P(29), m).at(0).behavior, Splitting::ramified);
  const auto five = places_above(P(5), m);
  ASSERT_EQ(five.size(), 2U);
  EXPECT_EQ(five[0].to_string(), "w1|5");
  EXPECT_EQ(five[1].to_string(), "w2|5");
  EXPECT_EQ(places_above(Place::real(), m).size(), 2U);
  EXPECT_EQ(places_above(Place::real(), BigInt(-1)).size(), 1U);
  EXPECT_EQ(places_above(P(2), BigInt(17)).size(), 2U);
  for (unsigned p : primes_up_to(60)) {
    if (p == 2) continue;
    for (long mm : {-5L, -3L, -2L, -1L, 2L, 3L, 5L, 6L, 7L, 10L, 29L}) {
      const int k = kronecker_symbol(BigInt(mm), BigInt(p));
      const auto above = places_above(P(p), BigInt(mm));
      ASSERT_EQ(above.size(), k == 1 ? 2U : 1U);
      if (k == -1) {
        ASSERT_EQ(above[0].behavior, Splitting::inert);
      }
      if (k == 0) {
        ASSERT_EQ(above[0].behavior, Splitting::ramified);
      }
    }
  }
}

TEST(HilbertExt, Examples) {
  const BigInt m(29);
  const ExtPlace w3 = places_above(P(3), m).at(0);
  for (long u : {1L, 2L, 4L, 5L, 7L, -1L}) {
    EXPECT_EQ(hilbert_symbol_ext(in_field(Rational(5), m), in_field(Rational(u), m), w3), 1) << u;
  }
  const ExtPlace w1 = places_above(P(5), m).at(0);
  EXPECT_EQ(hilbert_symbol_ext(in_field(Rational(5), m), in_field(Rational(10), m), w1), -1);
}

TEST(HilbertExt, SplitPlacesDelegate) {
  std::mt19937_64 rng(17);
  for (long mm : {29L, -1L, 2L, 17L}) {
    for (unsigned p : primes_up_to(40)) {
      const auto above = places_above(P(p), BigInt(mm));
      if (above.size() != 2) continue;
      for (int i = 0; i < 20; ++i) {
        const Rational a = random_rational(rng, 200);
        const Rational b = random_rational(rng, 200);
        for (const ExtPlace& w : above) {
          ASSERT_EQ(hilbert_symbol_ext(in_field(a, BigInt(mm)), in_field(b, BigInt(mm)), w),
                    hilbert_symbol(a, b, P(p)));
        }
      }
    }
  }
}

TEST(HilbertExt, EvenDegreeKillsRationalSymbols) {
  std::mt19937_64 rng(23);
  for (long mm : {29L, -1L, 2L, -2L, 3L, 5L, -3L, 7L, 19L}) {
    std::vector<Place> places{P(2), P(3), P(5), P(7), Place::real()};
    for (const BigInt& p : prime_support(Rational(mm))) places.push_back(Place::finite(p));
    for (const Place& v : places) {
      for (const ExtPlace& w : places_above(v, BigInt(mm))) {
        if (w.local_degree() != 2) continue;
        for (int i = 0; i < 15; ++i) {
          const Rational a = random_rational(rng, 60);
          const Rational b = random_rational(rng, 60);
          ASSERT_EQ(hilbert_symbol_ext(in_field(a, BigInt(mm)), in_field(b, BigInt(mm)), w), 1)
              << w.to_string() << " " << a.to_string() << " " << b.to_string();
        }
      }
    }
  }
}

TEST(HilbertExt, ProductFormulaOverQuadraticFields) {
  std::mt19937_64 rng(31);
  for (long mm : {-1L, 2L, -2L, 3L, 5L, 29L}) {
    const BigInt m(mm);
    for (int i = 0; i < 25; ++i) {
      const QuadElem x(random_rational(rng, 12), random_rational(rng, 12), m);
      const QuadElem y(random_rational(rng, 12), Rational(static_cast<long>(rng() % 5) - 2), m);
      if (x.is_zero() || y.is_zero()) continue;
      std::set<BigInt> primes{BigInt(2)};
      for (const Rational& q : {x.norm(), y.norm(), Rational(m)}) {
        for (const BigInt& p : prime_support(q)) primes.insert(p);
      }
      for (const Rational& q : {x.x(), x.y(), y.x(), y.y()}) {
        if (!q.is_zero()) {
          for (const BigInt& p : prime_support(Rational(q.den()))) primes.insert(p);
        }
      }
      InvariantValue sum;
      std::vector<Place> places;
      for (const BigInt& p : primes) places.push_back(Place::finite(p));
      places.push_back(Place::real());
      for (const Place& v : places) {
        for (const ExtPlace& w : places_above(v, m)) sum += invariant(hilbert_symbol_ext(x, y, w));
      }
      ASSERT_FALSE(sum.is_half()) << x.to_string() << " " << y.to_string();
    }
  }
}

TEST(Fp2, QuadraticCharacter) {
  const Fp2 F(BigInt(7), BigInt(3));
  int squares = 0;
  for (long u = 0; u < 7; ++u) {
    for (long v = 0; v < 7; ++v) {
      if (u == 0 && v == 0) continue;
      if (F.quadratic_character({BigInt(u), BigInt(v)}) == 1) ++squares;
    }
  }
  EXPECT_EQ(squares, 24);
  // Every element of F_7 is a square in F_49.
  for (long u = 1; u < 7; ++u) EXPECT_EQ(F.quadratic_character({BigInt(u), BigInt(0)}), 1);
}
