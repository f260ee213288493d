#pragma once

#include <cstdint>

#include "chatelet/poly.hpp"

// Brute-force reference computations over Z / p^k. They share no code with
// the closed formulas they are used to check.
namespace chatelet::oracle {

/// Default working precision exponent.
inline constexpr int kPrecision = 6;

/// a^((p-1)/2) mod p mapped to {-1, 0, 1}.
int euler_criterion(std::int64_t a, std::int64_t p);

/// Whether z^2 = a x^2 + b y^2 has a primitive solution modulo p^k after
/// normalizing v_p(a), v_p(b) into {0, 1}; p odd.
bool conic_solvable(const Rational& a, const Rational& b, std::int64_t p, int k = kPrecision);

/// Whether y^2 - a z^2 = c P(t) has a solution modulo p^k with t running
/// over Z / p^k and over the chart 1/t in p Z / p^k; p odd.
bool surface_solvable(const Rational& a, const Rational& c, const QPoly& P, std::int64_t p, int k = kPrecision);

}  // namespace chatelet::oracle
