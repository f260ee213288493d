#pragma once

#include <utility>
#include <vector>

#include "chatelet/poly.hpp"

namespace chatelet {

/// Number of distinct real roots of p in the half-open interval (lo, hi].
int count_real_roots(const QPoly& p, const Rational& lo, const Rational& hi);

/// Disjoint isolating intervals, ascending. A rational root r is returned
/// as [r, r]; an irrational root lies strictly inside (lo, hi) with
/// p(lo), p(hi) != 0.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const QPoly& p);

/// One rational point in every connected component of R minus the real
/// roots of p, ascending.
std::vector<Rational> real_sample_points(const QPoly& p);

}  // namespace chatelet
