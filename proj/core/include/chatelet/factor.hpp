#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chatelet/poly.hpp"

namespace chatelet {

/// unit * prod f_i^{e_i} with monic irreducible f_i, sorted by ascending
/// degree, then lexicographically on the coefficient strings.
template <class T>
struct Factorization {
  T unit{};
  std::vector<std::pair<Poly<T>, int>> factors;

  [[nodiscard]] Poly<T> expand() const {
    Poly<T> out{unit};
    for (const auto& [f, e] : factors) {
      for (int i = 0; i < e; ++i) out = out * f;
    }
    return out;
  }

  /// Degrees with multiplicity, ascending.
  [[nodiscard]] std::vector<int> degrees() const {
    std::vector<int> d;
    for (const auto& [f, e] : factors) {
      for (int i = 0; i < e; ++i) d.push_back(f.degree());
    }
    return d;
  }
};

using QFactorization = Factorization<Rational>;
using KFactorization = Factorization<QuadElem>;

/// Rational roots of p, each listed once.
std::vector<Rational> rational_roots(const QPoly& p);

/// Factorization over Q; 1 <= deg <= 4.
QFactorization factor_over_Q(const QPoly& p);

/// Factorization over Q(sqrt(m)); 1 <= deg <= 4.
KFactorization factor_over_quad(const QPoly& p, const BigInt& m);

/// Degree pattern such as "1+1+2" (ascending, with multiplicity).
std::string pattern_string(const std::vector<int>& degrees);

/// Shift t -> u - b/4 that kills the cubic term of a monic quartic, and the
/// coefficients p, q, r of the depressed quartic u^4 + p u^2 + q u + r.
struct DepressedQuartic {
  Rational shift;
  Rational p;
  Rational q;
  Rational r;
};
DepressedQuartic depress(const QPoly& quartic);

/// y^3 + 2p y^2 + (p^2 - 4r) y - q^2 for the depressed form of the quartic.
QPoly resolvent_cubic(const QPoly& quartic);

enum class GaloisType { S4, A4, D4, V4, C4, reducible };
std::string to_string(GaloisType g);

/// Galois group of an irreducible quartic; std::invalid_argument otherwise.
GaloisType quartic_galois_group(const QPoly& p);

/// P = scalar * g * conj(g) over Q(sqrt(m)), g monic quadratic, irreducible.
struct NormForm {
  BigInt m;
  KPoly g;
  Rational scalar;
};

/// Every quadratic field over which the quartic is a norm form, ascending
/// |m| with positive m first. Empty when P is reducible over Q.
/// std::invalid_argument unless P is a squarefree quartic.
std::vector<NormForm> detect_norm_form(const QPoly& p);

/// Polynomial over F_p, ascending coefficients in [0, p).
struct ModPFactorization {
  std::uint64_t p = 0;
  std::uint64_t unit = 0;
  std::vector<std::pair<std::vector<std::uint64_t>, int>> factors;

  [[nodiscard]] std::vector<int> degrees() const;
  [[nodiscard]] bool is_irreducible() const { return factors.size() == 1 && factors.front().second == 1; }
};

/// Factorization over F_p; p prime below 2^62, P p-integral with lc a unit.
/// std::invalid_argument on bad reduction.
ModPFactorization factor_mod_p(const QPoly& p, const BigInt& prime);

}  // namespace chatelet
