#pragma once

#include <compare>
#include <string>
#include <vector>

#include "chatelet/quad.hpp"
#include "chatelet/rational.hpp"

namespace chatelet {

/// A place of Q: a prime p or the real place.
class Place {
 public:
  static Place real() { return Place(BigInt(0)); }
  /// Throws std::invalid_argument unless p is prime.
  static Place finite(const BigInt& p);

  [[nodiscard]] bool is_real() const { return p_ == 0; }
  [[nodiscard]] const BigInt& prime() const { return p_; }
  [[nodiscard]] std::string to_string() const { return is_real() ? "inf" : p_.get_str(); }

  friend bool operator==(const Place&, const Place&) = default;
  /// Finite places ascending by p, then the real place.
  friend std::strong_ordering operator<=>(const Place& a, const Place& b);

 private:
  explicit Place(BigInt p) : p_(std::move(p)) {}
  BigInt p_;
};

enum class Splitting { split, inert, ramified };

/// A place w of Q(sqrt(m)) above a place of Q.
///
/// For a split finite place `which` selects the embedding: over odd p the
/// embedding with sqrt(m) congruent to `residue_root`, the least positive
/// square root of m mod p (which == 1), or its negative (which == 2); over
/// p == 2 the root that is 1 mod 4 (which == 1) or 3 mod 4. At the real place
/// m > 0 gives two real places (sqrt(m) -> +/-sqrt(m)); m < 0 gives the complex
/// place, tagged ramified. Inert and ramified places have which == 0.
struct ExtPlace {
  Place base = Place::real();
  BigInt m = 0;
  Splitting behavior = Splitting::split;
  int which = 0;
  BigInt residue_root = 0;

  [[nodiscard]] int local_degree() const { return behavior == Splitting::split ? 1 : 2; }
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const ExtPlace&, const ExtPlace&) = default;
};

/// All places of Q(sqrt(m)) above v, split places ordered w1, w2.
std::vector<ExtPlace> places_above(const Place& v, const BigInt& m);

/// Element of (1/2)Z/Z inside Q/Z.
class InvariantValue {
 public:
  InvariantValue() = default;
  static InvariantValue half() { return InvariantValue(true); }

  [[nodiscard]] bool is_half() const { return half_; }
  [[nodiscard]] std::string to_string() const { return half_ ? "1/2" : "0"; }

  friend InvariantValue operator+(InvariantValue a, InvariantValue b) { return InvariantValue(a.half_ != b.half_); }
  InvariantValue& operator+=(InvariantValue o) { return *this = *this + o; }
  friend bool operator==(const InvariantValue&, const InvariantValue&) = default;
  friend auto operator<=>(const InvariantValue&, const InvariantValue&) = default;

 private:
  explicit InvariantValue(bool half) : half_(half) {}
  bool half_ = false;
};

/// +1 -> 0, -1 -> 1/2.
InvariantValue invariant(int symbol);

/// v_p(num) - v_p(den); throws std::domain_error for x == 0.
int padic_valuation(const Rational& x, const BigInt& p);

/// Whether x is a square in Q_v.
bool is_square_local(const Rational& x, const Place& place);

/// Hilbert symbol (a, b)_v over Q_v by the closed formulas.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

/// Raised when the 2-adic norm search cannot certify a symbol. This is an
/// internal consistency failure, never a property of user input.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hilbert symbol (a, b)_w in the completion L_w of L = Q(sqrt(m)).
///
/// Split places go through the embedding into Q_p; inert and ramified places
/// over odd p use the tame symbol on the residue field F_q; places over 2 that
/// do not split are decided by an exhaustive isotropy search modulo a fixed
/// power of the maximal ideal; archimedean places use signs.
int hilbert_symbol_ext(const QuadElem& a, const QuadElem& b, const ExtPlace& w);

/// Normalized valuation w(x) (w(uniformizer) = 1); x != 0.
int ext_valuation(const QuadElem& x, const ExtPlace& w);

/// A rational with the same valuation and square class as the image of x in
/// L_w = Q_p. Only meaningful at finite split places.
Rational split_image(const QuadElem& x, const ExtPlace& w);

/// Whether x is a square in L_w.
bool is_square_ext(const QuadElem& x, const ExtPlace& w);

/// Residue-field arithmetic F_p[s]/(s^2 - m) for an odd prime p with m a
/// non-residue mod p; elements are pairs (u, v) = u + v*s.
class Fp2 {
 public:
  Fp2(BigInt p, BigInt m);
  struct Elem {
    BigInt u;
    BigInt v;
  };
  [[nodiscard]] Elem mul(const Elem& a, const Elem& b) const;
  [[nodiscard]] Elem pow(Elem a, BigInt e) const;
  /// +1 for nonzero squares, -1 for non-squares (Euler's criterion).
  [[nodiscard]] int quadratic_character(const Elem& a) const;

 private:
  BigInt p_;
  BigInt m_;
};

}  // namespace chatelet
