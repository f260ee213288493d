#pragma once

#include <stdexcept>
#include <string>

#include "chatelet/poly.hpp"

namespace chatelet {

/// Rejection of an input that does not define a Chatelet surface.
class InvalidSurface : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// y^2 - a z^2 = c P(t) with a a nonsquare, c != 0 and P a squarefree quartic.
class ChateletSurface {
 public:
  /// Throws InvalidSurface naming the violated condition.
  ChateletSurface(Rational a, Rational c, QPoly P);

  [[nodiscard]] const Rational& a() const { return a_; }
  [[nodiscard]] const Rational& c() const { return c_; }
  [[nodiscard]] const QPoly& P() const { return P_; }
  /// P / lc(P).
  [[nodiscard]] QPoly monic_P() const { return P_.monic(); }
  /// c * P as a polynomial.
  [[nodiscard]] QPoly cP() const { return P_.scaled(c_); }
  [[nodiscard]] std::string to_string() const;

 private:
  Rational a_;
  Rational c_;
  QPoly P_;
};

/// Q (m == 0) or Q(sqrt(m)).
struct Field {
  BigInt m = 0;

  [[nodiscard]] bool is_rational() const { return m == 0; }
  [[nodiscard]] std::string to_string() const { return m == 0 ? "Q" : "Q(sqrt(" + m.get_str() + "))"; }
  friend bool operator==(const Field&, const Field&) = default;
};

/// Throws InvalidSurface unless m is 0 or a valid field tag.
Field make_field(const BigInt& m);

}  // namespace chatelet
