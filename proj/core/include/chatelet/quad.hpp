#pragma once

#include <optional>
#include <string>

#include "chatelet/rational.hpp"

namespace chatelet {

/// Element x + y*sqrt(m) of Q(sqrt(m)).
///
/// `m` is the field tag: a squarefree integer outside {0, 1}. An element
/// built from a bare Rational carries tag 0, meaning "rational, field not yet
/// fixed"; arithmetic adopts the tag of the other operand. Mixing two
/// different nonzero tags throws std::invalid_argument.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(const Rational& x) : x_(x) {}  // NOLINT(google-explicit-constructor)
  QuadElem(long x) : x_(x) {}             // NOLINT(google-explicit-constructor)
  QuadElem(Rational x, Rational y, BigInt m);

  static QuadElem sqrt_of(const BigInt& m) { return {Rational(0), Rational(1), m}; }

  [[nodiscard]] const Rational& x() const { return x_; }
  [[nodiscard]] const Rational& y() const { return y_; }
  [[nodiscard]] const BigInt& m() const { return m_; }

  [[nodiscard]] bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  [[nodiscard]] bool is_rational() const { return y_.is_zero(); }

  [[nodiscard]] QuadElem conj() const { return {x_, -y_, m_}; }
  [[nodiscard]] Rational norm() const { return x_ * x_ - Rational(m_) * y_ * y_; }
  [[nodiscard]] Rational trace() const { return x_ + x_; }
  [[nodiscard]] QuadElem inverse() const;

  /// Sign of the image under the real embedding sending sqrt(m) to
  /// +sqrt(m) (`which` == 1) or -sqrt(m) (`which` == 2). Requires m > 0 or y == 0.
  [[nodiscard]] int real_sign(int which) const;

  /// Plain-text form such as `(7+sqrt(29))/10`.
  [[nodiscard]] std::string to_string() const;

  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o) { return *this *= o.inverse(); }

  friend QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
  friend QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
  friend QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }
  friend QuadElem operator/(QuadElem a, const QuadElem& b) { return a /= b; }
  friend QuadElem operator-(const QuadElem& a) { return {-a.x_, -a.y_, a.m_}; }

  friend bool operator==(const QuadElem& a, const QuadElem& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && (a.y_.is_zero() || a.m_ == b.m_);
  }

 private:
  void adopt_tag(const BigInt& other);

  Rational x_;
  Rational y_;
  BigInt m_ = 0;
};

/// Throws std::invalid_argument unless m is squarefree and m not in {0, 1}.
void validate_field_tag(const BigInt& m);

/// Square root of `v` inside Q(sqrt(m)) (m == 0 means Q), if one exists.
std::optional<QuadElem> sqrt_in_field(const QuadElem& v, const BigInt& m);

/// Tags a bare rational with field m.
inline QuadElem in_field(const Rational& x, const BigInt& m) { return {x, Rational(0), m}; }

}  // namespace chatelet
