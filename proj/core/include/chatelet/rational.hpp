#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace chatelet {

using BigInt = mpz_class;

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Text form is `[-]digits[/digits]`; `parse` accepts exactly that grammar
/// and `to_string` produces it (the denominator is omitted when it is 1).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  static Rational parse(std::string_view text);

  [[nodiscard]] const BigInt& num() const { return q_.get_num(); }
  [[nodiscard]] const BigInt& den() const { return q_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return q_; }

  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] bool is_integer() const { return den() == 1; }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] Rational pow(int exponent) const;
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

/// Parses a signed decimal integer; throws std::invalid_argument otherwise.
BigInt parse_integer(std::string_view text);

inline std::string to_string(const BigInt& n) { return n.get_str(); }

/// Fits-in-int64 conversion; throws std::overflow_error when it does not fit.
std::int64_t to_int64(const BigInt& n);

}  // namespace chatelet
