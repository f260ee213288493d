#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chatelet/quad.hpp"
#include "chatelet/rational.hpp"

namespace chatelet {

/// Dense univariate polynomial in t, coefficients ascending by degree.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients
/// and degree -1. `T` is Rational or QuadElem.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly monomial(const T& coeff, int degree) {
    std::vector<T> c(static_cast<std::size_t>(degree) + 1);
    c.back() = coeff;
    return Poly(std::move(c));
  }

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const std::vector<T>& coeffs() const { return c_; }
  [[nodiscard]] T coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : T{};
  }
  [[nodiscard]] const T& lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  template <class U>
  [[nodiscard]] U eval(const U& t) const {
    U acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + U(*it);
    return acc;
  }

  [[nodiscard]] Poly derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<long>(i)));
    return Poly(std::move(d));
  }

  [[nodiscard]] Poly monic() const {
    if (c_.empty()) return *this;
    const T inv = T(1) / lc();
    std::vector<T> out;
    out.reserve(c_.size());
    for (const T& v : c_) out.push_back(v * inv);
    return Poly(std::move(out));
  }

  [[nodiscard]] Poly scaled(const T& s) const {
    std::vector<T> out;
    out.reserve(c_.size());
    for (const T& v : c_) out.push_back(v * s);
    return Poly(std::move(out));
  }

  /// Coefficients of u -> F(t0 + u).
  [[nodiscard]] Poly taylor_shift(const T& t0) const {
    std::vector<T> c = c_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = n - 1; j > i; --j) c[j - 1] += c[j] * t0;
    }
    return Poly(std::move(c));
  }

  /// t^n F(1/t) for n = degree.
  [[nodiscard]] Poly reversed(int n) const {
    std::vector<T> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= degree(); ++i) out[static_cast<std::size_t>(n - i)] = c_[static_cast<std::size_t>(i)];
    return Poly(std::move(out));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return a.scaled(T(-1)); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<T> c_;
};

using QPoly = Poly<Rational>;
using KPoly = Poly<QuadElem>;

/// Euclidean division; throws std::domain_error on a zero divisor.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<T> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly<T>{}, a};
  std::vector<T> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  const T inv = T(1) / b.lc();
  for (int i = a.degree(); i >= db; --i) {
    const T q = rem[static_cast<std::size_t>(i)] * inv;
    quo[static_cast<std::size_t>(i - db)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<T>(std::move(quo)), Poly<T>(std::move(rem))};
}

/// Monic gcd (zero when both inputs are zero).
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
template <class T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
  return q;
}

/// Lifts a rational polynomial into Q(sqrt(m)).
KPoly lift(const QPoly& p, const BigInt& m);

/// Rational polynomial view of a KPoly whose coefficients are all rational.
QPoly to_rational(const KPoly& p);

/// Galois conjugate of every coefficient.
KPoly conjugate(const KPoly& p);

/// Resultant via the Sylvester determinant.
Rational resultant(const QPoly& a, const QPoly& b);

/// Discriminant (-1)^(n(n-1)/2) Res(P, P') / lc(P).
Rational discriminant(const QPoly& p);

/// Plain text, descending degree, variable `t`: `t^2 + (7+sqrt(29))/10`.
std::string to_string(const QPoly& p);
std::string to_string(const KPoly& p);

/// Coefficients as exact strings, ascending by degree.
std::vector<std::string> coefficient_strings(const QPoly& p);
std::vector<std::string> coefficient_strings(const KPoly& p);

}  // namespace chatelet
