#include "chatelet/quad.hpp"

#include <stdexcept>

#include "chatelet/arith.hpp"

namespace chatelet {

QuadElem::QuadElem(Rational x, Rational y, BigInt m) : x_(std::move(x)), y_(std::move(y)), m_(std::move(m)) {
  if (m_ == 1 || (m_ == 0 && !y_.is_zero())) {
    throw std::invalid_argument("QuadElem: field tag must be a squarefree integer other than 0 and 1");
  }
}

void QuadElem::adopt_tag(const BigInt& other) {
  if (other == 0 || other == m_) return;
  if (m_ == 0) {
    m_ = other;
    return;
  }
  throw std::invalid_argument("QuadElem: mixing Q(sqrt(" + m_.get_str() + ")) and Q(sqrt(" + other.get_str() + "))");
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  adopt_tag(o.m_);
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  adopt_tag(o.m_);
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  adopt_tag(o.m_);
  const Rational nx = x_ * o.x_ + Rational(m_) * y_ * o.y_;
  const Rational ny = x_ * o.y_ + y_ * o.x_;
  x_ = nx;
  y_ = ny;
  return *this;
}

QuadElem QuadElem::inverse() const {
  if (is_zero()) throw std::domain_error("QuadElem: inverse of zero");
  const Rational n = norm();
  return {x_ / n, -y_ / n, m_};
}

int QuadElem::real_sign(int which) const {
  const Rational y = which == 1 ? y_ : -y_;
  if (y.is_zero()) return x_.sign();
  if (m_ <= 0) throw std::domain_error("QuadElem: no real embedding of an imaginary quadratic element");
  if (x_.is_zero()) return y.sign();
  if (x_.sign() == y.sign()) return x_.sign();
  // Opposite signs: compare x^2 with m*y^2.
  const int c = (x_ * x_ <=> Rational(m_) * y * y) > 0 ? 1 : -1;
  return c > 0 ? x_.sign() : y.sign();
}

std::string QuadElem::to_string() const {
  if (y_.is_zero()) return x_.to_string();
  BigInt d;
  mpz_lcm(d.get_mpz_t(), x_.den().get_mpz_t(), y_.den().get_mpz_t());
  const BigInt xn = x_.num() * (d / x_.den());
  const BigInt yn = y_.num() * (d / y_.den());
  std::string inner;
  if (xn != 0) inner = xn.get_str();
  const std::string root = "sqrt(" + m_.get_str() + ")";
  if (yn == 1) {
    inner += (xn != 0 ? "+" : "") + root;
  } else if (yn == -1) {
    inner += "-" + root;
  } else {
    inner += (yn > 0 && xn != 0 ? "+" : "") + yn.get_str() + "*" + root;
  }
  if (d == 1) return inner;
  return "(" + inner + ")/" + d.get_str();
}

void validate_field_tag(const BigInt& m) {
  if (m == 0 || m == 1) throw std::invalid_argument("field tag m must not be 0 or 1");
  if (squarefree_part(Rational(m)) != m) {
    throw std::invalid_argument("field tag m = " + m.get_str() + " is not squarefree");
  }
}

std::optional<QuadElem> sqrt_in_field(const QuadElem& v, const BigInt& m) {
  if (v.is_zero()) return QuadElem(Rational(0));
  if (v.is_rational()) {
    const Rational& x = v.x();
    if (is_rational_square(x)) return in_field(rational_sqrt(x), m);
    if (m != 0 && is_rational_square(x / Rational(m))) {
      return QuadElem(Rational(0), rational_sqrt(x / Rational(m)), m);
    }
    return std::nullopt;
  }
  // (u + w sqrt(m))^2 = x + y sqrt(m)  =>  u^2 + m w^2 = x, 2uw = y.
  const Rational n = v.norm();
  if (!is_rational_square(n)) return std::nullopt;
  const Rational root_n = rational_sqrt(n);
  for (const Rational& candidate : {(v.x() + root_n) / Rational(2), (v.x() - root_n) / Rational(2)}) {
    if (candidate.is_zero() || !is_rational_square(candidate)) continue;
    const Rational u = rational_sqrt(candidate);
    const Rational w = v.y() / (Rational(2) * u);
    QuadElem r(u, w, v.m());
    if (r * r == v) return r;
  }
  return std::nullopt;
}

}  // namespace chatelet
