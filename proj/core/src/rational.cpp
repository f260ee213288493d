#include "chatelet/rational.hpp"

#include <limits>
#include <stdexcept>

namespace chatelet {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigInt parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  if (!all_digits(body)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  BigInt value(std::string(body), 10);
  return negative ? BigInt(-value) : value;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(den(), num());
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  BigInt n;
  BigInt d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::to_string() const {
  if (den() == 1) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::int64_t to_int64(const BigInt& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + n.get_str());
  return n.get_si();
}

}  // namespace chatelet
