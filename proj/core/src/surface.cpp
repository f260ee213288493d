#include "chatelet/surface.hpp"

#include "chatelet/arith.hpp"

namespace chatelet {

ChateletSurface::ChateletSurface(Rational a, Rational c, QPoly P) : a_(std::move(a)), c_(std::move(c)), P_(std::move(P)) {
  if (a_.is_zero()) throw InvalidSurface("a must be nonzero");
  if (is_rational_square(a_)) throw InvalidSurface("a is a rational square");
  if (c_.is_zero()) throw InvalidSurface("c must be nonzero");
  if (P_.degree() != 4) throw InvalidSurface("degree-4 quartic required");
  if (discriminant(P_).is_zero()) throw InvalidSurface("P must be squarefree");
}

std::string ChateletSurface::to_string() const {
  return "y^2 - (" + a_.to_string() + ")*z^2 = (" + c_.to_string() + ")*(" + chatelet::to_string(P_) + ")";
}

Field make_field(const BigInt& m) {
  if (m == 0) return Field{};
  try {
    validate_field_tag(m);
  } catch (const std::invalid_argument& e) {
    throw InvalidSurface(e.what());
  }
  return Field{m};
}

}  // namespace chatelet
