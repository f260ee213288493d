#pragma once

#include <string>
#include <vector>

#include "chatelet/factor.hpp"
#include "chatelet/surface.hpp"

namespace chatelet {

/// Monic irreducible factor f_P of P over the field.
struct ClosedPoint {
  KPoly f;
  [[nodiscard]] int degree() const { return f.degree(); }
};

/// One bit per closed point, canonical order.
using EpsilonVector = std::vector<int>;

/// Whether sum eps_P deg(f_P) is even.
bool admissible(const EpsilonVector& eps, const std::vector<ClosedPoint>& points);

std::string to_string(const EpsilonVector& eps);

/// The quaternion symbol (a, scalar * F_eps(t)).
struct BrauerClass {
  EpsilonVector eps;
  Rational a;
  Rational scalar{1};
  KPoly F;

  [[nodiscard]] std::string to_string() const;
  /// scalar * F as a polynomial.
  [[nodiscard]] KPoly symbol_poly() const;
};

enum class BrauerStructure { trivial, Z2, Z2xZ2 };
std::string to_string(BrauerStructure s);

struct BrauerGroupDesc {
  Field field;
  std::vector<ClosedPoint> points;
  BrauerStructure structure = BrauerStructure::trivial;
  std::vector<BrauerClass> generators;
  /// Rank of the admissible space modulo the all-ones vector.
  int admissible_rank = 0;
  /// Set when S has a degree-1 point as well as a degree-2 point; the group
  /// value is then informational, since X has a rational point anyway.
  bool informational = false;

  [[nodiscard]] std::string pattern() const;
};

/// Closed points of the singular fibres, ascending degree then coefficient
/// strings.
std::vector<ClosedPoint> singular_points(const ChateletSurface& X, const Field& field);

/// F_eps = prod f_P^eps_P.
KPoly epsilon_product(const EpsilonVector& eps, const std::vector<ClosedPoint>& points, const Field& field);

BrauerGroupDesc brauer_group(const ChateletSurface& X, const Field& field);

struct RestrictionAnalysis {
  BrauerGroupDesc base;
  BrauerGroupDesc ext;
  /// For each base point, the indices of the extension points above it.
  std::vector<std::vector<int>> refinement;
  /// Images of the base generators.
  std::vector<EpsilonVector> image;
  int image_rank = 0;
  bool surjective = false;
};

RestrictionAnalysis restriction_analysis(const ChateletSurface& X, const BigInt& m);

/// m such that S is one degree-4 point over Q that splits into two conjugate
/// degree-2 points over Q(sqrt(m)).
std::vector<BigInt> problematic_extensions(const ChateletSurface& X);

/// The class of all-ones minus eps, written (a, c lc(P) F_{1-eps}).
BrauerClass class_complement(const ChateletSurface& X, const Field& field, const BrauerClass& A);

}  // namespace chatelet
