#include "chatelet/brauer.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace chatelet {

namespace {

// Rank over F_2 of a list of bit vectors.
int rank_f2(std::vector<EpsilonVector> rows) {
  int rank = 0;
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != static_cast<std::size_t>(rank) && rows[r][col] != 0) {
        for (std::size_t k = 0; k < n; ++k) rows[r][k] ^= rows[static_cast<std::size_t>(rank)][k];
      }
    }
    ++rank;
  }
  return rank;
}

BrauerStructure structure_from_rank(int r) {
  switch (r) {
    case 0: return BrauerStructure::trivial;
    case 1: return BrauerStructure::Z2;
    case 2: return BrauerStructure::Z2xZ2;
    default: throw std::logic_error("Brauer rank above 2");
  }
}

}  // namespace

bool admissible(const EpsilonVector& eps, const std::vector<ClosedPoint>& points) {
  int total = 0;
  for (std::size_t i = 0; i < eps.size(); ++i) total += eps[i] * points[i].degree();
  return total % 2 == 0;
}

std::string to_string(const EpsilonVector& eps) {
  std::string s = "(";
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(eps[i]);
  }
  return s + ")";
}

std::string BrauerClass::to_string() const {
  const std::string body = chatelet::to_string(F);
  if (scalar == Rational(1)) return "(" + a.to_string() + ", " + body + ")";
  return "(" + a.to_string() + ", " + scalar.to_string() + "*(" + body + "))";
}

KPoly BrauerClass::symbol_poly() const {
  std::vector<QuadElem> c;
  for (const QuadElem& v : F.coeffs()) c.push_back(v * QuadElem(scalar));
  return KPoly(std::move(c));
}

std::string to_string(BrauerStructure s) {
  switch (s) {
    case BrauerStructure::trivial: return "0";
    case BrauerStructure::Z2: return "Z/2";
    case BrauerStructure::Z2xZ2: return "(Z/2)^2";
  }
  return "?";
}

std::string BrauerGroupDesc::pattern() const {
  std::vector<int> d;
  for (const auto& p : points) d.push_back(p.degree());
  return pattern_string(d);
}

std::vector<ClosedPoint> singular_points(const ChateletSurface& X, const Field& field) {
  std::vector<ClosedPoint> out;
  if (field.is_rational()) {
    for (const auto& [f, e] : factor_over_Q(X.P()).factors) out.push_back({lift(f, 0)});
  } else {
    for (const auto& [f, e] : factor_over_quad(X.P(), field.m).factors) out.push_back({f});
  }
  return out;
}

KPoly epsilon_product(const EpsilonVector& eps, const std::vector<ClosedPoint>& points, const Field& field) {
  KPoly F{field.is_rational() ? QuadElem(1) : in_field(Rational(1), field.m)};
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps[i] != 0) F = F * points[i].f;
  }
  return F;
}

BrauerGroupDesc brauer_group(const ChateletSurface& X, const Field& field) {
  BrauerGroupDesc d;
  d.field = field;
  d.points = singular_points(X, field);
  const std::size_t n = d.points.size();

  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (d.points[i].degree() % 2 != 0) odd.push_back(i);
  }
  std::vector<EpsilonVector> basis;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (d.points[i].degree() % 2 == 0) {
      EpsilonVector e(n, 0);
      e[i] = 1;
      basis.push_back(e);
    }
  }
  for (std::size_t k = 1; k < odd.size(); ++k) {
    EpsilonVector e(n, 0);
    e[odd.front()] = 1;
    e[odd[k]] = 1;
    basis.push_back(e);
  }
  std::sort(basis.begin(), basis.end(), std::greater<>());

  // Independent count: admissible space has dimension n or n - 1.
  bool any_odd = false;
  bool has_linear = false;
  bool has_quadratic = false;
  for (const auto& p : d.points) {
    any_odd = any_odd || p.degree() % 2 != 0;
    has_linear = has_linear || p.degree() == 1;
    has_quadratic = has_quadratic || p.degree() == 2;
  }
  d.admissible_rank = static_cast<int>(n) - (any_odd ? 1 : 0) - 1;
  if (static_cast<int>(basis.size()) != d.admissible_rank || rank_f2(basis) != d.admissible_rank) {
    throw std::logic_error("Brauer generator basis has the wrong rank");
  }
  BrauerStructure table = BrauerStructure::trivial;
  if (n == 4) {
    table = BrauerStructure::Z2xZ2;
  } else if (has_quadratic) {
    table = BrauerStructure::Z2;
  }
  d.structure = structure_from_rank(d.admissible_rank);
  if (d.structure != table) throw std::logic_error("Brauer case table disagrees with the admissible rank");
  d.informational = has_linear && has_quadratic;

  for (const auto& eps : basis) {
    if (!admissible(eps, d.points)) throw std::logic_error("inadmissible generator");
    BrauerClass A;
    A.eps = eps;
    A.a = X.a();
    A.F = epsilon_product(eps, d.points, field);
    d.generators.push_back(std::move(A));
  }
  return d;
}

RestrictionAnalysis restriction_analysis(const ChateletSurface& X, const BigInt& m) {
  RestrictionAnalysis r;
  r.base = brauer_group(X, Field{});
  r.ext = brauer_group(X, make_field(m));
  for (const auto& bp : r.base.points) {
    const KPoly lifted = lift(to_rational(bp.f), m);
    std::vector<int> above;
    for (std::size_t j = 0; j < r.ext.points.size(); ++j) {
      if (divmod(lifted, r.ext.points[j].f).second.is_zero()) above.push_back(static_cast<int>(j));
    }
    r.refinement.push_back(std::move(above));
  }
  const std::size_t n = r.ext.points.size();
  std::vector<EpsilonVector> rows;
  for (const auto& g : r.base.generators) {
    EpsilonVector img(n, 0);
    for (std::size_t i = 0; i < g.eps.size(); ++i) {
      for (int j : r.refinement[i]) img[static_cast<std::size_t>(j)] = g.eps[i];
    }
    r.image.push_back(img);
    rows.push_back(img);
  }
  rows.emplace_back(n, 1);
  r.image_rank = rank_f2(rows) - 1;
  r.surjective = r.image_rank == r.ext.admissible_rank;
  return r;
}

std::vector<BigInt> problematic_extensions(const ChateletSurface& X) {
  std::vector<BigInt> out;
  for (const auto& nf : detect_norm_form(X.P())) out.push_back(nf.m);
  return out;
}

BrauerClass class_complement(const ChateletSurface& X, const Field& field, const BrauerClass& A) {
  const auto points = singular_points(X, field);
  if (A.eps.size() != points.size()) throw std::invalid_argument("class_complement: class does not match the field");
  BrauerClass B;
  B.a = A.a;
  for (int bit : A.eps) B.eps.push_back(1 - bit);
  B.F = epsilon_product(B.eps, points, field);
  const Rational lead = X.c() * X.P().lc();
  B.scalar = lead / A.scalar;
  return B;
}

}  // namespace chatelet
