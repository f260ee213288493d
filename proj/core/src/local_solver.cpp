#include "chatelet/local_solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "chatelet/arith.hpp"
#include "chatelet/real_roots.hpp"

namespace chatelet {

// ---------------------------------------------------------------- Completion

Completion Completion::of(const Place& v) {
  Completion c;
  c.base_ = v;
  c.kind_ = v.is_real() ? Kind::rational_real : Kind::rational_finite;
  if (!v.is_real()) c.init_finite();
  return c;
}

Completion Completion::of(const ExtPlace& w) {
  Completion c;
  c.base_ = w.base;
  c.ext_ = w;
  c.m_ = w.m;
  if (w.base.is_real()) {
    c.kind_ = w.behavior == Splitting::split ? Kind::real_split : Kind::complex;
  } else {
    c.kind_ = w.behavior == Splitting::split ? Kind::split_finite : Kind::nonsplit_finite;
    c.init_finite();
  }
  return c;
}

void Completion::init_finite() {
  const BigInt& p = base_.prime();
  const bool ramified = kind_ == Kind::nonsplit_finite && ext_->behavior == Splitting::ramified;
  const bool inert = kind_ == Kind::nonsplit_finite && ext_->behavior == Splitting::inert;
  e_ = ramified ? 2 : 1;
  w2_ = p == 2 ? e_ : 0;
  if (ramified) {
    pi_ = (p == 2 && ((m_ % 4) + 4) % 4 == 3) ? QuadElem(Rational(1), Rational(1), m_) : QuadElem::sqrt_of(m_);
  } else {
    pi_ = embed(Rational(p));
  }
  if (inert && p == 2) {
    const QuadElem theta(Rational(1, 2), Rational(1, 2), m_);
    residues_ = {embed(0), embed(1), theta, theta + embed(1)};
  } else if (inert) {
    const long pl = p.get_si();
    for (long x = 0; x < pl; ++x) {
      for (long y = 0; y < pl; ++y) residues_.emplace_back(Rational(x), Rational(y), m_);
    }
  } else {
    const long pl = p.get_si();
    for (long x = 0; x < pl; ++x) residues_.push_back(embed(Rational(x)));
  }
}

std::string Completion::to_string() const {
  if (!ext_) return base_.to_string();
  return ext_->to_string();
}

int Completion::valuation(const QuadElem& x) const {
  switch (kind_) {
    case Kind::rational_finite:
      return padic_valuation(x.x(), base_.prime());
    case Kind::split_finite:
    case Kind::nonsplit_finite:
      return ext_valuation(x, *ext_);
    default:
      throw std::domain_error("valuation at an archimedean place");
  }
}

int Completion::symbol(const Rational& a, const QuadElem& x) const {
  switch (kind_) {
    case Kind::rational_finite:
    case Kind::rational_real:
      return hilbert_symbol(a, x.x(), base_);
    case Kind::split_finite:
      return hilbert_symbol(a, split_image(x, *ext_), base_);
    case Kind::nonsplit_finite:
      // Projection formula: (a, x)_w = (a, N x)_p for rational a.
      return hilbert_symbol(a, x.norm(), base_);
    case Kind::real_split:
      return (a.sign() < 0 && x.real_sign(ext_->which) < 0) ? -1 : 1;
    case Kind::complex:
      return 1;
  }
  return 1;
}

int Completion::real_sign(const QuadElem& x) const {
  switch (kind_) {
    case Kind::rational_real:
      return x.x().sign();
    case Kind::real_split:
      return x.real_sign(ext_->which);
    default:
      throw std::domain_error("real_sign at a non-real place");
  }
}

bool Completion::is_square(const Rational& a) const {
  switch (kind_) {
    case Kind::rational_finite:
    case Kind::rational_real:
      return is_square_local(a, base_);
    case Kind::split_finite:
      return is_square_local(a, base_);
    case Kind::nonsplit_finite:
      return is_square_ext(embed(a), *ext_);
    case Kind::real_split:
      return a.sign() > 0;
    case Kind::complex:
      return true;
  }
  return false;
}

std::vector<Completion> completions_above(const Place& v, const Field& field) {
  std::vector<Completion> out;
  if (field.is_rational()) {
    out.push_back(Completion::of(v));
  } else {
    for (const auto& w : places_above(v, field.m)) out.push_back(Completion::of(w));
  }
  return out;
}

// ---------------------------------------------------------------- witnesses

std::string Witness::to_string() const {
  switch (kind) {
    case WitnessKind::infinity_fiber: return "fiber at infinity";
    case WitnessKind::fiber: return "t = " + t.to_string();
    case WitnessKind::singular_fiber:
      return std::string("singular fiber near ") + (inverted ? "1/t = " : "t = ") + t.to_string();
  }
  return "?";
}

namespace {

constexpr int kInfinity = std::numeric_limits<int>::max() / 4;

KPoly chart_poly(const KPoly& g, bool inverted, int degree) { return inverted ? g.reversed(degree) : g; }

int content_valuation(const Completion& v, const KPoly& g) {
  int c = kInfinity;
  for (const QuadElem& x : g.coeffs()) {
    if (!x.is_zero()) c = std::min(c, v.valuation(x));
  }
  return c;
}

// Newton: a root of g lies within w-distance >= r of t0.
bool hensel_root(const Completion& v, const KPoly& shifted, int content, int r) {
  const QuadElem& g0 = shifted.coeffs().front();
  if (g0.is_zero()) return true;
  const QuadElem g1 = shifted.coeff(1);
  if (g1.is_zero()) return false;
  const int v0 = v.valuation(g0) - content;
  const int v1 = v.valuation(g1) - content;
  return v0 > 2 * v1 && v0 - v1 >= r;
}

struct Chart {
  bool inverted = false;
  KPoly f;
  int content = 0;
  std::vector<KPoly> reps;
};

struct Ball {
  int chart;
  QuadElem t0;
  int r;
};

struct Exploration {
  bool any = false;
  std::set<unsigned> vectors;
  std::optional<Witness> smooth;
  std::optional<Witness> singular;
};

class BallEngine {
 public:
  BallEngine(const ChateletSurface& X, const Completion& v, const std::vector<KPoly>& reps)
      : X_(X), v_(v), depth_(refinement_depth(X, v)), generators_(static_cast<int>(reps.size() / 2)) {
    const KPoly f = lift(X.cP(), v.m());
    for (bool inverted : {false, true}) {
      Chart ch;
      ch.inverted = inverted;
      ch.f = chart_poly(f, inverted, 4);
      ch.content = content_valuation(v, ch.f);
      for (const KPoly& g : reps) ch.reps.push_back(chart_poly(g, inverted, g.degree()));
      charts_.push_back(std::move(ch));
    }
  }

  Exploration run(bool existence) {
    Exploration out;
    std::vector<Ball> stack;
    stack.push_back({1, v_.embed(0), 1});
    stack.push_back({0, v_.embed(0), 0});
    while (!stack.empty()) {
      const Ball b = stack.back();
      stack.pop_back();
      const Chart& ch = charts_[static_cast<std::size_t>(b.chart)];
      const KPoly shifted = ch.f.taylor_shift(b.t0);
      bool subdivide = true;
      if (auto f0 = constant_value(shifted, b.r)) {
        if (v_.symbol(X_.a(), *f0) == -1) continue;
        out.any = true;
        if (existence) {
          out.smooth = fiber_witness(ch, b.t0);
          return out;
        }
        if (auto vec = vector_at(ch, b)) {
          out.vectors.insert(*vec);
          subdivide = false;
        }
      } else if (hensel_root(v_, shifted, ch.content, b.r)) {
        if (existence) {
          if (!out.singular) out.singular = Witness{WitnessKind::singular_fiber, b.t0, ch.inverted};
          out.any = true;
        } else if (auto vec = vector_at(ch, b)) {
          out.any = true;
          out.vectors.insert(*vec);
          subdivide = false;
        }
      }
      if (!subdivide) continue;
      if (b.r >= depth_) {
        if (existence && out.singular) continue;
        throw PrecisionExhausted("ball refinement exceeded depth " + std::to_string(depth_) + " at " + v_.to_string());
      }
      const QuadElem scale = power(v_.uniformizer(), b.r);
      const auto& res = v_.residues();
      for (auto it = res.rbegin(); it != res.rend(); ++it) {
        stack.push_back({b.chart, b.t0 + scale * *it, b.r + 1});
      }
    }
    if (existence && out.singular) out.any = true;
    return out;
  }

 private:
  static QuadElem power(const QuadElem& x, int k) {
    QuadElem out(1);
    for (int i = 0; i < k; ++i) out *= x;
    return out;
  }

  // Value of the polynomial at t0 when its square class is constant on the ball.
  std::optional<QuadElem> constant_value(const KPoly& shifted, int r) const {
    if (shifted.is_zero()) return std::nullopt;
    const QuadElem& g0 = shifted.coeffs().front();
    if (g0.is_zero()) return std::nullopt;
    const int bound = v_.valuation(g0) + 2 * v_.two_valuation() + 1;
    for (int k = 1; k <= shifted.degree(); ++k) {
      const QuadElem& ck = shifted.coeffs()[static_cast<std::size_t>(k)];
      if (!ck.is_zero() && v_.valuation(ck) + k * r < bound) return std::nullopt;
    }
    return g0;
  }

  std::optional<unsigned> vector_at(const Chart& ch, const Ball& b) const {
    unsigned vec = 0;
    for (int i = 0; i < generators_; ++i) {
      std::optional<QuadElem> value;
      for (int k = 0; k < 2 && !value; ++k) {
        value = constant_value(ch.reps[static_cast<std::size_t>(2 * i + k)].taylor_shift(b.t0), b.r);
      }
      if (!value) return std::nullopt;
      if (v_.symbol(X_.a(), *value) == -1) vec |= 1U << static_cast<unsigned>(i);
    }
    return vec;
  }

  Witness fiber_witness(const Chart& ch, const QuadElem& t0) const {
    if (ch.inverted && t0.is_zero()) return Witness{WitnessKind::infinity_fiber, t0};
    return Witness{WitnessKind::fiber, ch.inverted ? t0.inverse() : t0};
  }

  const ChateletSurface& X_;
  const Completion& v_;
  int depth_;
  int generators_;
  std::vector<Chart> charts_;
};

std::vector<KPoly> representatives(const ChateletSurface& X, const Field& field,
                                   const std::vector<BrauerClass>& classes) {
  std::vector<KPoly> reps;
  for (const BrauerClass& A : classes) {
    reps.push_back(A.symbol_poly());
    reps.push_back(class_complement(X, field, A).symbol_poly());
  }
  return reps;
}

std::vector<Rational> real_samples(const ChateletSurface& X) { return real_sample_points(X.P()); }

}  // namespace

int refinement_depth(const ChateletSurface& X, const Completion& v) {
  if (v.archimedean()) return 0;
  const BigInt& p = v.base().prime();
  const QPoly monic = X.monic_P();
  int lowest = 0;
  for (const Rational& c : monic.coeffs()) {
    if (!c.is_zero()) lowest = std::min(lowest, padic_valuation(c, p));
  }
  const int kappa = -lowest;
  const int vd = std::abs(padic_valuation(discriminant(monic), p));
  const int v0 = monic.coeff(0).is_zero() ? 0 : std::abs(padic_valuation(monic.coeff(0), p));
  return v.ramification() * (2 * vd + 8 * kappa + 2 * v0) + 2 * v.two_valuation() + 8;
}

bool recertify(const ChateletSurface& X, const Completion& v, const Witness& w) {
  const KPoly f = lift(X.cP(), v.m());
  switch (w.kind) {
    case WitnessKind::infinity_fiber:
      return v.symbol(X.a(), v.embed(X.c() * X.P().lc())) == 1;
    case WitnessKind::fiber: {
      const QuadElem value = f.eval(w.t);
      return !value.is_zero() && v.symbol(X.a(), value) == 1;
    }
    case WitnessKind::singular_fiber: {
      if (v.archimedean()) return true;
      const KPoly g = chart_poly(f, w.inverted, 4);
      return hensel_root(v, g.taylor_shift(w.t), content_valuation(v, g), 0);
    }
  }
  return false;
}

LocalVerdict local_points(const ChateletSurface& X, const Completion& v) {
  LocalVerdict out;
  out.place = v.to_string();
  const Witness infinity{WitnessKind::infinity_fiber, v.embed(0)};
  if (v.is_square(X.a()) || recertify(X, v, infinity)) {
    out.nonempty = true;
    out.witness = infinity;
    return out;
  }
  if (v.archimedean()) {
    const QPoly f = X.cP();
    for (const Rational& t : real_samples(X)) {
      if (v.symbol(X.a(), v.embed(f.eval(t))) == 1) {
        out.nonempty = true;
        out.witness = Witness{WitnessKind::fiber, v.embed(t)};
        return out;
      }
    }
    return out;
  }
  BallEngine engine(X, v, {});
  const Exploration e = engine.run(true);
  out.nonempty = e.any;
  if (e.smooth) {
    out.witness = e.smooth;
  } else if (e.singular) {
    out.witness = e.singular;
  }
  return out;
}

std::set<InvariantValue> InvariantProfile::values(int i) const {
  std::set<InvariantValue> out;
  for (unsigned vec : vectors) out.insert(((vec >> static_cast<unsigned>(i)) & 1U) != 0 ? InvariantValue::half() : InvariantValue());
  return out;
}

std::string InvariantProfile::to_string() const {
  std::string s = "{";
  bool first = true;
  for (unsigned vec : vectors) {
    if (!first) s += ", ";
    first = false;
    if (generators == 1) {
      s += (vec & 1U) != 0 ? "1/2" : "0";
      continue;
    }
    s += "(";
    for (int i = 0; i < generators; ++i) {
      if (i > 0) s += ",";
      s += ((vec >> static_cast<unsigned>(i)) & 1U) != 0 ? "1/2" : "0";
    }
    s += ")";
  }
  return s + "}";
}

InvariantProfile evaluation_profile(const ChateletSurface& X, const Field& field,
                                    const std::vector<BrauerClass>& classes, const Completion& v) {
  InvariantProfile out;
  out.place = v.to_string();
  out.generators = static_cast<int>(classes.size());
  if (v.is_square(X.a())) {
    out.vectors.insert(0);
    return out;
  }
  const auto reps = representatives(X, field, classes);
  if (v.archimedean()) {
    const QPoly f = X.cP();
    auto add = [&](const std::optional<Rational>& t) {
      const QuadElem fv = t ? v.embed(f.eval(*t)) : v.embed(X.c() * X.P().lc());
      if (v.symbol(X.a(), fv) == -1) return;
      unsigned vec = 0;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const KPoly& g = reps[2 * i];
        const QuadElem gv = t ? g.eval(v.embed(*t)) : g.lc();
        if (v.symbol(X.a(), gv) == -1) vec |= 1U << static_cast<unsigned>(i);
      }
      out.vectors.insert(vec);
    };
    add(std::nullopt);
    for (const Rational& t : real_samples(X)) add(t);
    return out;
  }
  BallEngine engine(X, v, reps);
  out.vectors = engine.run(false).vectors;
  return out;
}

std::set<InvariantValue> achievable_invariants(const ChateletSurface& X, const Field& field, const BrauerClass& A,
                                               const Completion& v) {
  return evaluation_profile(X, field, {A}, v).values(0);
}

}  // namespace chatelet
