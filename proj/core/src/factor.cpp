#include "chatelet/factor.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "chatelet/arith.hpp"

namespace chatelet {

namespace {

std::optional<Rational> field_sqrt(const Rational& v, const BigInt& /*m*/) {
  if (v.sign() < 0 || !is_rational_square(v)) return std::nullopt;
  return rational_sqrt(v);
}

std::optional<QuadElem> field_sqrt(const QuadElem& v, const BigInt& m) { return sqrt_in_field(v, m); }

Rational embed(const Rational& r, const BigInt& /*m*/, Rational* /*tag*/) { return r; }
QuadElem embed(const Rational& r, const BigInt& m, QuadElem* /*tag*/) { return in_field(r, m); }

template <class T>
T embed_as(const Rational& r, const BigInt& m) {
  return embed(r, m, static_cast<T*>(nullptr));
}

template <class T>
Poly<T> embed_poly(const QPoly& p, const BigInt& m) {
  std::vector<T> c;
  for (const Rational& v : p.coeffs()) c.push_back(embed_as<T>(v, m));
  return Poly<T>(std::move(c));
}

template <class T>
bool factor_less(const Poly<T>& a, const Poly<T>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return coefficient_strings(a) < coefficient_strings(b);
}

template <class T>
void normalize(Factorization<T>& f) {
  std::vector<std::pair<Poly<T>, int>> merged;
  for (auto& [g, e] : f.factors) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& x) { return x.first == g; });
    if (it == merged.end()) {
      merged.emplace_back(g, e);
    } else {
      it->second += e;
    }
  }
  std::sort(merged.begin(), merged.end(), [](const auto& x, const auto& y) { return factor_less(x.first, y.first); });
  f.factors = std::move(merged);
}

template <class T>
Poly<T> linear(const T& root) {
  return Poly<T>{-root, T(1)};
}

// Splitting of a monic rational quartic into two monic quadratics over
// Q (m == 0) or Q(sqrt(m)).
template <class T>
std::optional<std::pair<Poly<T>, Poly<T>>> split_two_quadratics(const QPoly& quartic, const BigInt& m) {
  const DepressedQuartic d = depress(quartic);
  const QPoly res = resolvent_cubic(quartic);
  std::vector<T> candidates;
  const auto rat = rational_roots(res);
  for (const Rational& y : rat) candidates.push_back(embed_as<T>(y, m));
  if constexpr (std::is_same_v<T, QuadElem>) {
    if (rat.size() == 1) {
      const QPoly cof = exact_div(res, QPoly{-rat.front(), Rational(1)});
      const Rational disc = cof.coeff(1) * cof.coeff(1) - Rational(4) * cof.coeff(0);
      if (!disc.is_zero() && squarefree_part(disc) == m) {
        const Rational h = rational_sqrt(disc / Rational(m));
        const Rational half = Rational(1, 2);
        candidates.emplace_back(-cof.coeff(1) * half, h * half, m);
        candidates.emplace_back(-cof.coeff(1) * half, -h * half, m);
      }
    }
  }
  const T p = embed_as<T>(d.p, m);
  const T q = embed_as<T>(d.q, m);
  const T r = embed_as<T>(d.r, m);
  const T two = embed_as<T>(Rational(2), m);
  const T one = embed_as<T>(Rational(1), m);
  const Poly<T> target = embed_poly<T>(quartic.monic(), m);
  const T back = embed_as<T>(d.shift, m);
  for (const T& y : candidates) {
    Poly<T> f1;
    Poly<T> f2;
    if (y.is_zero()) {
      const auto s = field_sqrt(p * p - T(4) * r, m);
      if (!s) continue;
      f1 = Poly<T>{(p + *s) / two, T(0), one};
      f2 = Poly<T>{(p - *s) / two, T(0), one};
    } else {
      const auto s = field_sqrt(y, m);
      if (!s) continue;
      const T a = (p + y - q / *s) / two;
      const T b = (p + y + q / *s) / two;
      f1 = Poly<T>{a, *s, one};
      f2 = Poly<T>{b, -*s, one};
    }
    f1 = f1.taylor_shift(back);
    f2 = f2.taylor_shift(back);
    if (f1 * f2 == target) return std::make_pair(f1, f2);
  }
  return std::nullopt;
}

BigInt eval_int(const std::vector<BigInt>& c, const BigInt& t) {
  BigInt acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

void divisors_of(const FactoredInteger& f, std::vector<BigInt>& out) {
  out.assign(1, BigInt(1));
  for (const auto& [p, e] : f.factors) {
    const std::size_t n = out.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * pk);
    }
  }
}

}  // namespace

std::vector<Rational> rational_roots(const QPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  QPoly q = p.monic();
  if (q.coeff(0).is_zero()) {
    roots.emplace_back(0);
    while (q.coeff(0).is_zero()) q = exact_div(q, QPoly{Rational(0), Rational(1)});
  }
  const int n = q.degree();
  if (n < 1) return roots;
  // s = D t turns q into a monic integer polynomial.
  BigInt den = 1;
  for (const Rational& c : q.coeffs()) den = lcm(den, c.den());
  std::vector<BigInt> s(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const Rational v = q.coeff(i) * Rational(ipow(den, static_cast<unsigned>(n - i)));
    s[static_cast<std::size_t>(i)] = v.num();
  }
  std::vector<BigInt> divs;
  divisors_of(factor_integer(s[0]), divs);
  for (const BigInt& d : divs) {
    for (const BigInt& cand : {BigInt(d), BigInt(-d)}) {
      if (eval_int(s, cand) == 0) roots.emplace_back(cand, den);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

QFactorization factor_over_Q(const QPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("factor_over_Q: constant polynomial");
  if (p.degree() > 4) throw std::domain_error("factor_over_Q: degree above 4 is not supported");
  QFactorization out;
  out.unit = p.lc();
  QPoly rest = p.monic();
  for (const Rational& r : rational_roots(rest)) {
    const QPoly lin = linear(r);
    int e = 0;
    while (rest.degree() >= 1 && rest.eval(r).is_zero()) {
      rest = exact_div(rest, lin);
      ++e;
    }
    out.factors.emplace_back(lin, e);
  }
  if (rest.degree() == 4) {
    if (auto s = split_two_quadratics<Rational>(rest, 0)) {
      out.factors.emplace_back(s->first, 1);
      out.factors.emplace_back(s->second, 1);
      rest = QPoly{Rational(1)};
    }
  }
  if (rest.degree() >= 1) out.factors.emplace_back(rest, 1);
  normalize(out);
  return out;
}

KFactorization factor_over_quad(const QPoly& p, const BigInt& m) {
  validate_field_tag(m);
  const QFactorization base = factor_over_Q(p);
  KFactorization out;
  out.unit = in_field(base.unit, m);
  for (const auto& [f, e] : base.factors) {
    if (f.degree() == 2) {
      const Rational disc = f.coeff(1) * f.coeff(1) - Rational(4) * f.coeff(0);
      if (auto s = sqrt_in_field(in_field(disc, m), m)) {
        const QuadElem b = in_field(f.coeff(1), m);
        const QuadElem half = in_field(Rational(1, 2), m);
        out.factors.emplace_back(linear((-b + *s) * half), e);
        out.factors.emplace_back(linear((-b - *s) * half), e);
        continue;
      }
    }
    if (f.degree() == 4) {
      if (auto s = split_two_quadratics<QuadElem>(f, m)) {
        out.factors.emplace_back(s->first, e);
        out.factors.emplace_back(s->second, e);
        continue;
      }
    }
    out.factors.emplace_back(lift(f, m), e);
  }
  normalize(out);
  return out;
}

std::string pattern_string(const std::vector<int>& degrees) {
  std::vector<int> d = degrees;
  std::sort(d.begin(), d.end());
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) s += "+";
    s += std::to_string(d[i]);
  }
  return s;
}

DepressedQuartic depress(const QPoly& quartic) {
  if (quartic.degree() != 4) throw std::invalid_argument("depress: quartic required");
  const QPoly q = quartic.monic();
  DepressedQuartic d;
  d.shift = q.coeff(3) / Rational(4);
  const QPoly u = q.taylor_shift(-d.shift);
  d.p = u.coeff(2);
  d.q = u.coeff(1);
  d.r = u.coeff(0);
  return d;
}

QPoly resolvent_cubic(const QPoly& quartic) {
  const DepressedQuartic d = depress(quartic);
  return QPoly{-(d.q * d.q), d.p * d.p - Rational(4) * d.r, Rational(2) * d.p, Rational(1)};
}

std::string to_string(GaloisType g) {
  switch (g) {
    case GaloisType::S4: return "S4";
    case GaloisType::A4: return "A4";
    case GaloisType::D4: return "D4";
    case GaloisType::V4: return "V4";
    case GaloisType::C4: return "C4";
    case GaloisType::reducible: return "reducible";
  }
  return "?";
}

GaloisType quartic_galois_group(const QPoly& p) {
  if (p.degree() != 4) throw std::invalid_argument("quartic_galois_group: quartic required");
  const QFactorization f = factor_over_Q(p);
  if (f.factors.size() != 1 || f.factors.front().second != 1) {
    throw std::invalid_argument("quartic_galois_group: reducible input");
  }
  const auto roots = rational_roots(resolvent_cubic(p));
  const Rational disc = discriminant(p);
  if (roots.empty()) return is_rational_square(disc) ? GaloisType::A4 : GaloisType::S4;
  if (roots.size() == 3) return GaloisType::V4;
  const BigInt m = squarefree_part(disc);
  if (m == 1) return GaloisType::V4;
  return factor_over_quad(p, m).factors.size() > 1 ? GaloisType::C4 : GaloisType::D4;
}

std::vector<NormForm> detect_norm_form(const QPoly& p) {
  if (p.degree() != 4) throw std::invalid_argument("degree-4 quartic required");
  if (discriminant(p).is_zero()) throw std::invalid_argument("P must be squarefree");
  const QFactorization base = factor_over_Q(p);
  if (base.factors.size() != 1) return {};
  const DepressedQuartic d = depress(p);
  const QPoly res = resolvent_cubic(p);
  const auto roots = rational_roots(res);
  std::set<BigInt> candidates;
  for (const Rational& y : roots) {
    if (y.is_zero()) {
      const Rational disc = d.p * d.p - Rational(4) * d.r;
      if (!disc.is_zero()) candidates.insert(squarefree_part(disc));
    } else {
      candidates.insert(squarefree_part(y));
    }
  }
  if (roots.size() == 1) {
    const QPoly cof = exact_div(res, QPoly{-roots.front(), Rational(1)});
    const Rational disc = cof.coeff(1) * cof.coeff(1) - Rational(4) * cof.coeff(0);
    if (!disc.is_zero()) candidates.insert(squarefree_part(disc));
  }
  candidates.erase(BigInt(1));
  std::vector<NormForm> out;
  for (const BigInt& m : candidates) {
    const KFactorization kf = factor_over_quad(p, m);
    if (kf.factors.size() != 2) continue;
    auto positive_part = [](const KPoly& g) {
      for (const QuadElem& c : g.coeffs()) {
        if (!c.is_rational()) return c.y().sign() > 0;
      }
      return false;
    };
    NormForm nf;
    nf.m = m;
    nf.g = positive_part(kf.factors[0].first) ? kf.factors[0].first : kf.factors[1].first;
    nf.scalar = p.lc();
    out.push_back(std::move(nf));
  }
  std::sort(out.begin(), out.end(), [](const NormForm& x, const NormForm& y) {
    const BigInt ax = abs(x.m);
    const BigInt ay = abs(y.m);
    if (ax != ay) return ax < ay;
    return x.m > y.m;
  });
  return out;
}

}  // namespace chatelet
